use std::collections::VecDeque;
use std::sync::{PoisonError, RwLock};

use super::ExactRational;

/// Memoized terms over one contiguous window `[start, start + len)` that
/// always contains indices 0 and 1.
pub(super) struct TermCache {
    window: RwLock<Window>,
}

#[derive(Clone)]
struct Window {
    start: i64,
    values: VecDeque<ExactRational>,
}

impl Window {
    fn get(&self, n: i64) -> Option<&ExactRational> {
        let offset = n.checked_sub(self.start)?;
        usize::try_from(offset).ok().and_then(|i| self.values.get(i))
    }

    fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    fn extend_to(&mut self, p: &ExactRational, q: &ExactRational, n: i64) {
        while self.end() <= n {
            let len = self.values.len();
            let next = p * &self.values[len - 1] + q * &self.values[len - 2];
            self.values.push_back(next);
        }
        while self.start > n {
            // W_{s-1} = (W_{s+1} - p W_s) / q
            let prev = (&self.values[1] - p * &self.values[0]) / q;
            self.values.push_front(prev);
            self.start -= 1;
        }
    }
}

impl TermCache {
    pub(super) fn new(w0: ExactRational, w1: ExactRational) -> Self {
        Self { window: RwLock::new(Window { start: 0, values: VecDeque::from([w0, w1]) }) }
    }

    pub(super) fn get(&self, p: &ExactRational, q: &ExactRational, n: i64) -> ExactRational {
        {
            let w = self.window.read().unwrap_or_else(PoisonError::into_inner);
            if let Some(v) = w.get(n) {
                return v.clone();
            }
        }
        let mut w = self.window.write().unwrap_or_else(PoisonError::into_inner);
        w.extend_to(p, q, n);
        w.get(n).cloned().expect("window covers n after extension")
    }

    pub(super) fn len(&self) -> usize {
        self.window.read().unwrap_or_else(PoisonError::into_inner).values.len()
    }
}

impl Clone for TermCache {
    fn clone(&self) -> Self {
        let w = self.window.read().unwrap_or_else(PoisonError::into_inner);
        Self { window: RwLock::new(w.clone()) }
    }
}
