//! Bidirectional evaluation of constant-coefficient second-order recurrences.
//!
//! A [`SequenceSpec`] fixes `(p, q)` and the seeds `W_0`, `W_1`. Terms for
//! `n >= 2` follow `W_n = p W_{n-1} + q W_{n-2}`; terms for `n < 0` invert it,
//! `W_{n-2} = (W_n - p W_{n-1}) / q`, which is why `q = 0` is rejected up front.

mod builtin;
mod cache;
mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

pub use builtin::{builtin, negative_index_closed_form, Builtin};

use crate::error::{Error, Result};
use cache::TermCache;

/// The universal scalar: an arbitrary-precision rational kept in lowest
/// terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

pub(crate) fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

/// Recurrence coefficients `(p, q)` of `W_n = p W_{n-1} + q W_{n-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecurrencePair {
    p: BigInt,
    q: BigInt,
}

impl RecurrencePair {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::ZeroQ);
        }
        Ok(Self { p: p.into(), q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

impl fmt::Display for RecurrencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// A bidirectional sequence: recurrence pair plus seeds.
///
/// The spec itself is immutable; the only interior state is a memo of
/// already computed terms, covering one contiguous index window around
/// `[0, 1]`. Clones carry a private copy of the memo, so a worker can take
/// its own clone to avoid sharing the lock.
#[derive(Clone)]
pub struct SequenceSpec {
    pair: RecurrencePair,
    w0: ExactRational,
    w1: ExactRational,
    name: Option<String>,
    p: ExactRational,
    q: ExactRational,
    cache: TermCache,
}

impl SequenceSpec {
    pub fn new(pair: RecurrencePair, w0: ExactRational, w1: ExactRational) -> Self {
        let p = ExactRational::from_integer(pair.p.clone());
        let q = ExactRational::from_integer(pair.q.clone());
        let cache = TermCache::new(w0.clone(), w1.clone());
        Self { pair, w0, w1, name: None, p, q, cache }
    }

    /// Integer coefficients and seeds; fails only when `q == 0`.
    pub fn from_integers(p: i64, q: i64, w0: i64, w1: i64) -> Result<Self> {
        Ok(Self::new(RecurrencePair::new(p, q)?, int(w0), int(w1)))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn pair(&self) -> &RecurrencePair {
        &self.pair
    }

    pub fn seeds(&self) -> (&ExactRational, &ExactRational) {
        (&self.w0, &self.w1)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `true` when both sequences obey the same recurrence relation.
    pub fn shares_recurrence(&self, other: &SequenceSpec) -> bool {
        self.pair == other.pair
    }

    /// `W_n` for any integer `n`, memoized.
    pub fn term(&self, n: i64) -> ExactRational {
        self.cache.get(&self.p, &self.q, n)
    }

    /// `W_n` by powering the companion matrix `[[p, q], [1, 0]]`; negative
    /// `n` uses the exact inverse (determinant `-q`). Independent of the memo.
    pub fn term_fast(&self, n: i64) -> ExactRational {
        let m = matrix::Mat2::companion(&self.p, &self.q).pow(n);
        // [W_{n+1}, W_n]^T = M^n [W_1, W_0]^T
        &m.c * &self.w1 + &m.d * &self.w0
    }

    /// Number of terms currently memoized.
    pub fn cached_len(&self) -> usize {
        self.cache.len()
    }

    pub(crate) fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("W{}[{}, {}]", self.pair, self.w0, self.w1),
        }
    }
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceSpec")
            .field("name", &self.name)
            .field("p", &self.pair.p)
            .field("q", &self.pair.q)
            .field("w0", &self.w0)
            .field("w1", &self.w1)
            .finish()
    }
}

impl PartialEq for SequenceSpec {
    fn eq(&self, other: &Self) -> bool {
        self.pair == other.pair && self.w0 == other.w0 && self.w1 == other.w1
    }
}

impl Eq for SequenceSpec {}
