use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use super::{CheckRecord, RunOptions, VerificationReport};
use crate::error::{Error, Result};
use crate::identity::{catalog, default_bindings, lookup, IdentityTemplate, KSign, Symbol};
use crate::rng::{fnv1a, SplitMix64};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdSelection {
    All,
    Ids(Vec<String>),
}

/// Parameter ranges for grid runs. Unset symbols use the defaults:
/// `[-6, 6]` for three-term identities, `[-4, 4]` for sum identities, and
/// `k` in `[-5, 10]` (geometric) or `[0, 10]` (binomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub ranges: BTreeMap<Symbol, (i64, i64)>,
    /// Summation-limit range; binomial templates clip it at zero.
    pub k_range: Option<(i64, i64)>,
    pub max_tuples: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { ranges: BTreeMap::new(), k_range: None, max_tuples: 20_000 }
    }
}

pub fn default_range(t: &IdentityTemplate) -> (i64, i64) {
    if t.is_sum() {
        (-4, 4)
    } else {
        (-6, 6)
    }
}

pub fn default_k_range(sign: KSign) -> (i64, i64) {
    match sign {
        KSign::Any => (-5, 10),
        KSign::NonNegative => (0, 10),
    }
}

impl GridSpec {
    fn validate(&self) -> Result<()> {
        if self.max_tuples == 0 {
            return Err(Error::InvalidArgument("max tuples must be at least 1".into()));
        }
        for (s, (lo, hi)) in &self.ranges {
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range {s}={lo}..{hi}")));
            }
        }
        if let Some((lo, hi)) = self.k_range {
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range k={lo}..{hi}")));
            }
        }
        Ok(())
    }

    /// Inclusive range per free parameter, in parameter order; `None` when
    /// clipping empties a range.
    fn axes(&self, t: &IdentityTemplate) -> Option<Vec<(Symbol, i64, i64)>> {
        let mut axes = Vec::new();
        for s in t.free_parameters() {
            let (lo, hi) = match t.k_role {
                Some(role) if role.symbol == s => {
                    let (lo, hi) = self
                        .k_range
                        .or_else(|| self.ranges.get(&s).copied())
                        .unwrap_or(default_k_range(role.sign));
                    match role.sign {
                        KSign::NonNegative => (lo.max(0), hi),
                        KSign::Any => (lo, hi),
                    }
                }
                _ => self.ranges.get(&s).copied().unwrap_or_else(|| default_range(t)),
            };
            if lo > hi {
                return None;
            }
            axes.push((s, lo, hi));
        }
        Some(axes)
    }
}

/// Indices in `[0, total)` to visit, ascending. Past `max`, a uniform
/// subset chosen by Floyd's algorithm with a seed derived from the
/// identity id, the axes and the cap.
fn select(id: &str, axes: &[(Symbol, i64, i64)], total: u128, max: u64) -> Vec<u128> {
    let max = u128::from(max);
    if total <= max {
        return (0..total).collect();
    }
    let mut key = format!("{id}|");
    for (s, lo, hi) in axes {
        key.push_str(&format!("{s}={lo}..{hi};"));
    }
    key.push_str(&format!("|{max}"));
    let mut rng = SplitMix64::new(fnv1a(key.as_bytes()));
    let mut chosen = BTreeSet::new();
    for j in (total - max)..total {
        let t = rng.below_u128(j + 1);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen.into_iter().collect()
}

fn run_one(t: &'static IdentityTemplate, grid: &GridSpec, opts: RunOptions, report: &mut VerificationReport) {
    let Some(axes) = grid.axes(t) else { return };
    let total = axes.iter().map(|(_, lo, hi)| (hi - lo + 1) as u128).product::<u128>();
    let bindings = default_bindings();
    let keys: Vec<&'static str> = t.parameters.iter().map(|s| s.name()).collect();
    let mut values = [0i64; Symbol::COUNT];
    for idx in select(&t.id, &axes, total, grid.max_tuples) {
        // Mixed radix, first parameter most significant: ascending indices
        // give lexicographic assignments.
        let mut rest = idx;
        for (s, lo, hi) in axes.iter().rev() {
            let radix = (hi - lo + 1) as u128;
            values[s.index()] = lo + (rest % radix) as i64;
            rest /= radix;
        }
        for c in &t.constraints {
            values[c.target.index()] = c.expr.eval(&values);
        }
        let outcome = t.check_values(bindings, &values);
        let needs_record = opts.keep_records || outcome.is_fail();
        if needs_record {
            let assignment = t.parameters.iter().zip(&keys).map(|(s, k)| (*k, values[s.index()])).collect();
            report.record(CheckRecord { id: t.id.clone(), assignment, outcome }, opts.keep_records);
        } else {
            report.record(CheckRecord { id: t.id.clone(), assignment: Vec::new(), outcome }, false);
        }
    }
}

/// Check every selected template over its grid. Unknown ids are rejected
/// before any work is done.
pub fn run_grid(ids: &IdSelection, grid: &GridSpec, opts: RunOptions) -> Result<VerificationReport> {
    grid.validate()?;
    let templates: Vec<&'static IdentityTemplate> = match ids {
        IdSelection::All => catalog().iter().collect(),
        IdSelection::Ids(list) => {
            let mut found = Vec::new();
            let mut unknown = Vec::new();
            for id in list {
                match lookup(id) {
                    Ok(t) => found.push(t),
                    Err(_) => unknown.push(id.clone()),
                }
            }
            if !unknown.is_empty() {
                return Err(Error::UnknownIdentity(unknown));
            }
            found
        }
    };
    let start = Instant::now();
    let suite = match ids {
        IdSelection::All => "grid:all".to_string(),
        IdSelection::Ids(list) => format!("grid:{}", list.join(",")),
    };
    let mut report = VerificationReport::new(suite);
    let mut seen = BTreeSet::new();
    for t in templates {
        if seen.insert(t.id.as_str()) {
            run_one(t, grid, opts, &mut report);
        }
    }
    report.finish();
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(list: &[&str]) -> IdSelection {
        IdSelection::Ids(list.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn catalan_full_window() {
        let grid = GridSpec::default();
        let r = run_grid(&ids(&["catalan-F"]), &grid, RunOptions::default()).unwrap();
        assert_eq!(r.totals.checks(), 169);
        assert_eq!(r.totals.fails, 0);
        assert!(r.passed());
    }

    #[test]
    fn three_square_with_derived_w() {
        let mut grid = GridSpec::default();
        for s in ["u", "v"] {
            grid.ranges.insert(Symbol::parse(s).unwrap(), (-5, 5));
        }
        let r = run_grid(&ids(&["three-square-L"]), &grid, RunOptions { keep_records: true }).unwrap();
        assert_eq!(r.totals.checks(), 121);
        assert_eq!(r.totals.holds, 121);
        for rec in &r.records {
            let get = |k: &str| rec.assignment.iter().find(|(n, _)| *n == k).unwrap().1;
            assert_eq!(get("w"), get("u") + get("v"));
        }
    }

    #[test]
    fn empty_selections_pass_vacuously() {
        let r = run_grid(&ids(&[]), &GridSpec::default(), RunOptions::default()).unwrap();
        assert_eq!(r.totals.checks(), 0);
        assert!(r.passed());
        // A negative limit window leaves nothing for binomial sums.
        let grid = GridSpec { k_range: Some((-4, -1)), ..GridSpec::default() };
        let r = run_grid(&ids(&["binomial-F-1"]), &grid, RunOptions::default()).unwrap();
        assert_eq!(r.totals.checks(), 0);
    }

    #[test]
    fn unknown_ids_are_listed() {
        let err =
            run_grid(&ids(&["catalan-F", "nope", "also-nope"]), &GridSpec::default(), RunOptions::default());
        assert_eq!(err.unwrap_err(), Error::UnknownIdentity(vec!["nope".into(), "also-nope".into()]));
    }

    #[test]
    fn malformed_grids_are_rejected() {
        let mut grid = GridSpec::default();
        grid.ranges.insert(Symbol::parse("a").unwrap(), (2, 1));
        assert!(run_grid(&IdSelection::All, &grid, RunOptions::default()).is_err());
        let grid = GridSpec { max_tuples: 0, ..GridSpec::default() };
        assert!(run_grid(&IdSelection::All, &grid, RunOptions::default()).is_err());
    }

    #[test]
    fn downsampling_is_capped_sorted_and_deterministic() {
        let grid = GridSpec { max_tuples: 50, ..GridSpec::default() };
        let opts = RunOptions { keep_records: true };
        let a = run_grid(&ids(&["thm2-F"]), &grid, opts).unwrap();
        let b = run_grid(&ids(&["thm2-F"]), &grid, opts).unwrap();
        assert_eq!(a.totals.checks(), 50);
        assert_eq!(a.records, b.records);
        let keys: Vec<Vec<i64>> =
            a.records.iter().map(|r| r.assignment.iter().map(|x| x.1).collect()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        // A different identity draws a different subset.
        let c = run_grid(&ids(&["thm2-L"]), &grid, opts).unwrap();
        let other: Vec<Vec<i64>> =
            c.records.iter().map(|r| r.assignment.iter().map(|x| x.1).collect()).collect();
        assert_ne!(keys, other);
    }

    #[test]
    fn floyd_selection_is_uniform_enough() {
        let axes = [(Symbol::parse("a").unwrap(), 0, 99)];
        let picked = select("x", &axes, 100, 40);
        assert_eq!(picked.len(), 40);
        assert!(picked.windows(2).all(|w| w[0] < w[1]));
        assert!(picked.iter().any(|&i| i < 50) && picked.iter().any(|&i| i >= 50));
        assert_eq!(select("x", &axes, 10, 40), (0..10).collect::<Vec<_>>());
    }
}
