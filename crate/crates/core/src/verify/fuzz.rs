use std::time::Instant;

use super::{CheckRecord, RunOptions, VerificationReport};
use crate::error::{Error, Result};
use crate::identity::{
    check_binomial_sum, check_lemma3, check_three_term_xx, check_three_term_xy, check_weighted_sum_xx,
    check_weighted_sum_xy, CheckOutcome, Offsets, Strictness, Variant,
};
use crate::recurrence::SequenceSpec;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: u64,
    /// Bound on `|p|`, `|q|` and the seeds.
    pub coeff_bound: i64,
    /// Bound on the offsets and the summation limit.
    pub index_bound: i64,
}

impl FuzzConfig {
    pub fn new(seed: u64, count: u64) -> Self {
        Self { seed, count, coeff_bound: 5, index_bound: 8 }
    }
}

/// Checks run on every draw, in record order.
pub const FUZZ_CHECK_IDS: [&str; 10] = [
    "lemma-1-strict",
    "lemma-2",
    "lemma-3",
    "lemma-4",
    "lemma-5-1",
    "lemma-5-2",
    "lemma-5-3",
    "lemma-6-1",
    "lemma-6-2",
    "lemma-6-3",
];

/// Random sequences and offsets run through the general checkers.
///
/// Per draw, from one SplitMix64 stream: `p`, then a nonzero `q`, in
/// `[-B, B]`; seeds `x0, x1, y0, y1` in `[-B, B]`; `a, b, c, d, e, m` and
/// the signed limit `k` in `[-I, I]`; the binomial limit in `[0, I]`.
pub fn fuzz_general(cfg: FuzzConfig, opts: RunOptions) -> Result<VerificationReport> {
    if cfg.count < 1 || cfg.coeff_bound < 1 || cfg.index_bound < 1 {
        return Err(Error::InvalidArgument(
            "count, coefficient bound and index bound must all be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut report = VerificationReport::new(format!("fuzz:seed={}", cfg.seed));
    report.seed = Some(cfg.seed);
    let (cb, ib) = (cfg.coeff_bound, cfg.index_bound);
    for _ in 0..cfg.count {
        let p = rng.range_i64(-cb, cb);
        let q = rng.nonzero_i64(cb);
        let [x0, x1, y0, y1] = std::array::from_fn(|_| rng.range_i64(-cb, cb));
        let [a, b, c, d, e, m, k] = std::array::from_fn(|_| rng.range_i64(-ib, ib));
        let kb = rng.range_i64(0, ib);
        let x = SequenceSpec::from_integers(p, q, x0, x1)?;
        let y = SequenceSpec::from_integers(p, q, y0, y1)?;
        let o = Offsets { a, b, c, d, e, m };

        let base = [
            ("p", p),
            ("q", q),
            ("x0", x0),
            ("x1", x1),
            ("y0", y0),
            ("y1", y1),
            ("a", a),
            ("b", b),
            ("c", c),
            ("d", d),
            ("e", e),
            ("m", m),
        ];
        let mut push = |id: &str, limit: Option<i64>, outcome: CheckOutcome| {
            let mut assignment = base.to_vec();
            if let Some(k) = limit {
                assignment.push(("k", k));
            }
            let keep = opts.keep_records || outcome.is_fail();
            report.record(CheckRecord { id: id.to_string(), assignment, outcome }, keep && opts.keep_records);
        };

        push(FUZZ_CHECK_IDS[0], None, check_three_term_xy(&x, &y, o, Strictness::Strict)?);
        push(FUZZ_CHECK_IDS[1], None, check_three_term_xx(&x, o));
        push(FUZZ_CHECK_IDS[2], None, check_lemma3(&x, a, b, c, m));
        push(FUZZ_CHECK_IDS[3], Some(k), check_weighted_sum_xy(&x, &y, o, k)?);
        for (i, v) in Variant::ALL.into_iter().enumerate() {
            push(FUZZ_CHECK_IDS[4 + i], Some(k), check_weighted_sum_xx(&x, v, o, k));
        }
        for (i, v) in Variant::ALL.into_iter().enumerate() {
            push(FUZZ_CHECK_IDS[7 + i], Some(kb), check_binomial_sum(&x, v, o, kb)?);
        }
    }
    report.finish();
    report.elapsed = start.elapsed();
    Ok(report)
}
