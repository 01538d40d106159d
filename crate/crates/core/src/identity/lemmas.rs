//! Direct checkers for the general lemmas, written against the displays
//! rather than through the template evaluator, so the two paths can be
//! compared.

use num_traits::{One, Zero};

use super::delta::{det, ensure_shared};
use super::{CheckOutcome, SkipReason};
use crate::error::{Error, Result};
use crate::recurrence::{ExactRational, SequenceSpec};
use crate::sum::{eval_binomial_sum, eval_geometric_sum, weight_pow, SumSpec};

/// The six integer parameters shared by the three-term and sum lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Offsets {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub m: i64,
}

impl Offsets {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64, m: i64) -> Self {
        Self { a, b, c, d, e, m }
    }
}

/// Whether the `Δxy != 0` hypothesis of the X,Y three-term relation is
/// enforced (`Strict`) or dropped (`Relaxed`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    One,
    Two,
    Three,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::One, Variant::Two, Variant::Three];

    pub fn number(self) -> u8 {
        match self {
            Variant::One => 1,
            Variant::Two => 2,
            Variant::Three => 3,
        }
    }
}

impl TryFrom<u8> for Variant {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Variant::One),
            2 => Ok(Variant::Two),
            3 => Ok(Variant::Three),
            other => Err(Error::UnknownVariant(other)),
        }
    }
}

/// `Δxy X_{m-c} = Δ1 X_{m-a} + Δ2 Y_{m-b}` for same-recurrence `X`, `Y`.
pub fn check_three_term_xy(
    x: &SequenceSpec,
    y: &SequenceSpec,
    o: Offsets,
    mode: Strictness,
) -> Result<CheckOutcome> {
    ensure_shared(x, y)?;
    let Offsets { a, b, c, d, e, m } = o;
    let dxy = det(x, y, d, e, a, b);
    if mode == Strictness::Strict && dxy.is_zero() {
        return Ok(CheckOutcome::Skipped(SkipReason::PreconditionUnmet));
    }
    let d1 = det(x, y, d, e, c, b);
    let d2 = det(x, x, d, e, a, c);
    let lhs = dxy * x.term(m - c);
    let rhs = d1 * x.term(m - a) + d2 * y.term(m - b);
    Ok(CheckOutcome::compare(lhs, rhs))
}

/// The single-sequence three-term relation; holds for all integers.
pub fn check_three_term_xx(x: &SequenceSpec, o: Offsets) -> CheckOutcome {
    let Offsets { a, b, c, d, e, m } = o;
    let lhs = det(x, x, d, e, a, b) * x.term(m - c);
    let rhs = det(x, x, d, e, c, b) * x.term(m - a) + det(x, x, d, e, a, c) * x.term(m - b);
    CheckOutcome::compare(lhs, rhs)
}

/// `(X_0^2 - X_{b-a} X_{a-b}) X_{m-c} = (X_{a-c} X_0 - X_{b-c} X_{a-b}) X_{m-a}
///  + (X_0 X_{b-c} - X_{b-a} X_{a-c}) X_{m-b}`.
pub fn check_lemma3(x: &SequenceSpec, a: i64, b: i64, c: i64, m: i64) -> CheckOutcome {
    let x0 = x.term(0);
    let lhs = (&x0 * &x0 - x.term(b - a) * x.term(a - b)) * x.term(m - c);
    let rhs = (x.term(a - c) * &x0 - x.term(b - c) * x.term(a - b)) * x.term(m - a)
        + (&x0 * x.term(b - c) - x.term(b - a) * x.term(a - c)) * x.term(m - b);
    CheckOutcome::compare(lhs, rhs)
}

fn skip() -> CheckOutcome {
    CheckOutcome::Skipped(SkipReason::ZeroDenominator)
}

/// Shared tail of the geometric-sum checkers: left side by direct
/// summation, right side `coef_main * w^k X_m + coef_tail X_{m-(k+1)s}`.
#[allow(clippy::too_many_arguments)]
fn geometric_check(
    summand: &SequenceSpec,
    x: &SequenceSpec,
    weight: ExactRational,
    stride: i64,
    base: i64,
    k: i64,
    coef_main: ExactRational,
    coef_tail: ExactRational,
    m: i64,
) -> CheckOutcome {
    let Some(wk) = weight_pow(&weight, k) else {
        return skip();
    };
    let spec = SumSpec { sequence: summand, weight, base_index: base, stride };
    let lhs = match eval_geometric_sum(&spec, k) {
        Ok(v) => v,
        Err(_) => return skip(),
    };
    let rhs = coef_main * wk * x.term(m) + coef_tail * x.term(m - (k + 1) * stride);
    CheckOutcome::compare(lhs, rhs)
}

/// Weighted X,Y sum with weight `Δxy/Δ1` and stride `a - c`; skipped when
/// any of `Δxy`, `Δ1`, `Δ2` vanishes. `k` may be negative.
pub fn check_weighted_sum_xy(x: &SequenceSpec, y: &SequenceSpec, o: Offsets, k: i64) -> Result<CheckOutcome> {
    ensure_shared(x, y)?;
    let Offsets { a, b, c, d, e, m } = o;
    let dxy = det(x, y, d, e, a, b);
    let d1 = det(x, y, d, e, c, b);
    let d2 = det(x, x, d, e, a, c);
    if dxy.is_zero() || d1.is_zero() || d2.is_zero() {
        return Ok(skip());
    }
    let s = a - c;
    let weight = &dxy / &d1;
    let coef_main = &dxy / &d2;
    let coef_tail = -(d1 / d2);
    Ok(geometric_check(y, x, weight, s, m - k * s - b + c, k, coef_main, coef_tail, m))
}

/// The three single-sequence weighted sums. Skips: variants 1 and 2 when
/// `Δ1` or `Δ2` vanishes, variant 3 additionally when `Δxx` vanishes.
pub fn check_weighted_sum_xx(x: &SequenceSpec, variant: Variant, o: Offsets, k: i64) -> CheckOutcome {
    let Offsets { a, b, c, d, e, m } = o;
    let dxx = det(x, x, d, e, a, b);
    let d1 = det(x, x, d, e, c, b);
    let d2 = det(x, x, d, e, a, c);
    if d1.is_zero() || d2.is_zero() || (variant == Variant::Three && dxx.is_zero()) {
        return skip();
    }
    match variant {
        Variant::One => {
            let s = a - c;
            let w = &dxx / &d1;
            let main = &dxx / &d2;
            let tail = -(&d1 / &d2);
            geometric_check(x, x, w, s, m - k * s - b + c, k, main, tail, m)
        }
        Variant::Two => {
            let s = b - c;
            let w = &dxx / &d2;
            let main = &dxx / &d1;
            let tail = -(&d2 / &d1);
            geometric_check(x, x, w, s, m - k * s - a + c, k, main, tail, m)
        }
        Variant::Three => {
            let s = a - b;
            let w = -(&d2 / &d1);
            let main = &d2 / &dxx;
            let tail = &d1 / &dxx;
            geometric_check(x, x, w, s, m - k * s + b - c, k, main, tail, m)
        }
    }
}

/// The three single-sequence binomial sums, `k >= 0`. Skips when the
/// variant's denominator (`Δ2` for 1 and 2, `Δ1` for 3) vanishes.
pub fn check_binomial_sum(x: &SequenceSpec, variant: Variant, o: Offsets, k: i64) -> Result<CheckOutcome> {
    if k < 0 {
        return Err(Error::NegativeLimit(k));
    }
    let Offsets { a, b, c, d, e, m } = o;
    let dxx = det(x, x, d, e, a, b);
    let d1 = det(x, x, d, e, c, b);
    let d2 = det(x, x, d, e, a, c);
    let (weight, base, stride, ratio) = match variant {
        Variant::One => {
            if d2.is_zero() {
                return Ok(skip());
            }
            (&d1 / &d2, m - (b - c) * k, b - a, &dxx / &d2)
        }
        Variant::Two => {
            if d2.is_zero() {
                return Ok(skip());
            }
            (-(&dxx / &d2), m + (a - b) * k, b - c, -(&d1 / &d2))
        }
        Variant::Three => {
            if d1.is_zero() {
                return Ok(skip());
            }
            (-(&dxx / &d1), m + (b - a) * k, a - c, -(&d2 / &d1))
        }
    };
    let spec = SumSpec { sequence: x, weight, base_index: base, stride };
    let lhs = eval_binomial_sum(&spec, k)?;
    let rhs = weight_pow(&ratio, k).unwrap_or_else(ExactRational::one) * x.term(m);
    Ok(CheckOutcome::compare(lhs, rhs))
}
