use num_traits::Zero;

use super::SkipReason;
use crate::error::{Error, Result};
use crate::recurrence::{ExactRational, SequenceSpec};

/// Arguments of the 2x2 determinant `X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}`.
///
/// `Δ1` is the same determinant with `a` replaced by `c`, and `Δ2` uses
/// `(X, X)` with `b` replaced by `c`.
#[derive(Debug, Clone, Copy)]
pub struct DeltaArgs<'a> {
    pub x: &'a SequenceSpec,
    pub y: &'a SequenceSpec,
    pub d: i64,
    pub e: i64,
    pub a: i64,
    pub b: i64,
}

pub(crate) fn ensure_shared(x: &SequenceSpec, y: &SequenceSpec) -> Result<()> {
    if x.shares_recurrence(y) {
        Ok(())
    } else {
        Err(Error::MismatchedRecurrence(x.label(), y.label()))
    }
}

/// `X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}`.
pub fn delta2(args: &DeltaArgs<'_>) -> Result<ExactRational> {
    ensure_shared(args.x, args.y)?;
    Ok(det(args.x, args.y, args.d, args.e, args.a, args.b))
}

pub(crate) fn det(x: &SequenceSpec, y: &SequenceSpec, d: i64, e: i64, a: i64, b: i64) -> ExactRational {
    x.term(d - a) * y.term(e - b) - x.term(e - a) * y.term(d - b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSolution {
    /// `X_{m-c} = lambda1 X_{m-a} + lambda2 Y_{m-b}`.
    Solved {
        lambda1: ExactRational,
        lambda2: ExactRational,
    },
    Skipped(SkipReason),
}

/// Solve `X_{d-c} = λ1 X_{d-a} + λ2 Y_{d-b}`, `X_{e-c} = λ1 X_{e-a} + λ2 Y_{e-b}`
/// by Cramer's rule; `Δxy = 0` gives `Skipped(ZeroDenominator)`.
pub fn solve_lambda_pair(
    x: &SequenceSpec,
    y: &SequenceSpec,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    e: i64,
) -> Result<LambdaSolution> {
    ensure_shared(x, y)?;
    let dxy = det(x, y, d, e, a, b);
    if dxy.is_zero() {
        return Ok(LambdaSolution::Skipped(SkipReason::ZeroDenominator));
    }
    let d1 = det(x, y, d, e, c, b);
    let d2 = det(x, x, d, e, a, c);
    Ok(LambdaSolution::Solved { lambda1: d1 / &dxy, lambda2: d2 / dxy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{builtin, int};

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn delta_examples() {
        let f = builtin("F").unwrap();
        let l = builtin("L").unwrap();
        let p = builtin("P").unwrap();
        let args = DeltaArgs { x: &f, y: &l, d: 0, e: 1, a: 0, b: 0 };
        assert_eq!(delta2(&args).unwrap(), int(-2));
        for (a, b) in [(0, 0), (3, -2), (-5, 7)] {
            let args = DeltaArgs { x: &f, y: &f, d: 4, e: 4, a, b };
            assert_eq!(delta2(&args).unwrap(), int(0));
        }
        let args = DeltaArgs { x: &p, y: &p, d: 2, e: 0, a: 0, b: 1 };
        assert_eq!(delta2(&args).unwrap(), int(2));
    }

    #[test]
    fn delta_rejects_mismatched_pairs() {
        let f = builtin("F").unwrap();
        let j = builtin("J").unwrap();
        let args = DeltaArgs { x: &f, y: &j, d: 0, e: 1, a: 0, b: 0 };
        assert!(matches!(delta2(&args), Err(Error::MismatchedRecurrence(..))));
    }

    #[test]
    fn lambda_examples() {
        let f = builtin("F").unwrap();
        let l = builtin("L").unwrap();
        assert_eq!(
            solve_lambda_pair(&f, &l, 0, 0, 1, 0, 1).unwrap(),
            LambdaSolution::Solved { lambda1: r(-1, 2), lambda2: r(1, 2) }
        );
        // F_{m-1} = (L_m - F_m) / 2, the oracle behind the pair above.
        for m in -10..10 {
            assert_eq!(f.term(m - 1), (l.term(m) - f.term(m)) / int(2));
        }
        // c = a: X_{m-c} is X_{m-a} itself.
        assert_eq!(
            solve_lambda_pair(&f, &f, 2, -1, 2, 0, 3).unwrap(),
            LambdaSolution::Solved { lambda1: int(1), lambda2: int(0) }
        );
        assert_eq!(
            solve_lambda_pair(&f, &l, 1, 2, 3, 4, 4).unwrap(),
            LambdaSolution::Skipped(SkipReason::ZeroDenominator)
        );
    }
}
