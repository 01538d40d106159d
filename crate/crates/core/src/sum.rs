//! Sums over a possibly negative upper limit.
//!
//! For `k >= 0`, `sum_{r=0}^{k} f(r)` is the ordinary sum. For `k < 0` it is
//! defined as `-sum_{r=k+1}^{-1} f(r)`, so `k = -1` is empty and the
//! telescoping rule `S(k+1) = S(k) + f(k+1)` holds for every integer `k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence::{ExactRational, SequenceSpec};

/// `sum_{r=0}^{k} f(r)` under the negative-limit convention. `f` is called
/// once per touched index, in ascending order of `r`.
pub fn sum_convention<F>(mut f: F, k: i64) -> ExactRational
where
    F: FnMut(i64) -> ExactRational,
{
    let mut acc = ExactRational::zero();
    if k >= 0 {
        for r in 0..=k {
            acc += f(r);
        }
    } else {
        for r in (k + 1)..=-1 {
            acc -= f(r);
        }
    }
    acc
}

/// Summand shape `weight^r * W_{base_index + stride * r}`.
#[derive(Debug, Clone)]
pub struct SumSpec<'a> {
    pub sequence: &'a SequenceSpec,
    pub weight: ExactRational,
    pub base_index: i64,
    pub stride: i64,
}

impl SumSpec<'_> {
    fn index(&self, r: i64) -> i64 {
        self.base_index + self.stride * r
    }
}

/// `w^r` with `0^0 = 1`; `None` for zero raised to a negative power.
pub(crate) fn weight_pow(w: &ExactRational, r: i64) -> Option<ExactRational> {
    if r == 0 {
        return Some(ExactRational::one());
    }
    if w.is_zero() {
        return (r > 0).then(ExactRational::zero);
    }
    let e = i32::try_from(r).expect("exponent fits in i32");
    Some(num_traits::Pow::pow(w, e))
}

/// `sum_{r=0}^{k} w^r W_{base + stride r}`, any integer `k`.
///
/// Negative `k` touches `w^{-1}, w^{-2}, ...`; a zero weight there is
/// singular and rejected (`k = -1` is the empty sum and always fine).
pub fn eval_geometric_sum(s: &SumSpec<'_>, k: i64) -> Result<ExactRational> {
    if k <= -2 && s.weight.is_zero() {
        return Err(Error::SingularWeight(k));
    }
    Ok(sum_convention(
        |r| {
            let w = weight_pow(&s.weight, r).expect("nonzero weight or r >= 0");
            w * s.sequence.term(s.index(r))
        },
        k,
    ))
}

/// Binomial coefficient `C(k, r)`; zero outside `0 <= r <= k`.
pub fn binomial(k: i64, r: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::NegativeLimit(k));
    }
    if r < 0 || r > k {
        return Ok(BigInt::zero());
    }
    Ok(num_integer::binomial(BigInt::from(k), BigInt::from(r)))
}

/// `sum_{r=0}^{k} C(k, r) w^r W_{base + stride r}` for `k >= 0`.
pub fn eval_binomial_sum(s: &SumSpec<'_>, k: i64) -> Result<ExactRational> {
    if k < 0 {
        return Err(Error::NegativeLimit(k));
    }
    let mut acc = ExactRational::zero();
    let mut coeff = BigInt::one();
    let mut power = ExactRational::one();
    for r in 0..=k {
        acc += ExactRational::from_integer(coeff.clone()) * &power * s.sequence.term(s.index(r));
        coeff = coeff * BigInt::from(k - r) / BigInt::from(r + 1);
        power *= &s.weight;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{builtin, int};
    use proptest::prelude::*;

    fn ident(r: i64) -> ExactRational {
        int(r)
    }

    #[test]
    fn convention_examples() {
        assert_eq!(sum_convention(ident, -1), int(0));
        assert_eq!(sum_convention(|_| int(7), -1), int(0));
        assert_eq!(sum_convention(ident, -3), int(3));
        assert_eq!(sum_convention(ident, 2), int(3));
    }

    #[test]
    fn geometric_examples() {
        let f = builtin("F").unwrap();
        let s = SumSpec { sequence: &f, weight: int(1), base_index: 0, stride: 1 };
        assert_eq!(eval_geometric_sum(&s, 4).unwrap(), int(7));

        let s = SumSpec { sequence: &f, weight: int(0), base_index: 6, stride: 3 };
        assert_eq!(eval_geometric_sum(&s, 3).unwrap(), f.term(6));
        assert_eq!(eval_geometric_sum(&s, -1).unwrap(), int(0));
        assert_eq!(eval_geometric_sum(&s, -2), Err(Error::SingularWeight(-2)));

        let p = builtin("P").unwrap();
        let s = SumSpec { sequence: &p, weight: int(2), base_index: 1, stride: 2 };
        assert_eq!(eval_geometric_sum(&s, -1).unwrap(), int(0));
    }

    #[test]
    fn geometric_negative_limit_uses_inverse_powers() {
        // k = -3: -(w^{-2} W_{b-2s} + w^{-1} W_{b-s})
        let l = builtin("L").unwrap();
        let s = SumSpec { sequence: &l, weight: int(2), base_index: 4, stride: 1 };
        let half = ExactRational::new(1.into(), 2.into());
        let expected = -(&half * &half * l.term(2) + &half * l.term(3));
        assert_eq!(eval_geometric_sum(&s, -3).unwrap(), expected);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binomial(4, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(3, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(3, -1).unwrap(), BigInt::from(0));
        assert_eq!(binomial(-1, 0), Err(Error::NegativeLimit(-1)));
    }

    #[test]
    fn binomial_sum_examples() {
        let f = builtin("F").unwrap();
        let s = SumSpec { sequence: &f, weight: int(5), base_index: 7, stride: 2 };
        assert_eq!(eval_binomial_sum(&s, 0).unwrap(), f.term(7));

        let s = SumSpec { sequence: &f, weight: int(1), base_index: 5, stride: 0 };
        for n in 0..8 {
            assert_eq!(eval_binomial_sum(&s, n).unwrap(), int(1 << n) * f.term(5));
        }

        let s = SumSpec { sequence: &f, weight: int(1), base_index: 0, stride: 1 };
        // sum_r C(n, r) F_r = F_{2n}
        for n in 0..8 {
            assert_eq!(eval_binomial_sum(&s, n).unwrap(), f.term(2 * n));
        }
        assert_eq!(eval_binomial_sum(&s, -1), Err(Error::NegativeLimit(-1)));
    }

    fn window_fn(coeffs: Vec<i64>) -> impl Fn(i64) -> ExactRational {
        move |r: i64| {
            let i = (r + 20) as usize;
            int(coeffs[i % coeffs.len()]) - int(r)
        }
    }

    proptest! {
        #[test]
        fn telescoping(coeffs in prop::collection::vec(-50i64..50, 1..12), k in -15i64..15) {
            let f = window_fn(coeffs);
            prop_assert_eq!(sum_convention(&f, k + 1), sum_convention(&f, k) + f(k + 1));
        }

        #[test]
        fn geometric_matches_naive_loop(
            p in -3i64..4, q in prop::sample::select(vec![-2i64, -1, 1, 3]),
            w0 in -4i64..5, w1 in -4i64..5,
            num in -3i64..4, den in 1i64..4,
            base in -6i64..7, stride in -3i64..4, k in 0i64..8,
        ) {
            let seq = SequenceSpec::from_integers(p, q, w0, w1).unwrap();
            let weight = ExactRational::new(num.into(), den.into());
            let s = SumSpec { sequence: &seq, weight: weight.clone(), base_index: base, stride };
            let mut naive = ExactRational::zero();
            let mut pw = ExactRational::one();
            for r in 0..=k {
                naive += &pw * seq.term_fast(base + stride * r);
                pw *= &weight;
            }
            prop_assert_eq!(eval_geometric_sum(&s, k).unwrap(), naive);
        }

        #[test]
        fn binomial_sum_matches_expansion(
            num in -3i64..4, den in 1i64..4, base in -5i64..6, stride in -3i64..4, k in 0i64..9,
        ) {
            let seq = builtin("j").unwrap();
            let weight = ExactRational::new(num.into(), den.into());
            let s = SumSpec { sequence: &seq, weight: weight.clone(), base_index: base, stride };
            // Pascal-row oracle: C(k, r) built additively.
            let mut row = vec![BigInt::one()];
            for _ in 0..k {
                let mut next = vec![BigInt::one(); row.len() + 1];
                for i in 1..row.len() {
                    next[i] = &row[i - 1] + &row[i];
                }
                row = next;
            }
            let mut naive = ExactRational::zero();
            for (r, c) in row.iter().enumerate() {
                let r = r as i64;
                let w = (0..r).fold(ExactRational::one(), |acc, _| acc * &weight);
                naive += ExactRational::from_integer(c.clone()) * w * seq.term_fast(base + stride * r);
            }
            prop_assert_eq!(eval_binomial_sum(&s, k).unwrap(), naive);
        }
    }
}
