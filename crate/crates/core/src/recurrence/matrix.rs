use num_traits::{One, Zero};

use super::ExactRational;

/// 2x2 matrix `[[a, b], [c, d]]` over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub(super) struct Mat2 {
    pub a: ExactRational,
    pub b: ExactRational,
    pub c: ExactRational,
    pub d: ExactRational,
}

impl Mat2 {
    fn identity() -> Self {
        Self {
            a: ExactRational::one(),
            b: ExactRational::zero(),
            c: ExactRational::zero(),
            d: ExactRational::one(),
        }
    }

    pub fn companion(p: &ExactRational, q: &ExactRational) -> Self {
        Self { a: p.clone(), b: q.clone(), c: ExactRational::one(), d: ExactRational::zero() }
    }

    /// Inverse of the companion matrix: `[[0, 1], [1/q, -p/q]]`.
    fn companion_inverse(&self) -> Self {
        let (p, q) = (&self.a, &self.b);
        Self { a: ExactRational::zero(), b: ExactRational::one(), c: q.recip(), d: -(p / q) }
    }

    fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Power of a companion matrix by repeated squaring.
    pub fn pow(&self, n: i64) -> Mat2 {
        let mut base = if n < 0 { self.companion_inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
