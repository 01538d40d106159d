use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{ExactRational, SequenceSpec};
use crate::error::{Error, Result};

/// The six named integer sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    /// `F`: (1, 1), seeds 0, 1.
    Fibonacci,
    /// `L`: (1, 1), seeds 2, 1.
    Lucas,
    /// `J`: (1, 2), seeds 0, 1.
    Jacobsthal,
    /// `j`: (1, 2), seeds 2, 1.
    JacobsthalLucas,
    /// `P`: (2, 1), seeds 0, 1.
    Pell,
    /// `Q`: (2, 1), seeds 2, 2.
    PellLucas,
}

impl Builtin {
    pub const ALL: [Builtin; 6] = [
        Builtin::Fibonacci,
        Builtin::Lucas,
        Builtin::Jacobsthal,
        Builtin::JacobsthalLucas,
        Builtin::Pell,
        Builtin::PellLucas,
    ];

    pub fn label(self) -> char {
        match self {
            Builtin::Fibonacci => 'F',
            Builtin::Lucas => 'L',
            Builtin::Jacobsthal => 'J',
            Builtin::JacobsthalLucas => 'j',
            Builtin::Pell => 'P',
            Builtin::PellLucas => 'Q',
        }
    }

    pub fn from_label(c: char) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.label() == c)
    }

    /// `(p, q)`.
    pub fn coefficients(self) -> (i64, i64) {
        match self {
            Builtin::Fibonacci | Builtin::Lucas => (1, 1),
            Builtin::Jacobsthal | Builtin::JacobsthalLucas => (1, 2),
            Builtin::Pell | Builtin::PellLucas => (2, 1),
        }
    }

    /// `(W_0, W_1)`.
    pub fn seeds(self) -> (i64, i64) {
        match self {
            Builtin::Fibonacci | Builtin::Jacobsthal | Builtin::Pell => (0, 1),
            Builtin::Lucas | Builtin::JacobsthalLucas => (2, 1),
            // Q_n = (1 + sqrt 2)^n + (1 - sqrt 2)^n
            Builtin::PellLucas => (2, 2),
        }
    }

    /// The Lucas-type companion sharing this sequence's recurrence, or the
    /// fundamental one for a Lucas-type sequence.
    pub fn companion(self) -> Builtin {
        match self {
            Builtin::Fibonacci => Builtin::Lucas,
            Builtin::Lucas => Builtin::Fibonacci,
            Builtin::Jacobsthal => Builtin::JacobsthalLucas,
            Builtin::JacobsthalLucas => Builtin::Jacobsthal,
            Builtin::Pell => Builtin::PellLucas,
            Builtin::PellLucas => Builtin::Pell,
        }
    }

    pub fn spec(self) -> SequenceSpec {
        let (p, q) = self.coefficients();
        let (w0, w1) = self.seeds();
        SequenceSpec::from_integers(p, q, w0, w1)
            .expect("built-in q is nonzero")
            .with_name(self.label().to_string())
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Builtin::from_label(c),
            _ => None,
        }
        .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// Look up one of the six named sequences by its label.
pub fn builtin(name: &str) -> Result<SequenceSpec> {
    Ok(name.parse::<Builtin>()?.spec())
}

/// `W_{-n}` from the sign/power-of-two reflection formulas:
/// `F_{-n} = (-1)^{n-1} F_n`, `L_{-n} = (-1)^n L_n`,
/// `J_{-n} = (-1)^{n-1} 2^{-n} J_n`, `j_{-n} = (-1)^n 2^{-n} j_n`,
/// `P_{-n} = (-1)^{n-1} P_n`, `Q_{-n} = (-1)^n Q_n`.
pub fn negative_index_closed_form(seq: Builtin, n: i64) -> Result<ExactRational> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    let forward = seq.spec().term(n);
    let odd = n % 2 == 1;
    let negate = match seq {
        Builtin::Fibonacci | Builtin::Jacobsthal | Builtin::Pell => !odd,
        Builtin::Lucas | Builtin::JacobsthalLucas | Builtin::PellLucas => odd,
    };
    let mut v = if negate { -forward } else { forward };
    if matches!(seq, Builtin::Jacobsthal | Builtin::JacobsthalLucas) {
        let exp = u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("index {n} too large")))?;
        v /= ExactRational::from_integer(BigInt::from(2).pow(exp));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::int;

    #[test]
    fn builtin_coefficients_and_seeds() {
        let l = builtin("L").unwrap();
        assert_eq!(l.pair().p(), &BigInt::from(1));
        assert_eq!(l.pair().q(), &BigInt::from(1));
        assert_eq!(l.seeds(), (&int(2), &int(1)));
        let j = builtin("J").unwrap();
        assert_eq!(j.pair().q(), &BigInt::from(2));
        assert_eq!(j.seeds(), (&int(0), &int(1)));
        let q = builtin("Q").unwrap();
        assert_eq!(q.pair().p(), &BigInt::from(2));
        assert_eq!(q.pair().q(), &BigInt::from(1));
        assert_eq!(q.seeds().0, &int(2));
        // Q_1 = 2, the value that makes Q_{-n} = (-1)^n Q_n hold.
        assert_eq!(q.seeds().1, &int(2));
    }

    #[test]
    fn unknown_label_is_rejected_with_its_name() {
        assert_eq!(builtin("Fib").unwrap_err(), Error::UnknownSequence("Fib".into()));
        assert_eq!(builtin("x").unwrap_err(), Error::UnknownSequence("x".into()));
        assert!(builtin("").is_err());
    }

    #[test]
    fn labels_are_case_sensitive() {
        assert_eq!("J".parse::<Builtin>().unwrap(), Builtin::Jacobsthal);
        assert_eq!("j".parse::<Builtin>().unwrap(), Builtin::JacobsthalLucas);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(negative_index_closed_form(Builtin::Fibonacci, 5).unwrap(), int(5));
        assert_eq!(negative_index_closed_form(Builtin::Lucas, 3).unwrap(), int(-4));
        assert_eq!(negative_index_closed_form(Builtin::JacobsthalLucas, 0).unwrap(), int(2));
        assert_eq!(negative_index_closed_form(Builtin::Pell, -1), Err(Error::NegativeArgument(-1)));
    }

    #[test]
    fn closed_form_agrees_with_backward_recurrence() {
        for b in Builtin::ALL {
            let s = b.spec();
            for n in 0..=30 {
                assert_eq!(negative_index_closed_form(b, n).unwrap(), s.term(-n), "{b} {n}");
            }
        }
    }
}
