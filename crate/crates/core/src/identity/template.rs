use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IndexPoly;
use super::{Assignment, CheckOutcome, SkipReason, Symbol};
use crate::error::{Error, Result};
use crate::recurrence::{Builtin, ExactRational, SequenceSpec};

/// A sequence name inside a template: one of the six builtins, or the
/// generic same-recurrence pair `X`, `Y` of the general lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Seq(Builtin),
    X,
    Y,
}

impl Label {
    pub fn from_char(c: char) -> Option<Label> {
        match c {
            'X' => Some(Label::X),
            'Y' => Some(Label::Y),
            other => Builtin::from_label(other).map(Label::Seq),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Label::Seq(b) => b.label(),
            Label::X => 'X',
            Label::Y => 'Y',
        }
    }

    fn slot(self) -> usize {
        match self {
            Label::Seq(b) => Builtin::ALL.iter().position(|&x| x == b).expect("listed"),
            Label::X => 6,
            Label::Y => 7,
        }
    }
}

/// The concrete sequences that template labels resolve to.
#[derive(Debug, Clone)]
pub struct Bindings {
    seqs: [SequenceSpec; 8],
}

impl Bindings {
    /// Builtins as themselves, `X` and `Y` as given; they must share a
    /// recurrence.
    pub fn new(x: SequenceSpec, y: SequenceSpec) -> Result<Self> {
        if !x.shares_recurrence(&y) {
            return Err(Error::MismatchedRecurrence(x.label(), y.label()));
        }
        let [f, l, jj, jl, p, q] = Builtin::ALL.map(Builtin::spec);
        Ok(Self { seqs: [f, l, jj, jl, p, q, x.with_name("X"), y.with_name("Y")] })
    }

    pub fn get(&self, label: Label) -> &SequenceSpec {
        &self.seqs[label.slot()]
    }
}

/// Builtins plus `X = (3, -2; 1, 4)` and `Y = (3, -2; 2, -1)`, a generic
/// pair with no special structure.
pub fn default_bindings() -> &'static Bindings {
    static DEFAULT: OnceLock<Bindings> = OnceLock::new();
    DEFAULT.get_or_init(|| {
        let x = SequenceSpec::from_integers(3, -2, 1, 4).expect("q != 0");
        let y = SequenceSpec::from_integers(3, -2, 2, -1).expect("q != 0");
        Bindings::new(x, y).expect("shared recurrence")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    Geometric,
    Binomial,
}

/// `(num / den)^exponent`; a bare parenthesised group has no denominator
/// and exponent 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPower {
    pub num: Vec<Monomial>,
    pub den: Option<Vec<Monomial>>,
    pub exponent: IndexPoly,
}

/// `sum_{r=0}^{limit} [C(limit, r)] weight^r W_{base + stride r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SumFactor {
    pub kind: SumKind,
    /// `None` means weight 1.
    pub weight: Option<(Vec<Monomial>, Option<Vec<Monomial>>)>,
    pub label: Label,
    pub base: IndexPoly,
    pub stride: IndexPoly,
    pub limit: IndexPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    Term { label: Label, index: IndexPoly, power: u32 },
    Ratio(RatioPower),
    Sum(SumFactor),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub side: Side,
    pub coefficient: ExactRational,
    /// Exponent of `-1`.
    pub sign_power: IndexPoly,
    /// Exponent of `2`; may evaluate negative.
    pub two_power: IndexPoly,
    pub factors: Vec<Factor>,
}

impl Monomial {
    pub(crate) fn unit(side: Side) -> Self {
        Self {
            side,
            coefficient: ExactRational::one(),
            sign_power: IndexPoly::default(),
            two_power: IndexPoly::default(),
            factors: Vec::new(),
        }
    }
}

/// `target = expr`; the grid derives `target` rather than enumerating it.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub target: Symbol,
    pub expr: IndexPoly,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.target, self.expr)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KSign {
    Any,
    NonNegative,
}

/// Marks the parameter used as a summation limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KRole {
    pub symbol: Symbol,
    pub sign: KSign,
}

/// One displayed identity, stored as `lhs - rhs = 0` over integer
/// parameters.
#[derive(Debug, Clone)]
pub struct IdentityTemplate {
    pub id: String,
    pub equation: String,
    pub source: String,
    pub note: String,
    /// The identity in the template language, as parsed.
    pub display: String,
    /// Sorted; includes constrained targets.
    pub parameters: Vec<Symbol>,
    pub constraints: Vec<Constraint>,
    pub k_role: Option<KRole>,
    /// Quantities assumed nonzero; a vanishing one skips the instance.
    pub nonvanishing: Vec<Vec<Monomial>>,
    pub monomials: Vec<Monomial>,
}

impl IdentityTemplate {
    pub fn is_sum(&self) -> bool {
        self.k_role.is_some()
    }

    /// Parameters the grid enumerates: everything but constraint targets.
    pub fn free_parameters(&self) -> Vec<Symbol> {
        self.parameters.iter().copied().filter(|s| self.constraints.iter().all(|c| c.target != *s)).collect()
    }

    fn validate(&self, a: &Assignment) -> Result<[i64; Symbol::COUNT]> {
        for &s in &self.parameters {
            if a.get(s).is_none() {
                return Err(Error::MissingSymbol(s.name().to_string()));
            }
        }
        let values = a.raw();
        for c in &self.constraints {
            if values[c.target.index()] != c.expr.eval(&values) {
                return Err(Error::ConstraintViolated(c.to_string()));
            }
        }
        if let Some(KRole { symbol, sign: KSign::NonNegative }) = self.k_role {
            let v = values[symbol.index()];
            if v < 0 {
                return Err(Error::LimitSign { symbol: symbol.name().to_string(), value: v });
            }
        }
        Ok(values)
    }

    /// Evaluate an assignment that already satisfies the template's
    /// parameters, constraints and limit sign.
    pub fn check_values(&self, bindings: &Bindings, values: &[i64; Symbol::COUNT]) -> CheckOutcome {
        let ctx = Ctx { bindings, values };
        match self.evaluate(&ctx) {
            Ok((lhs, rhs)) => CheckOutcome::compare(lhs, rhs),
            Err(reason) => CheckOutcome::Skipped(reason),
        }
    }

    fn evaluate(&self, ctx: &Ctx<'_>) -> Eval<(ExactRational, ExactRational)> {
        for expr in &self.nonvanishing {
            if ctx.expr(expr)?.is_zero() {
                return Err(SkipReason::ZeroDenominator);
            }
        }
        let mut lhs = ExactRational::zero();
        let mut rhs = ExactRational::zero();
        for m in &self.monomials {
            let v = ctx.monomial(m)?;
            match m.side {
                Side::Lhs => lhs += v,
                Side::Rhs => rhs += v,
            }
        }
        Ok((lhs, rhs))
    }
}

/// Check one assignment against a template with the default bindings.
pub fn check_instance(t: &IdentityTemplate, a: &Assignment) -> Result<CheckOutcome> {
    check_instance_with(t, a, default_bindings())
}

pub fn check_instance_with(
    t: &IdentityTemplate,
    a: &Assignment,
    bindings: &Bindings,
) -> Result<CheckOutcome> {
    let values = t.validate(a)?;
    Ok(t.check_values(bindings, &values))
}

type Eval<T = ExactRational> = std::result::Result<T, SkipReason>;

struct Ctx<'a> {
    bindings: &'a Bindings,
    values: &'a [i64; Symbol::COUNT],
}

fn pow_signed(base: &ExactRational, e: i64) -> Eval {
    if e < 0 && base.is_zero() {
        return Err(SkipReason::ZeroDenominator);
    }
    if e == 0 {
        return Ok(ExactRational::one());
    }
    let e = i32::try_from(e).expect("exponent fits in i32");
    Ok(num_traits::Pow::pow(base, e))
}

impl Ctx<'_> {
    fn eval(&self, p: &IndexPoly) -> i64 {
        p.eval(self.values)
    }

    fn expr(&self, ms: &[Monomial]) -> Eval {
        let mut acc = ExactRational::zero();
        for m in ms {
            acc += self.monomial(m)?;
        }
        Ok(acc)
    }

    fn quotient(&self, num: &[Monomial], den: Option<&[Monomial]>) -> Eval {
        let n = self.expr(num)?;
        match den {
            None => Ok(n),
            Some(den) => {
                let d = self.expr(den)?;
                if d.is_zero() {
                    Err(SkipReason::ZeroDenominator)
                } else {
                    Ok(n / d)
                }
            }
        }
    }

    fn monomial(&self, m: &Monomial) -> Eval {
        let mut acc = m.coefficient.clone();
        if self.eval(&m.sign_power).rem_euclid(2) == 1 {
            acc = -acc;
        }
        let two = self.eval(&m.two_power);
        if two != 0 {
            let p = BigInt::one() << two.unsigned_abs();
            acc = if two > 0 { acc * ExactRational::from(p) } else { acc / ExactRational::from(p) };
        }
        // No short-circuit on a zero product: a later 0^-n must still skip.
        for f in &m.factors {
            let v = match f {
                Factor::Term { label, index, power } => {
                    let t = self.bindings.get(*label).term(self.eval(index));
                    num_traits::Pow::pow(t, *power)
                }
                Factor::Ratio(r) => {
                    let base = self.quotient(&r.num, r.den.as_deref())?;
                    pow_signed(&base, self.eval(&r.exponent))?
                }
                Factor::Sum(s) => self.sum(s)?,
            };
            acc *= v;
        }
        Ok(acc)
    }

    fn sum(&self, s: &SumFactor) -> Eval {
        let w = match &s.weight {
            None => ExactRational::one(),
            Some((num, den)) => self.quotient(num, den.as_deref())?,
        };
        let k = self.eval(&s.limit);
        let base = self.eval(&s.base);
        let stride = self.eval(&s.stride);
        let seq = self.bindings.get(s.label);
        let mut acc = ExactRational::zero();
        match s.kind {
            SumKind::Geometric if k >= 0 => {
                let mut pw = ExactRational::one();
                for r in 0..=k {
                    acc += &pw * seq.term(base + stride * r);
                    pw *= &w;
                }
            }
            SumKind::Geometric => {
                // Negated sum over r = k+1 ..= -1, walked downward from -1.
                if k <= -2 && w.is_zero() {
                    return Err(SkipReason::ZeroDenominator);
                }
                let inv = if k <= -2 { w.recip() } else { ExactRational::one() };
                let mut pw = inv.clone();
                for r in ((k + 1)..=-1).rev() {
                    acc -= &pw * seq.term(base + stride * r);
                    pw *= &inv;
                }
            }
            SumKind::Binomial => {
                let mut coef = BigInt::one();
                let mut pw = ExactRational::one();
                for r in 0..=k.max(-1) {
                    acc += ExactRational::from(coef.clone()) * &pw * seq.term(base + stride * r);
                    coef = coef * BigInt::from(k - r) / BigInt::from(r + 1);
                    pw *= &w;
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::parse::parse_identity;
    use crate::identity::{lookup, Assignment};

    fn assign(pairs: &[(&str, i64)]) -> Assignment {
        Assignment::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn adhoc(text: &str, params: &[&str]) -> IdentityTemplate {
        IdentityTemplate {
            id: "adhoc".into(),
            equation: String::new(),
            source: String::new(),
            note: String::new(),
            display: text.into(),
            parameters: params.iter().map(|p| Symbol::parse(p).unwrap()).collect(),
            constraints: Vec::new(),
            k_role: None,
            nonvanishing: Vec::new(),
            monomials: parse_identity(text).unwrap(),
        }
    }

    #[test]
    fn catalan_fibonacci_instance() {
        // F_5^2 - F_3 F_7 = 25 - 26 = -1 = (-1)^3 F_2^2
        let t = lookup("catalan-F").unwrap();
        assert_eq!(check_instance(t, &assign(&[("d", 5), ("a", 2)])).unwrap(), CheckOutcome::Holds);
    }

    #[test]
    fn product_at_zero_offset() {
        let t = lookup("fib-product").unwrap();
        for (h, k) in [(0, 0), (3, -7), (-4, 5)] {
            let a = assign(&[("n", 0), ("h", h), ("k", k)]);
            assert_eq!(check_instance(t, &a).unwrap(), CheckOutcome::Holds);
        }
    }

    #[test]
    fn jacobsthal_catalan_instance() {
        // J_4^2 - J_3 J_5 = 25 - 33 = -8 = (-1)^3 2^3 J_1^2
        let t = lookup("jacobsthal-catalan").unwrap();
        assert_eq!(check_instance(t, &assign(&[("d", 4), ("a", 1)])).unwrap(), CheckOutcome::Holds);
    }

    #[test]
    fn wrong_identities_fail_with_both_sides() {
        // Catalan with the sign dropped.
        let t = adhoc("F_d^2 - F_{d-a}F_{d+a} = F_a^2", &["a", "d"]);
        let out = check_instance(&t, &assign(&[("d", 5), ("a", 2)])).unwrap();
        assert_eq!(
            out,
            CheckOutcome::Fails { lhs: ExactRational::from_integer((-1).into()), rhs: ExactRational::one() }
        );
        // Doubling with the wrong power of two.
        let t = adhoc("j_{2u} + (-1)^u 2^u = j_u^2", &["u"]);
        assert!(check_instance(&t, &assign(&[("u", 3)])).unwrap().is_fail());
    }

    #[test]
    fn negative_two_powers_are_fractions() {
        // 2^{-3} * 8 = 1
        let t = adhoc("2^{u} 8 = 1", &["u"]);
        assert_eq!(check_instance(&t, &assign(&[("u", -3)])).unwrap(), CheckOutcome::Holds);
    }

    #[test]
    fn zero_denominators_skip() {
        let t = adhoc("(F_u / F_v) = 1", &["u", "v"]);
        assert_eq!(
            check_instance(&t, &assign(&[("u", 0), ("v", 0)])).unwrap(),
            CheckOutcome::Skipped(SkipReason::ZeroDenominator)
        );
        let t = adhoc("(F_u)^v = 1", &["u", "v"]);
        assert_eq!(
            check_instance(&t, &assign(&[("u", 0), ("v", -1)])).unwrap(),
            CheckOutcome::Skipped(SkipReason::ZeroDenominator)
        );
        // A zero factor earlier in the product does not hide 0^-1.
        let t = adhoc("F_u (F_u)^v = 0", &["u", "v"]);
        assert_eq!(
            check_instance(&t, &assign(&[("u", 0), ("v", -1)])).unwrap(),
            CheckOutcome::Skipped(SkipReason::ZeroDenominator)
        );
    }

    #[test]
    fn validation_errors_name_the_problem() {
        let t = lookup("catalan-F").unwrap();
        assert_eq!(check_instance(t, &assign(&[("d", 5)])), Err(Error::MissingSymbol("a".into())));

        let t = lookup("three-square-j").unwrap();
        assert_eq!(t.constraints.len(), 1);
        let bad = assign(&[("u", 1), ("v", 2), ("w", 4)]);
        assert_eq!(check_instance(t, &bad), Err(Error::ConstraintViolated("w=u+v".into())));
        let good = assign(&[("u", 1), ("v", 2), ("w", 3)]);
        assert_eq!(check_instance(t, &good).unwrap(), CheckOutcome::Holds);

        let t = lookup("binomial-F-1").unwrap();
        let a = assign(&[("a", 1), ("b", 3), ("c", 0), ("d", 2), ("e", 5), ("m", 0), ("k", -1)]);
        assert_eq!(check_instance(t, &a), Err(Error::LimitSign { symbol: "k".into(), value: -1 }));
    }

    #[test]
    fn geometric_sum_negative_limits() {
        // sum_{r=0}^{k} 2^r with k = -3 is -(1/4 + 1/2)
        let t = adhoc("sum(r=0..k; (2/1)^r L_{1+0r}) = (-3/4) L_1", &["k"]);
        assert_eq!(check_instance(&t, &assign(&[("k", -3)])).unwrap(), CheckOutcome::Holds);
        let t = adhoc("sum(r=0..k; (0/1)^r L_r) = 0", &["k"]);
        assert_eq!(check_instance(&t, &assign(&[("k", -1)])).unwrap(), CheckOutcome::Holds);
        assert_eq!(
            check_instance(&t, &assign(&[("k", -2)])).unwrap(),
            CheckOutcome::Skipped(SkipReason::ZeroDenominator)
        );
    }

    #[test]
    fn binomial_sum_expansion() {
        // sum_r C(k, r) F_r = F_{2k}
        let t = adhoc("binsum(r=0..k; F_r) = F_{2k}", &["k"]);
        for k in 0..10 {
            assert_eq!(check_instance(&t, &assign(&[("k", k)])).unwrap(), CheckOutcome::Holds);
        }
    }

    #[test]
    fn custom_bindings() {
        let x = SequenceSpec::from_integers(1, 1, 2, 1).unwrap();
        let y = SequenceSpec::from_integers(1, 1, 0, 1).unwrap();
        let b = Bindings::new(x, y).unwrap();
        let t = adhoc("X_n = L_n", &["n"]);
        assert_eq!(check_instance_with(&t, &assign(&[("n", -7)]), &b).unwrap(), CheckOutcome::Holds);
        let j = SequenceSpec::from_integers(1, 2, 0, 1).unwrap();
        assert!(Bindings::new(SequenceSpec::from_integers(1, 1, 0, 1).unwrap(), j).is_err());
    }
}
