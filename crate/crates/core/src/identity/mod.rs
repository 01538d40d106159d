//! Δ determinants, the λ-pair solver, direct checkers for the general
//! three-term and summation lemmas, and a data-driven catalog of every
//! identity checked by the verifier.

mod catalog;
mod delta;
mod lemmas;
mod parse;
mod poly;
mod template;

use std::fmt;

pub use catalog::{catalog, lookup, manifest_table};
pub use delta::{delta2, solve_lambda_pair, DeltaArgs, LambdaSolution};
pub use lemmas::{
    check_binomial_sum, check_lemma3, check_three_term_xx, check_three_term_xy, check_weighted_sum_xx,
    check_weighted_sum_xy, Offsets, Strictness, Variant,
};
pub use poly::IndexPoly;
pub use template::{
    check_instance, default_bindings, Bindings, Constraint, IdentityTemplate, KRole, KSign, Label, Monomial,
    Side, SumKind,
};

use crate::error::{Error, Result};
use crate::recurrence::ExactRational;

/// Why a check was not evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkipReason {
    /// A denominator (or a hypothesis the display divides by) vanished.
    ZeroDenominator,
    /// A strict-mode hypothesis such as `Δxy != 0` was not met.
    PreconditionUnmet,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::ZeroDenominator => "zero-denominator",
            SkipReason::PreconditionUnmet => "precondition-unmet",
        }
    }
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    /// Both evaluated sides, for diagnosis.
    Fails {
        lhs: ExactRational,
        rhs: ExactRational,
    },
    Skipped(SkipReason),
}

impl CheckOutcome {
    pub(crate) fn compare(lhs: ExactRational, rhs: ExactRational) -> Self {
        if lhs == rhs {
            CheckOutcome::Holds
        } else {
            CheckOutcome::Fails { lhs, rhs }
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fails { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CheckOutcome::Holds => "holds",
            CheckOutcome::Fails { .. } => "fails",
            CheckOutcome::Skipped(_) => "skipped",
        }
    }
}

/// Template parameter names. Single letters; `r` is reserved for the
/// summation variable.
pub const SYMBOL_NAMES: [&str; 13] = ["a", "b", "c", "d", "e", "h", "k", "m", "n", "r", "u", "v", "w"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u8);

impl Symbol {
    pub const COUNT: usize = SYMBOL_NAMES.len();
    pub const SUM_VAR: Symbol = Symbol(9);

    pub fn from_char(c: char) -> Option<Symbol> {
        SYMBOL_NAMES.iter().position(|s| s.starts_with(c) && s.len() == c.len_utf8()).map(|i| Symbol(i as u8))
    }

    pub fn parse(s: &str) -> Result<Symbol> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Symbol::from_char(c),
            _ => None,
        }
        .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }

    pub fn name(self) -> &'static str {
        SYMBOL_NAMES[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer values for template symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    values: [Option<i64>; Symbol::COUNT],
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from `(name, value)` pairs; unknown names are rejected.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, i64)>) -> Result<Self> {
        let mut a = Self::new();
        for (name, v) in pairs {
            a.set(Symbol::parse(name)?, v);
        }
        Ok(a)
    }

    pub fn set(&mut self, s: Symbol, v: i64) -> &mut Self {
        self.values[s.index()] = Some(v);
        self
    }

    pub fn get(&self, s: Symbol) -> Option<i64> {
        self.values[s.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i64)> + '_ {
        self.values.iter().enumerate().filter_map(|(i, v)| v.map(|v| (Symbol(i as u8), v)))
    }

    pub(crate) fn raw(&self) -> [i64; Symbol::COUNT] {
        let mut out = [0; Symbol::COUNT];
        for (s, v) in self.iter() {
            out[s.index()] = v;
        }
        out
    }
}
