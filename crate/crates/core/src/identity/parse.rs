//! The template language.
//!
//! ```text
//! identity := expr '=' expr
//! expr     := [+|-] term ((+|-) term)*
//! term     := factor ([*] factor)*
//! factor   := INT ['^' exp]                 2^{..} is a power of two
//!           | '(-1)^' exp
//!           | SEQ '_' index ['^' INT]       SEQ in F L J j P Q X Y
//!           | '(' expr ['/' expr] ')' ['^' exp]
//!           | 'sum(r=0..' poly ';' term ')'
//!           | 'binsum(r=0..' poly ';' term ')'
//! index    := INT | SYMBOL | '{' poly '}'
//! exp      := INT | SYMBOL | '{' poly '}'
//! ```
//!
//! Polynomials use integer coefficients and implicit multiplication, so
//! `{m-(k+1)(a-c)}` and `{2u}` are valid indices. A sum body is an optional
//! `(num/den)^r` weight times one sequence term whose index is linear in `r`.

use num_traits::{One, Pow};

use super::poly::IndexPoly;
use super::template::{Factor, Label, Monomial, RatioPower, Side, SumFactor, SumKind};
use super::Symbol;
use crate::error::{Error, Result};
use crate::recurrence::ExactRational;

pub(crate) fn parse_identity(src: &str) -> Result<Vec<Monomial>> {
    let mut p = Parser::new(src);
    let mut out = p.expr(Side::Lhs)?;
    p.expect('=')?;
    out.extend(p.expr(Side::Rhs)?);
    p.end()?;
    Ok(out)
}

pub(crate) fn parse_expr(src: &str) -> Result<Vec<Monomial>> {
    let mut p = Parser::new(src);
    let out = p.expr(Side::Lhs)?;
    p.end()?;
    Ok(out)
}

pub(crate) fn parse_poly(src: &str) -> Result<IndexPoly> {
    let mut p = Parser::new(src);
    let out = p.poly()?;
    p.end()?;
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    /// Next char without skipping whitespace.
    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let digits = self.src[self.pos..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let v = self.src[self.pos..self.pos + digits]
            .parse()
            .map_err(|_| Error::Parse { pos: self.pos, msg: "integer out of range".into() })?;
        self.pos += digits;
        Ok(v)
    }

    fn symbol(&mut self) -> Result<Symbol> {
        let start = self.pos;
        match self.bump().and_then(Symbol::from_char) {
            Some(s) => Ok(s),
            None => {
                self.pos = start;
                self.err("expected a parameter symbol")
            }
        }
    }

    // Polynomials.

    fn poly(&mut self) -> Result<IndexPoly> {
        let mut acc = if self.eat('-') {
            -self.poly_term()?
        } else {
            self.eat('+');
            self.poly_term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.poly_term()?;
            } else if self.eat('-') {
                acc = acc - self.poly_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self) -> Result<IndexPoly> {
        let mut acc = self.poly_factor()?;
        loop {
            self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == '(' || Symbol::from_char(c).is_some() => {
                    acc = acc * self.poly_factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn poly_factor(&mut self) -> Result<IndexPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(IndexPoly::constant(self.int()?)),
            Some('(') => {
                self.bump();
                let p = self.poly()?;
                self.expect(')')?;
                Ok(p)
            }
            _ => Ok(IndexPoly::symbol(self.symbol()?)),
        }
    }

    /// `INT`, a single symbol, or a braced polynomial.
    fn atom_poly(&mut self) -> Result<IndexPoly> {
        match self.peek() {
            Some('{') => {
                self.bump();
                let p = self.poly()?;
                self.expect('}')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(IndexPoly::constant(self.int()?)),
            _ => Ok(IndexPoly::symbol(self.symbol()?)),
        }
    }

    // Expressions.

    fn expr(&mut self, side: Side) -> Result<Vec<Monomial>> {
        let mut out = Vec::new();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let mut m = self.term(side)?;
            if negate {
                m.coefficient = -m.coefficient;
            }
            out.push(m);
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn at_term_end(&mut self) -> bool {
        matches!(self.peek(), None | Some('+' | '-' | '=' | ')' | '/' | ';'))
    }

    fn term(&mut self, side: Side) -> Result<Monomial> {
        let mut m = Monomial::unit(side);
        if self.at_term_end() {
            return self.err("expected a factor");
        }
        while !self.at_term_end() {
            self.eat('*');
            self.factor(&mut m)?;
        }
        Ok(m)
    }

    fn factor(&mut self, m: &mut Monomial) -> Result<()> {
        if self.eat_str("(-1)^") {
            let e = self.atom_poly()?;
            m.sign_power = std::mem::take(&mut m.sign_power) + e;
            return Ok(());
        }
        if self.eat_str("binsum(") {
            m.factors.push(Factor::Sum(self.sum_body(SumKind::Binomial)?));
            return Ok(());
        }
        if self.eat_str("sum(") {
            m.factors.push(Factor::Sum(self.sum_body(SumKind::Geometric)?));
            return Ok(());
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                if self.peek_raw() == Some('^') {
                    self.bump();
                    let e = self.atom_poly()?;
                    if n == 2 {
                        m.two_power = std::mem::take(&mut m.two_power) + e;
                    } else {
                        let Some(e) = e.as_constant().filter(|e| *e >= 0) else {
                            return self.err("only 2 may carry a symbolic exponent");
                        };
                        let e = u32::try_from(e).expect("small exponent");
                        m.coefficient *= ExactRational::from_integer(n.into()).pow(e);
                    }
                } else {
                    m.coefficient *= ExactRational::from_integer(n.into());
                }
                Ok(())
            }
            Some('(') => {
                self.bump();
                let num = self.expr(Side::Lhs)?;
                let den = if self.eat('/') { Some(self.expr(Side::Lhs)?) } else { None };
                self.expect(')')?;
                let exponent = if self.peek_raw() == Some('^') {
                    self.bump();
                    self.atom_poly()?
                } else {
                    IndexPoly::constant(1)
                };
                m.factors.push(Factor::Ratio(RatioPower { num, den, exponent }));
                Ok(())
            }
            Some(c) => match Label::from_char(c) {
                Some(label) => {
                    self.bump();
                    if self.peek_raw() != Some('_') {
                        return self.err("expected `_` after sequence name");
                    }
                    self.bump();
                    let index = self.atom_poly()?;
                    let power = if self.peek_raw() == Some('^') {
                        self.bump();
                        u32::try_from(self.int()?)
                            .map_err(|_| Error::Parse { pos: self.pos, msg: "power too large".into() })?
                    } else {
                        1
                    };
                    m.factors.push(Factor::Term { label, index, power });
                    Ok(())
                }
                None => self.err(format!("unexpected `{c}`")),
            },
            None => self.err("unexpected end of input"),
        }
    }

    /// After `sum(` or `binsum(`: `r=0..LIMIT; BODY)`.
    fn sum_body(&mut self, kind: SumKind) -> Result<SumFactor> {
        let r = Symbol::SUM_VAR;
        if !(self.eat_str("r") && self.eat('=') && self.eat_str("0..")) {
            return self.err("expected `r=0..`");
        }
        let limit = self.poly()?;
        if limit.mentions(r) {
            return self.err("sum limit mentions the summation variable");
        }
        self.expect(';')?;
        let start = self.pos;
        let body = self.term(Side::Lhs)?;
        self.expect(')')?;

        let plain = body.coefficient.is_one()
            && body.sign_power.as_constant() == Some(0)
            && body.two_power.as_constant() == Some(0);
        let mut weight = None;
        let mut term = None;
        for f in body.factors {
            match f {
                Factor::Ratio(rp) if weight.is_none() && rp.exponent == IndexPoly::symbol(r) => {
                    weight = Some((rp.num, rp.den));
                }
                Factor::Term { label, index, power: 1 } if term.is_none() => {
                    term = Some((label, index));
                }
                _ => return Err(Error::Parse { pos: start, msg: "unsupported sum body".into() }),
            }
        }
        let Some((label, index)) = term.filter(|_| plain) else {
            return Err(Error::Parse { pos: start, msg: "sum body needs one sequence term".into() });
        };
        let weight_mentions_r =
            weight.as_ref().is_some_and(|(n, d): &(Vec<Monomial>, Option<Vec<Monomial>>)| {
                n.iter().chain(d.iter().flatten()).any(|m| monomial_mentions(m, r))
            });
        let split = index.split_linear(r);
        let Some((base, stride)) = split.filter(|_| !weight_mentions_r) else {
            return Err(Error::Parse { pos: start, msg: "summand must be linear in r".into() });
        };
        Ok(SumFactor { kind, weight, label, base, stride, limit })
    }
}

/// Every parameter symbol a monomial mentions, including inside groups
/// and sums (the summation variable itself is reported too).
pub(crate) fn monomial_symbols(m: &Monomial, out: &mut Vec<Symbol>) {
    out.extend(m.sign_power.symbols());
    out.extend(m.two_power.symbols());
    for f in &m.factors {
        match f {
            Factor::Term { index, .. } => out.extend(index.symbols()),
            Factor::Ratio(rp) => {
                out.extend(rp.exponent.symbols());
                for m in rp.num.iter().chain(rp.den.iter().flatten()) {
                    monomial_symbols(m, out);
                }
            }
            Factor::Sum(s) => {
                out.extend(s.base.symbols());
                out.extend(s.stride.symbols());
                out.extend(s.limit.symbols());
                if let Some((n, d)) = &s.weight {
                    for m in n.iter().chain(d.iter().flatten()) {
                        monomial_symbols(m, out);
                    }
                }
            }
        }
    }
}

fn monomial_mentions(m: &Monomial, s: Symbol) -> bool {
    let mut v = Vec::new();
    monomial_symbols(m, &mut v);
    v.contains(&s)
}
