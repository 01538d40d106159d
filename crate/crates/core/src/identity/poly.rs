use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Symbol;

/// Integer polynomial over template symbols, used for sequence indices and
/// exponents. Products such as `k(a-c)` appear in sum bases, so degree is
/// not limited to one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexPoly {
    /// Sorted monomial (symbols with multiplicity) to nonzero coefficient.
    terms: BTreeMap<Vec<Symbol>, i64>,
}

impl IndexPoly {
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![s], 1);
        Self { terms }
    }

    fn insert(&mut self, key: Vec<Symbol>, c: i64) {
        let slot = self.terms.entry(key).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Vec::new()).copied(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.terms.keys().flatten().copied()
    }

    pub fn mentions(&self, s: Symbol) -> bool {
        self.symbols().any(|t| t == s)
    }

    pub fn eval(&self, values: &[i64; Symbol::COUNT]) -> i64 {
        self.terms.iter().map(|(mono, c)| mono.iter().fold(*c, |acc, s| acc * values[s.index()])).sum()
    }

    /// Write `self` as `base + stride * s` with neither part mentioning `s`;
    /// `None` when `s` occurs with degree above one.
    pub fn split_linear(&self, s: Symbol) -> Option<(IndexPoly, IndexPoly)> {
        let mut base = IndexPoly::default();
        let mut stride = IndexPoly::default();
        for (mono, &c) in &self.terms {
            match mono.iter().filter(|&&t| t == s).count() {
                0 => base.insert(mono.clone(), c),
                1 => {
                    let rest: Vec<Symbol> = mono.iter().copied().filter(|&t| t != s).collect();
                    stride.insert(rest, c);
                }
                _ => return None,
            }
        }
        Some((base, stride))
    }
}

impl Add for IndexPoly {
    type Output = IndexPoly;
    fn add(mut self, rhs: IndexPoly) -> IndexPoly {
        for (k, c) in rhs.terms {
            self.insert(k, c);
        }
        self
    }
}

impl Neg for IndexPoly {
    type Output = IndexPoly;
    fn neg(mut self) -> IndexPoly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Sub for IndexPoly {
    type Output = IndexPoly;
    fn sub(self, rhs: IndexPoly) -> IndexPoly {
        self + (-rhs)
    }
}

impl Mul for IndexPoly {
    type Output = IndexPoly;
    fn mul(self, rhs: IndexPoly) -> IndexPoly {
        let mut out = IndexPoly::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                key.sort_unstable();
                out.insert(key, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for IndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Degree-ascending with the constant last reads like the displays: a-c+1.
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by_key(|(k, _)| (k.is_empty(), k.len(), (*k).clone()));
        for (i, (mono, &c)) in entries.into_iter().enumerate() {
            let neg = c < 0;
            if i > 0 {
                f.write_str(if neg { "-" } else { "+" })?;
            } else if neg {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                for s in mono {
                    f.write_str(s.name())?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(c: char) -> IndexPoly {
        IndexPoly::symbol(Symbol::from_char(c).unwrap())
    }

    fn vals(pairs: &[(char, i64)]) -> [i64; Symbol::COUNT] {
        let mut v = [0; Symbol::COUNT];
        for &(c, x) in pairs {
            v[Symbol::from_char(c).unwrap().index()] = x;
        }
        v
    }

    #[test]
    fn arithmetic_and_eval() {
        // m - k(a-c) - b + c
        let p = sym('m') - sym('k') * (sym('a') - sym('c')) - sym('b') + sym('c');
        let v = vals(&[('m', 7), ('k', 3), ('a', 5), ('c', 1), ('b', 2)]);
        assert_eq!(p.eval(&v), 7 - 3 * 4 - 2 + 1);
        assert_eq!((sym('a') - sym('a')).as_constant(), Some(0));
        assert_eq!(IndexPoly::constant(4).as_constant(), Some(4));
        assert_eq!(sym('a').as_constant(), None);
    }

    #[test]
    fn split_on_sum_variable() {
        let r = Symbol::SUM_VAR;
        let p = sym('m') + IndexPoly::symbol(r) * (sym('a') - sym('c')) + IndexPoly::constant(2);
        let (base, stride) = p.split_linear(r).unwrap();
        assert_eq!(base, sym('m') + IndexPoly::constant(2));
        assert_eq!(stride, sym('a') - sym('c'));
        let sq = IndexPoly::symbol(r) * IndexPoly::symbol(r);
        assert!(sq.split_linear(r).is_none());
    }

    #[test]
    fn display() {
        let p = sym('d') - sym('a') + IndexPoly::constant(1);
        assert_eq!(p.to_string(), "-a+d+1");
        assert_eq!((IndexPoly::constant(2) * sym('u')).to_string(), "2u");
        assert_eq!(IndexPoly::default().to_string(), "0");
    }
}
