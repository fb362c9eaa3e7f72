//! Exact-rational linear combinations of words: the ring Q<x, y>.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::word::Word;

/// Exact rational coefficient; `num_rational` keeps it reduced with a
/// positive denominator.
pub type Coef = BigRational;

pub fn coef_int(n: i64) -> Coef {
    BigRational::from_integer(BigInt::from(n))
}

/// `-2`, `1/2`, ... : reduced decimal form used by every serializer.
pub fn coef_string(c: &Coef) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A noncommutative polynomial: finitely many words with nonzero exact
/// rational coefficients. Zero coefficients are never stored, so equality
/// is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Coef>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::monomial(Word::empty(), Coef::one())
    }

    pub fn from_word(w: Word) -> Self {
        NcPoly::monomial(w, Coef::one())
    }

    pub fn monomial(w: Word, c: Coef) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coef)> {
        self.terms.iter()
    }

    pub fn coef(&self, w: &Word) -> Coef {
        self.terms.get(w).cloned().unwrap_or_else(Coef::zero)
    }

    /// Highest word degree with a nonzero coefficient; None for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn add_term(&mut self, w: Word, c: Coef) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coef) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Keep only the words of degree `m`.
    pub fn degree_part(&self, m: u32) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every word of degree greater than `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() <= max_deg)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a word-level map.
    pub fn apply_linear(&self, f: impl Fn(&Word) -> NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            for (w2, c2) in f(w).terms {
                out.add_term(w2, c * &c2);
            }
        }
        out
    }

    pub fn words_in_h1(&self) -> bool {
        self.terms.keys().all(Word::in_h1)
    }

    pub fn words_in_h0(&self) -> bool {
        self.terms.keys().all(Word::in_h0)
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Concatenation product, extended bilinearly; the empty word is the unit.
impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} {w}", coef_string(&abs))?;
            }
        }
        Ok(())
    }
}
