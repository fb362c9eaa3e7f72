//! The stuffle (harmonic) product on h1 and the harmonic regularization
//! that rewrites any h1 element as a polynomial in T with coefficients
//! supported on admissible words.
//!
//! The product mirrors multiplication of nested sums:
//! `z_j u * z_k v = z_j (u * z_k v) + z_k (z_j u * v) + z_{j+k} (u * v)`
//! with the empty word as unit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{Coef, NcPoly};
use crate::word::{AlgebraError, Word};

/// Stuffle product of two h1 elements; rejects operands with words
/// outside h1. Commutative and associative.
pub fn stuffle(a: &NcPoly, b: &NcPoly) -> Result<NcPoly, AlgebraError> {
    check_h1(a)?;
    check_h1(b)?;
    let mut out = NcPoly::zero();
    for (wa, ca) in a.terms() {
        let ka = index_parts(wa);
        for (wb, cb) in b.terms() {
            let kb = index_parts(wb);
            let coef = ca * cb;
            for (parts, mult) in stuffle_parts(&ka, &kb) {
                let w = word_from_parts(&parts);
                out.add_term(w, &coef * BigRational::from_integer(BigInt::from(mult)));
            }
        }
    }
    Ok(out)
}

fn check_h1(p: &NcPoly) -> Result<(), AlgebraError> {
    for (w, _) in p.terms() {
        if !w.in_h1() {
            return Err(AlgebraError::NotInH1(w.clone()));
        }
    }
    Ok(())
}

fn index_parts(w: &Word) -> Vec<u32> {
    if w.is_empty() {
        Vec::new()
    } else {
        w.to_index().expect("h1 word").parts().to_vec()
    }
}

fn word_from_parts(parts: &[u32]) -> Word {
    if parts.is_empty() {
        Word::empty()
    } else {
        Word::from_index(&crate::index::Index::new(parts.to_vec())).expect("nonempty")
    }
}

/// Recursive stuffle on part sequences, returning multiplicities.
fn stuffle_parts(a: &[u32], b: &[u32]) -> Vec<(Vec<u32>, u64)> {
    fn rec(a: &[u32], b: &[u32], acc: &mut BTreeMap<Vec<u32>, u64>, prefix: &mut Vec<u32>) {
        if a.is_empty() {
            let mut parts = prefix.clone();
            parts.extend_from_slice(b);
            *acc.entry(parts).or_insert(0) += 1;
            return;
        }
        if b.is_empty() {
            let mut parts = prefix.clone();
            parts.extend_from_slice(a);
            *acc.entry(parts).or_insert(0) += 1;
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, acc, prefix);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], acc, prefix);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], acc, prefix);
        prefix.pop();
    }
    let mut acc = BTreeMap::new();
    rec(a, b, &mut acc, &mut Vec::new());
    acc.into_iter().collect()
}

/// A polynomial in the regularization variable T whose coefficients are
/// polynomials supported on admissible (h0) words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RegPoly {
    coeffs: BTreeMap<u32, NcPoly>,
}

impl RegPoly {
    pub fn zero() -> Self {
        RegPoly::default()
    }

    pub fn constant(p: NcPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(0, p);
        }
        RegPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of T^e (zero polynomial if absent).
    pub fn coeff(&self, e: u32) -> NcPoly {
        self.coeffs.get(&e).cloned().unwrap_or_else(NcPoly::zero)
    }

    /// The T = 0 specialization.
    pub fn constant_term(&self) -> NcPoly {
        self.coeff(0)
    }

    /// Highest T exponent present; None for the zero polynomial.
    pub fn t_degree(&self) -> Option<u32> {
        self.coeffs.keys().max().copied()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &NcPoly)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, e: u32, p: NcPoly) {
        if p.is_zero() {
            return;
        }
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &RegPoly) -> RegPoly {
        let mut out = self.clone();
        for (&e, p) in &other.coeffs {
            out.insert(e, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coef) -> RegPoly {
        if c.is_zero() {
            return RegPoly::zero();
        }
        RegPoly {
            coeffs: self.coeffs.iter().map(|(&e, p)| (e, p.scale(c))).collect(),
        }
    }

    /// Multiply by T^by.
    pub fn shift_t(&self, by: u32) -> RegPoly {
        RegPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, p)| (e + by, p.clone()))
                .collect(),
        }
    }

    /// Product in h0[T]: T exponents add, coefficients multiply by stuffle.
    pub fn stuffle_mul(&self, other: &RegPoly) -> Result<RegPoly, AlgebraError> {
        let mut out = RegPoly::zero();
        for (&ea, pa) in &self.coeffs {
            for (&eb, pb) in &other.coeffs {
                out.insert(ea + eb, stuffle(pa, pb)?);
            }
        }
        Ok(out)
    }
}

/// Harmonic regularization: express an h1 element in h0[z_1] under the
/// stuffle product and map z_1 to T. Admissible inputs are fixed at
/// T-degree 0; the convention for the extra generator is reg(z_1) = T.
///
/// Leading z_1 factors are peeled by the stuffle recursion: if w has m >= 1
/// leading z_1 parts then `z_1 * tail(w)` contains w with multiplicity m
/// and otherwise only words with fewer leading ones, so
/// `reg(w) = (T * reg(tail(w)) - reg(rest)) / m` terminates.
pub fn reg_star(a: &NcPoly) -> Result<RegPoly, AlgebraError> {
    check_h1(a)?;
    let mut out = RegPoly::zero();
    for (w, c) in a.terms() {
        out = out.add(&reg_word(&index_parts(w)).scale(c));
    }
    Ok(out)
}

fn leading_ones(parts: &[u32]) -> usize {
    parts.iter().take_while(|&&p| p == 1).count()
}

fn reg_word(parts: &[u32]) -> RegPoly {
    let m = leading_ones(parts);
    if m == 0 {
        return RegPoly::constant(NcPoly::from_word(word_from_parts(parts)));
    }
    let tail = &parts[1..];
    // z_1 * tail: the coefficient of `parts` itself is exactly m
    let mut rest = NcPoly::zero();
    let mut seen_self = 0u64;
    for (q, mult) in stuffle_parts(&[1], tail) {
        if q == parts {
            seen_self = mult;
        } else {
            rest.add_term(
                word_from_parts(&q),
                BigRational::from_integer(BigInt::from(mult)),
            );
        }
    }
    debug_assert_eq!(seen_self, m as u64);

    let mut out = reg_word(tail).shift_t(1);
    for (w, c) in rest.terms() {
        out = out.add(&reg_word(&index_parts(w)).scale(&-c.clone()));
    }
    out.scale(&BigRational::new(BigInt::from(1), BigInt::from(m as i64)))
}
