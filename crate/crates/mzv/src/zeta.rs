//! Formal rational linear combinations of zeta symbols, the common
//! currency between the identity generators and the numeric backends.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::index::Index;
use crate::poly::{coef_string, Coef, NcPoly};
use crate::word::AlgebraError;

/// Which family of symbols a combination talks about: the real nested
/// sums or the finite (mod-p) ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Real,
    Finite,
}

impl SymbolKind {
    pub fn tag(self) -> &'static str {
        match self {
            SymbolKind::Real => "real",
            SymbolKind::Finite => "finite",
        }
    }

    fn latex_symbol(self) -> &'static str {
        match self {
            SymbolKind::Real => r"\zeta",
            SymbolKind::Finite => r"\zeta_{\mathcal F}",
        }
    }
}

/// A finite map from indices to nonzero exact rational coefficients,
/// ordered canonically by weight, then depth, then part sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaCombo {
    kind: SymbolKind,
    terms: BTreeMap<Index, Coef>,
}

impl ZetaCombo {
    pub fn zero(kind: SymbolKind) -> Self {
        ZetaCombo {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(kind: SymbolKind, terms: impl IntoIterator<Item = (Index, Coef)>) -> Self {
        let mut combo = ZetaCombo::zero(kind);
        for (k, c) in terms {
            combo.add_term(k, c);
        }
        combo
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &Coef)> {
        self.terms.iter()
    }

    pub fn coef(&self, k: &Index) -> Coef {
        self.terms.get(k).cloned().unwrap_or_else(Coef::zero)
    }

    /// Merging accumulates coefficients; zero sums drop the term.
    pub fn add_term(&mut self, k: Index, c: Coef) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add(&self, other: &ZetaCombo) -> ZetaCombo {
        assert_eq!(self.kind, other.kind, "symbol kind mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ZetaCombo) -> ZetaCombo {
        assert_eq!(self.kind, other.kind, "symbol kind mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coef) -> ZetaCombo {
        if c.is_zero() {
            return ZetaCombo::zero(self.kind);
        }
        ZetaCombo {
            kind: self.kind,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Largest term weight; None for the empty combination.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Index::weight).max()
    }

    pub fn all_admissible(&self) -> bool {
        self.terms.keys().all(Index::is_admissible)
    }

    /// `[{"coef": "-2", "index": [4, 3]}, ...]` in canonical term order.
    pub fn to_json_terms(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    json!({
                        "coef": coef_string(c),
                        "index": k.parts(),
                    })
                })
                .collect(),
        )
    }

    /// `\zeta(...)` / `\zeta_{\mathcal F}(...)` rendering in canonical
    /// term order; the empty combination renders as `0`.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let sym = self.kind.latex_symbol();
        let mut out = String::new();
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if !abs.is_one() {
                if abs.denom().is_one() {
                    out.push_str(&abs.numer().to_string());
                } else {
                    out.push_str(&format!(r"\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
                }
            }
            out.push_str(&format!("{sym}({k})"));
        }
        out
    }
}

impl fmt::Display for ZetaCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.kind {
            SymbolKind::Real => "zeta",
            SymbolKind::Finite => "zeta_F",
        };
        let mut first = true;
        for (k, c) in &self.terms {
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
                write!(f, "{sym}({k})")?;
            } else {
                write!(f, "{} {sym}({k})", coef_string(&abs))?;
            }
        }
        Ok(())
    }
}

/// Relabel each h1 word of a polynomial as the index it encodes (the empty
/// word becomes the empty index). Rejects words outside h1.
pub fn to_zeta_combo(p: &NcPoly, kind: SymbolKind) -> Result<ZetaCombo, AlgebraError> {
    let mut combo = ZetaCombo::zero(kind);
    for (w, c) in p.terms() {
        let k = if w.is_empty() {
            Index::empty()
        } else {
            w.to_index()?
        };
        combo.add_term(k, c.clone());
    }
    Ok(combo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coef_int;
    use crate::word::Word;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec())
    }

    #[test]
    fn relabel_examples() {
        let w_xyy: Word = "xyy".parse().unwrap();
        let w_xxy: Word = "xxy".parse().unwrap();
        let p = &NcPoly::from_word(w_xyy) - &NcPoly::from_word(w_xxy);
        let combo = to_zeta_combo(&p, SymbolKind::Real).unwrap();
        assert_eq!(combo.coef(&idx(&[2, 1])), coef_int(1));
        assert_eq!(combo.coef(&idx(&[3])), coef_int(-1));
        assert_eq!(combo.num_terms(), 2);

        assert!(to_zeta_combo(&NcPoly::zero(), SymbolKind::Real)
            .unwrap()
            .is_zero());

        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = NcPoly::monomial("xy".parse().unwrap(), half.clone());
        let combo = to_zeta_combo(&p, SymbolKind::Real).unwrap();
        assert_eq!(combo.coef(&idx(&[2])), half);
    }

    #[test]
    fn relabel_rejects_non_h1() {
        let p = NcPoly::from_word("yx".parse().unwrap());
        assert!(matches!(
            to_zeta_combo(&p, SymbolKind::Real),
            Err(AlgebraError::NotInH1(_))
        ));
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut c = ZetaCombo::zero(SymbolKind::Real);
        c.add_term(idx(&[3]), coef_int(2));
        c.add_term(idx(&[3]), coef_int(-2));
        assert!(c.is_zero());
    }

    #[test]
    fn latex_rendering() {
        let mut c = ZetaCombo::zero(SymbolKind::Real);
        c.add_term(idx(&[7]), coef_int(1));
        c.add_term(idx(&[4, 3]), coef_int(-2));
        assert_eq!(c.to_latex(), r"\zeta(7)-2\zeta(4,3)");

        let mut c = ZetaCombo::zero(SymbolKind::Finite);
        c.add_term(
            idx(&[2]),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        assert_eq!(c.to_latex(), r"\frac{1}{2}\zeta_{\mathcal F}(2)");

        assert_eq!(ZetaCombo::zero(SymbolKind::Real).to_latex(), "0");
    }
}
