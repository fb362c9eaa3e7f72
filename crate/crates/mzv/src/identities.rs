//! Generators producing both sides of each identity family as exact
//! symbol combinations.
//!
//! Each main-family identity is generated twice by independent routes:
//! once by enumerating refinements and compositions at the index level,
//! and once by expanding words of the two-letter algebra and decoding the
//! monomials. The two routes must agree term for term.

use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::index::{compositions, weak_compositions, Index, IndexError};
use crate::maps::{derivation_del, lx_prepend, lx_strip};
use crate::poly::{coef_int, Coef, NcPoly};
use crate::stuffle::{reg_star, stuffle};
use crate::word::{AlgebraError, Letter, Word};
use crate::zeta::{to_zeta_combo, SymbolKind, ZetaCombo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("need r >= dep(k): got r = {r}, dep = {depth}")]
    Infeasible { r: u32, depth: u32 },
    #[error("a nonempty index is required")]
    EmptyIndex,
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which statement an instance came from, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    HeightOne { k: u32, r: u32 },
    Main { k: Index, r: u32 },
    MainAlgebraic { k: Index, r: u32 },
    Finite { k: Index, r: u32 },
    FiniteAlgebraic { k: Index, r: u32 },
    Ohno { k: Index, m: u32 },
    OhnoFinite { k: Index, m: u32 },
    Derivation { l: u32, word: Word },
    DerivationFinite { l: u32, word: Word },
}

impl Provenance {
    pub fn theorem_tag(&self) -> &'static str {
        match self {
            Provenance::HeightOne { .. } => "height-one",
            Provenance::Main { .. } => "main",
            Provenance::MainAlgebraic { .. } => "main-algebraic",
            Provenance::Finite { .. } => "finite",
            Provenance::FiniteAlgebraic { .. } => "finite-algebraic",
            Provenance::Ohno { .. } => "ohno",
            Provenance::OhnoFinite { .. } => "ohno-finite",
            Provenance::Derivation { .. } => "derivation",
            Provenance::DerivationFinite { .. } => "derivation-finite",
        }
    }

    pub fn params_json(&self) -> Value {
        match self {
            Provenance::HeightOne { k, r } => json!({ "k": k, "r": r }),
            Provenance::Main { k, r }
            | Provenance::MainAlgebraic { k, r }
            | Provenance::Finite { k, r }
            | Provenance::FiniteAlgebraic { k, r } => json!({ "k": k.parts(), "r": r }),
            Provenance::Ohno { k, m } | Provenance::OhnoFinite { k, m } => {
                json!({ "k": k.parts(), "m": m })
            }
            Provenance::Derivation { l, word } | Provenance::DerivationFinite { l, word } => {
                json!({ "l": l, "word": word.to_string() })
            }
        }
    }
}

/// An identity: two symbol combinations asserted equal, with provenance.
/// Both sides share the symbol kind and all terms have equal weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    pub lhs: ZetaCombo,
    pub rhs: ZetaCombo,
    pub provenance: Provenance,
}

impl IdentityInstance {
    fn new(lhs: ZetaCombo, rhs: ZetaCombo, provenance: Provenance) -> Self {
        assert_eq!(lhs.kind(), rhs.kind(), "instance sides must share a kind");
        debug_assert!(
            {
                let weights: std::collections::BTreeSet<u32> = lhs
                    .terms()
                    .chain(rhs.terms())
                    .map(|(k, _)| k.weight())
                    .collect();
                weights.len() <= 1
            },
            "instance terms must share one weight"
        );
        IdentityInstance {
            lhs,
            rhs,
            provenance,
        }
    }

    pub fn kind(&self) -> SymbolKind {
        self.lhs.kind()
    }

    /// lhs - rhs: the combination the backends drive to zero.
    pub fn difference(&self) -> ZetaCombo {
        self.lhs.sub(&self.rhs)
    }

    pub fn to_latex(&self) -> String {
        format!("{}={}", self.lhs.to_latex(), self.rhs.to_latex())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.provenance.theorem_tag(),
            "params": self.provenance.params_json(),
            "lhs": self.lhs.to_json_terms(),
            "rhs": self.rhs.to_json_terms(),
        })
    }
}

/// Height-one family: `zeta(k+1, 1^{r-1})` as a signed double sum of
/// composition shifts.
pub fn gen_height_one(k: u32, r: u32) -> IdentityInstance {
    assert!(k >= 1 && r >= 1);
    let mut lhs_parts = vec![k + 1];
    lhs_parts.extend(std::iter::repeat_n(1, r as usize - 1));
    let lhs = ZetaCombo::from_terms(SymbolKind::Real, [(Index::new(lhs_parts), Coef::one())]);

    let mut rhs = ZetaCombo::zero(SymbolKind::Real);
    for i in 1..=k.min(r) {
        let sign = coef_int(if (i - 1) % 2 == 0 { 1 } else { -1 });
        for a in compositions(k, i) {
            for b in compositions(r, i) {
                rhs.add_term(a.add_parts(&b), sign.clone());
            }
        }
    }
    IdentityInstance::new(lhs, rhs, Provenance::HeightOne { k, r })
}

fn check_main_params(k: &Index, r: u32) -> Result<(), IdentityError> {
    if k.is_empty() {
        return Err(IdentityError::EmptyIndex);
    }
    if r < k.depth() {
        return Err(IdentityError::Infeasible {
            r,
            depth: k.depth(),
        });
    }
    Ok(())
}

/// The interleaved left-hand side `zeta(k_1+1, 1^{r_1-1}, ..., k_d+1,
/// 1^{r_d-1})` summed over compositions of r.
fn main_lhs(k: &Index, r: u32, kind: SymbolKind) -> ZetaCombo {
    let d = k.depth();
    let mut lhs = ZetaCombo::zero(kind);
    for comp in compositions(r, d) {
        let mut parts = Vec::new();
        for (&ki, &ri) in k.parts().iter().zip(comp.parts()) {
            parts.push(ki + 1);
            parts.extend(std::iter::repeat_n(1, ri as usize - 1));
        }
        lhs.add_term(Index::new(parts), Coef::one());
    }
    lhs
}

/// The signed refinement sum shared by the main family and its finite
/// counterpart: over refinements k' of k with dep(k') <= r and
/// compositions of r of matching depth, with sign (-1)^(dep(k')-d).
fn refinement_rhs(k: &Index, r: u32, kind: SymbolKind) -> ZetaCombo {
    let d = k.depth();
    let mut rhs = ZetaCombo::zero(kind);
    for refined in k.refinements() {
        let dp = refined.depth();
        if dp > r {
            continue;
        }
        let sign = coef_int(if (dp - d).is_multiple_of(2) { 1 } else { -1 });
        for comp in compositions(r, dp) {
            rhs.add_term(refined.add_parts(&comp), sign.clone());
        }
    }
    rhs
}

/// Main family: interleaved height-one strings against the signed
/// refinement sum.
pub fn gen_main(k: &Index, r: u32) -> Result<IdentityInstance, IdentityError> {
    check_main_params(k, r)?;
    Ok(IdentityInstance::new(
        main_lhs(k, r, SymbolKind::Real),
        refinement_rhs(k, r, SymbolKind::Real),
        Provenance::Main { k: k.clone(), r },
    ))
}

/// Finite counterpart: the left side also ranges over strings that start
/// with ones (compositions of r+1 into d+1 parts).
pub fn gen_finite(k: &Index, r: u32) -> Result<IdentityInstance, IdentityError> {
    check_main_params(k, r)?;
    let d = k.depth();
    let mut lhs = ZetaCombo::zero(SymbolKind::Finite);
    for comp in compositions(r + 1, d + 1) {
        let r0 = comp.parts()[0];
        let mut parts = Vec::new();
        parts.extend(std::iter::repeat_n(1, r0 as usize - 1));
        for (&ki, &ri) in k.parts().iter().zip(&comp.parts()[1..]) {
            parts.push(ki + 1);
            parts.extend(std::iter::repeat_n(1, ri as usize - 1));
        }
        lhs.add_term(Index::new(parts), Coef::one());
    }
    Ok(IdentityInstance::new(
        lhs,
        refinement_rhs(k, r, SymbolKind::Finite),
        Provenance::Finite { k: k.clone(), r },
    ))
}

/// Ohno's relations: epsilon-shifted sums over an admissible index and its
/// dual agree; m = 0 recovers the duality theorem.
pub fn gen_ohno(k: &Index, m: u32) -> Result<IdentityInstance, IdentityError> {
    let dual = k.dual()?;
    let shifted_sum = |base: &Index| {
        let mut combo = ZetaCombo::zero(SymbolKind::Real);
        for eps in weak_compositions(m, base.depth()) {
            let shifted = Index::new(base.parts().iter().zip(&eps).map(|(p, e)| p + e).collect());
            combo.add_term(shifted, Coef::one());
        }
        combo
    };
    Ok(IdentityInstance::new(
        shifted_sum(k),
        shifted_sum(&dual),
        Provenance::Ohno { k: k.clone(), m },
    ))
}

/// Ohno-type relations for the finite symbols, through Hoffman's dual:
/// the right side shifts the dual and dualizes each shifted index again.
pub fn gen_ohno_finite(k: &Index, m: u32) -> Result<IdentityInstance, IdentityError> {
    if k.is_empty() {
        return Err(IdentityError::EmptyIndex);
    }
    let mut lhs = ZetaCombo::zero(SymbolKind::Finite);
    for eps in weak_compositions(m, k.depth()) {
        let shifted = Index::new(k.parts().iter().zip(&eps).map(|(p, e)| p + e).collect());
        lhs.add_term(shifted, Coef::one());
    }
    let hdual = k.hoffman_dual()?;
    let mut rhs = ZetaCombo::zero(SymbolKind::Finite);
    for eps in weak_compositions(m, hdual.depth()) {
        let shifted = Index::new(hdual.parts().iter().zip(&eps).map(|(p, e)| p + e).collect());
        rhs.add_term(shifted.hoffman_dual()?, Coef::one());
    }
    Ok(IdentityInstance::new(
        lhs,
        rhs,
        Provenance::OhnoFinite { k: k.clone(), m },
    ))
}

/// Derivation relation: the image of an admissible word under del_l,
/// decoded to symbols. The combination evaluates to zero.
pub fn gen_derivation(l: u32, w: &Word) -> Result<ZetaCombo, IdentityError> {
    if !w.in_h0() {
        return Err(AlgebraError::NotInH0(w.clone()).into());
    }
    let image = derivation_del(l, &NcPoly::from_word(w.clone()));
    Ok(to_zeta_combo(&image, SymbolKind::Real)?)
}

/// Finite derivation relation: conjugate del_l by left multiplication
/// with x before decoding. The strip cannot fail because every term of
/// del_l(x...) keeps its leading x.
pub fn gen_derivation_finite(l: u32, w: &Word) -> Result<ZetaCombo, IdentityError> {
    if !w.in_h1() {
        return Err(AlgebraError::NotInH1(w.clone()).into());
    }
    let image = derivation_del(l, &lx_prepend(&NcPoly::from_word(w.clone())));
    let stripped = lx_strip(&image)?;
    Ok(to_zeta_combo(&stripped, SymbolKind::Finite)?)
}

/// Wrap a derivation relation as an instance with zero right-hand side,
/// so the verifiers and the command line can treat it uniformly.
pub fn derivation_instance(l: u32, w: &Word) -> Result<IdentityInstance, IdentityError> {
    let lhs = gen_derivation(l, w)?;
    Ok(IdentityInstance::new(
        lhs,
        ZetaCombo::zero(SymbolKind::Real),
        Provenance::Derivation { l, word: w.clone() },
    ))
}

pub fn derivation_finite_instance(l: u32, w: &Word) -> Result<IdentityInstance, IdentityError> {
    let lhs = gen_derivation_finite(l, w)?;
    Ok(IdentityInstance::new(
        lhs,
        ZetaCombo::zero(SymbolKind::Finite),
        Provenance::DerivationFinite { l, word: w.clone() },
    ))
}

/// Decode a list of signed words into a combination.
fn combo_from_words(
    words: Vec<(Vec<Letter>, i64)>,
    kind: SymbolKind,
) -> Result<ZetaCombo, IdentityError> {
    let mut combo = ZetaCombo::zero(kind);
    for (letters, sign) in words {
        let index = Word::from_letters(letters).to_index()?;
        combo.add_term(index, coef_int(sign));
    }
    Ok(combo)
}

/// Words `x^{k_1} y^{r_1} ... x^{k_d} y^{r_d}` over compositions
/// (r_1, ..., r_d) of r: the word-level form of the main left-hand side.
fn tau_side_words(k: &Index, r: u32) -> Vec<(Vec<Letter>, i64)> {
    let d = k.depth();
    let mut out = Vec::new();
    for comp in compositions(r, d) {
        let mut letters = Vec::new();
        for (&ki, &ri) in k.parts().iter().zip(comp.parts()) {
            letters.extend(std::iter::repeat_n(Letter::X, ki as usize));
            letters.extend(std::iter::repeat_n(Letter::Y, ri as usize));
        }
        out.push((letters, 1));
    }
    out
}

/// The exponent expansion of the sigma side: one slot per letter of the
/// source word `x^{k_1-1}y ... x^{k_d-1}y`, exponents e >= 0 on the inner
/// slots and e >= 1 on each closing slot, summing to r. A slot with e >= 1
/// contributes the factor x^e y (sign -1 on inner slots); a zero exponent
/// contributes the bare letter x with the written extra sign -1, which
/// cancels the factor sign.
fn sigma_side_words(k: &Index, r: u32) -> Vec<(Vec<Letter>, i64)> {
    #[derive(Clone, Copy)]
    struct Slot {
        min: u32,
        closing: bool,
    }
    let mut slots = Vec::new();
    for &ki in k.parts() {
        for j in 1..=ki {
            slots.push(Slot {
                min: if j == ki { 1 } else { 0 },
                closing: j == ki,
            });
        }
    }
    let tail_min: Vec<u32> = {
        let mut acc = 0;
        let mut v: Vec<u32> = slots
            .iter()
            .rev()
            .map(|s| {
                acc += s.min;
                acc
            })
            .collect();
        v.reverse();
        v.push(0);
        v
    };

    let mut out = Vec::new();
    let mut letters: Vec<Letter> = Vec::new();
    fn rec(
        slots: &[Slot],
        tail_min: &[u32],
        pos: usize,
        remaining: u32,
        sign: i64,
        letters: &mut Vec<Letter>,
        out: &mut Vec<(Vec<Letter>, i64)>,
    ) {
        if pos == slots.len() {
            if remaining == 0 {
                out.push((letters.clone(), sign));
            }
            return;
        }
        let slot = slots[pos];
        let reserve = tail_min[pos + 1];
        if remaining < slot.min + reserve {
            return;
        }
        for e in slot.min..=(remaining - reserve) {
            let len_before = letters.len();
            let mut s = sign;
            if e == 0 {
                // x^0 y is read as -x; the factor's own minus makes it +x
                letters.push(Letter::X);
            } else {
                letters.extend(std::iter::repeat_n(Letter::X, e as usize));
                letters.push(Letter::Y);
                if !slot.closing {
                    s = -s;
                }
            }
            rec(slots, tail_min, pos + 1, remaining - e, s, letters, out);
            letters.truncate(len_before);
        }
    }
    rec(&slots, &tail_min, 0, r, 1, &mut letters, &mut out);
    out
}

/// Second, word-level route to the main family: both sides are produced
/// by expanding monomials of the two-letter algebra and decoding them.
/// Must agree with `gen_main` exactly.
pub fn gen_main_algebraic(k: &Index, r: u32) -> Result<IdentityInstance, IdentityError> {
    check_main_params(k, r)?;
    let lhs = combo_from_words(tau_side_words(k, r), SymbolKind::Real)?;
    let rhs = combo_from_words(sigma_side_words(k, r), SymbolKind::Real)?;
    Ok(IdentityInstance::new(
        lhs,
        rhs,
        Provenance::MainAlgebraic { k: k.clone(), r },
    ))
}

/// Word-level route to the finite family: the left side gains a leading
/// `y^{r_0-1}` block (compositions of r+1), the right side reuses the
/// exponent expansion.
pub fn gen_finite_algebraic(k: &Index, r: u32) -> Result<IdentityInstance, IdentityError> {
    check_main_params(k, r)?;
    let d = k.depth();
    let mut lhs_words = Vec::new();
    for comp in compositions(r + 1, d + 1) {
        let mut letters = Vec::new();
        letters.extend(std::iter::repeat_n(Letter::Y, comp.parts()[0] as usize - 1));
        for (&ki, &ri) in k.parts().iter().zip(&comp.parts()[1..]) {
            letters.extend(std::iter::repeat_n(Letter::X, ki as usize));
            letters.extend(std::iter::repeat_n(Letter::Y, ri as usize));
        }
        lhs_words.push((letters, 1));
    }
    let lhs = combo_from_words(lhs_words, SymbolKind::Finite)?;
    let rhs = combo_from_words(sigma_side_words(k, r), SymbolKind::Finite)?;
    Ok(IdentityInstance::new(
        lhs,
        rhs,
        Provenance::FiniteAlgebraic { k: k.clone(), r },
    ))
}

/// Symmetrized value: the signed sum over cut points of stuffle products
/// of regularized reversed-prefix and suffix values taken at T = 0.
/// Supported on admissible indices only.
pub fn sym_mzv_star(k: &Index) -> Result<ZetaCombo, IdentityError> {
    if k.is_empty() {
        return Err(IdentityError::EmptyIndex);
    }
    let d = k.depth() as usize;
    let reg0 = |parts: &[u32]| -> Result<NcPoly, IdentityError> {
        if parts.is_empty() {
            return Ok(NcPoly::one());
        }
        let word = Word::from_index(&Index::new(parts.to_vec()))?;
        Ok(reg_star(&NcPoly::from_word(word))?.constant_term())
    };

    let mut acc = NcPoly::zero();
    for i in 0..=d {
        let mut left: Vec<u32> = k.parts()[..i].to_vec();
        left.reverse();
        let right: Vec<u32> = k.parts()[i..].to_vec();
        let product = stuffle(&reg0(&left)?, &reg0(&right)?)?;
        let exponent: u32 = k.parts()[..i].iter().sum();
        let sign = coef_int(if exponent.is_multiple_of(2) { 1 } else { -1 });
        acc = &acc + &product.scale(&sign);
    }
    Ok(to_zeta_combo(&acc, SymbolKind::Real)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec())
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn height_one_trivial() {
        let inst = gen_height_one(1, 1);
        assert_eq!(inst.lhs.coef(&idx(&[2])), coef_int(1));
        assert_eq!(inst.lhs, inst.rhs);
    }

    #[test]
    fn height_one_k2_r2() {
        let inst = gen_height_one(2, 2);
        assert_eq!(inst.lhs.coef(&idx(&[3, 1])), coef_int(1));
        assert_eq!(inst.lhs.num_terms(), 1);
        assert_eq!(inst.rhs.coef(&idx(&[4])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[2, 2])), coef_int(-1));
        assert_eq!(inst.rhs.num_terms(), 2);
    }

    #[test]
    fn height_one_example_shape() {
        let inst = gen_height_one(3, 4);
        assert_eq!(inst.lhs.coef(&idx(&[4, 1, 1, 1])), coef_int(1));
        assert_eq!(inst.rhs.num_terms(), 8);
        assert_eq!(inst.rhs.coef(&idx(&[4, 3])), coef_int(-2));
        assert_eq!(inst.rhs.coef(&idx(&[2, 2, 3])), coef_int(1));
    }

    #[test]
    fn main_depth_one_matches_height_one() {
        let a = gen_main(&idx(&[3]), 4).unwrap();
        let b = gen_height_one(3, 4);
        assert_eq!(a.lhs, b.lhs);
        assert_eq!(a.rhs, b.rhs);
    }

    #[test]
    fn main_rejects_small_r() {
        assert!(matches!(
            gen_main(&idx(&[3, 2]), 1),
            Err(IdentityError::Infeasible { r: 1, depth: 2 })
        ));
        assert!(matches!(
            gen_main(&Index::empty(), 3),
            Err(IdentityError::EmptyIndex)
        ));
    }

    #[test]
    fn finite_small_cases() {
        let inst = gen_finite(&idx(&[2]), 1).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[3])), coef_int(1));
        assert_eq!(inst.lhs.num_terms(), 1);
        assert_eq!(inst.rhs.coef(&idx(&[3])), coef_int(1));
        assert_eq!(inst.rhs.num_terms(), 1);

        let inst = gen_finite(&idx(&[2]), 2).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[3, 1])), coef_int(1));
        assert_eq!(inst.lhs.coef(&idx(&[1, 3])), coef_int(1));
        assert_eq!(inst.lhs.num_terms(), 2);
        assert_eq!(inst.rhs.coef(&idx(&[4])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[2, 2])), coef_int(-1));
        assert_eq!(inst.rhs.num_terms(), 2);
    }

    #[test]
    fn ohno_cases() {
        let inst = gen_ohno(&idx(&[2, 1]), 0).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[2, 1])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[3])), coef_int(1));
        assert_eq!(inst.rhs.num_terms(), 1);

        let inst = gen_ohno(&idx(&[2, 1]), 1).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[3, 1])), coef_int(1));
        assert_eq!(inst.lhs.coef(&idx(&[2, 2])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[4])), coef_int(1));

        let inst = gen_ohno(&idx(&[2]), 2).unwrap();
        assert_eq!(inst.lhs, inst.rhs);
        assert!(matches!(
            gen_ohno(&idx(&[1, 2]), 1),
            Err(IdentityError::Index(IndexError::NotAdmissible(_)))
        ));
    }

    #[test]
    fn ohno_finite_cases() {
        let inst = gen_ohno_finite(&idx(&[2]), 1).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[3])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[1, 2])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[2, 1])), coef_int(1));
        assert_eq!(inst.rhs.num_terms(), 2);

        let inst = gen_ohno_finite(&idx(&[1]), 0).unwrap();
        assert_eq!(inst.lhs, inst.rhs);

        // the hoffman dual of (1,1) is (2); shifting and dualizing again
        // turns (3) into (1,1,1)
        let inst = gen_ohno_finite(&idx(&[1, 1]), 1).unwrap();
        assert_eq!(inst.lhs.coef(&idx(&[2, 1])), coef_int(1));
        assert_eq!(inst.lhs.coef(&idx(&[1, 2])), coef_int(1));
        assert_eq!(inst.rhs.coef(&idx(&[1, 1, 1])), coef_int(1));
        assert_eq!(inst.rhs.num_terms(), 1);
    }

    #[test]
    fn derivation_cases() {
        let combo = gen_derivation(1, &word("xy")).unwrap();
        assert_eq!(combo.coef(&idx(&[2, 1])), coef_int(1));
        assert_eq!(combo.coef(&idx(&[3])), coef_int(-1));

        let combo = gen_derivation(1, &word("xxy")).unwrap();
        assert_eq!(combo.coef(&idx(&[2, 2])), coef_int(1));
        assert_eq!(combo.coef(&idx(&[3, 1])), coef_int(1));
        assert_eq!(combo.coef(&idx(&[4])), coef_int(-1));

        assert!(gen_derivation(1, &word("yy")).is_err());
    }

    #[test]
    fn derivation_finite_cases() {
        let combo = gen_derivation_finite(1, &word("y")).unwrap();
        assert_eq!(combo.coef(&idx(&[1, 1])), coef_int(1));
        assert_eq!(combo.coef(&idx(&[2])), coef_int(-1));

        assert!(gen_derivation_finite(1, &word("yx")).is_err());
    }

    #[test]
    fn algebraic_routes_match_small() {
        let a = gen_main_algebraic(&idx(&[1]), 1).unwrap();
        assert_eq!(a.lhs.coef(&idx(&[2])), coef_int(1));
        assert_eq!(a.lhs, a.rhs);

        for (k, r) in [(vec![3u32], 4u32), (vec![2, 1], 3), (vec![3, 2], 4)] {
            let k = Index::new(k);
            let direct = gen_main(&k, r).unwrap();
            let word_level = gen_main_algebraic(&k, r).unwrap();
            assert_eq!(direct.lhs, word_level.lhs, "lhs for {k}, r = {r}");
            assert_eq!(direct.rhs, word_level.rhs, "rhs for {k}, r = {r}");
        }

        for (k, r) in [(vec![1u32], 1u32), (vec![2], 2), (vec![3, 2], 4)] {
            let k = Index::new(k);
            let direct = gen_finite(&k, r).unwrap();
            let word_level = gen_finite_algebraic(&k, r).unwrap();
            assert_eq!(direct.lhs, word_level.lhs, "lhs for {k}, r = {r}");
            assert_eq!(direct.rhs, word_level.rhs, "rhs for {k}, r = {r}");
        }
    }

    #[test]
    fn sym_star_cases() {
        assert!(sym_mzv_star(&idx(&[1])).unwrap().is_zero());
        assert!(sym_mzv_star(&idx(&[3])).unwrap().is_zero());

        let combo = sym_mzv_star(&idx(&[2, 1])).unwrap();
        assert_eq!(combo.coef(&idx(&[2, 1])), coef_int(2));
        assert_eq!(combo.coef(&idx(&[3])), coef_int(1));
        assert_eq!(combo.num_terms(), 2);
        assert!(combo.all_admissible());
    }

    #[test]
    fn json_shape() {
        let inst = gen_height_one(1, 1);
        let v = inst.to_json();
        assert_eq!(v["theorem"], "height-one");
        assert_eq!(v["params"]["k"], 1);
        assert_eq!(v["lhs"][0]["coef"], "1");
        assert_eq!(v["lhs"][0]["index"][0], 2);
    }

    #[test]
    fn latex_shape() {
        let inst = gen_height_one(2, 2);
        assert_eq!(inst.to_latex(), r"\zeta(3,1)=\zeta(4)-\zeta(2,2)");
    }
}
