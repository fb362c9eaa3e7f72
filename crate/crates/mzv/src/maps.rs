//! The linear and multiplicative maps on Q<x, y> used by the identity
//! generators: the letter-swapping anti-automorphism tau, the endomorphism
//! alpha, the derivations del_l and D_l, the substitution automorphism
//! sigma (degree-capped), and left multiplication by x.

use num_traits::One;

use crate::poly::{Coef, NcPoly};
use crate::word::{AlgebraError, Letter, Word};

/// Anti-automorphism with tau(x) = y, tau(y) = x: reverse each word and
/// swap its letters.
pub fn tau(p: &NcPoly) -> NcPoly {
    p.apply_linear(|w| {
        let letters = w
            .letters()
            .iter()
            .rev()
            .map(|&l| match l {
                Letter::X => Letter::Y,
                Letter::Y => Letter::X,
            })
            .collect();
        NcPoly::from_word(Word::from_letters(letters))
    })
}

/// Ring endomorphism with alpha(x) = x - xy and alpha(y) = -xy.
pub fn alpha(p: &NcPoly) -> NcPoly {
    let img_x =
        &NcPoly::from_word("x".parse().unwrap()) - &NcPoly::from_word("xy".parse().unwrap());
    let img_y = -&NcPoly::from_word("xy".parse().unwrap());
    p.apply_linear(|w| {
        let mut acc = NcPoly::one();
        for &l in w.letters() {
            let img = match l {
                Letter::X => &img_x,
                Letter::Y => &img_y,
            };
            acc = &acc * img;
        }
        acc
    })
}

/// `x z^{l-1} y` with z = x + y: the sum of all degree-(l+1) words that
/// start with x and end in y.
fn x_z_pow_y(l: u32) -> NcPoly {
    let mut out = NcPoly::zero();
    for mid in crate::word::words_of_degree(l - 1) {
        let mut letters = vec![Letter::X];
        letters.extend_from_slice(mid.letters());
        letters.push(Letter::Y);
        out.add_term(Word::from_letters(letters), Coef::one());
    }
    out
}

fn leibniz(p: &NcPoly, img_x: &NcPoly, img_y: &NcPoly) -> NcPoly {
    p.apply_linear(|w| {
        let mut out = NcPoly::zero();
        for (i, &l) in w.letters().iter().enumerate() {
            let img = match l {
                Letter::X => img_x,
                Letter::Y => img_y,
            };
            if img.is_zero() {
                continue;
            }
            let prefix = NcPoly::from_word(Word::from_letters(w.letters()[..i].to_vec()));
            let suffix = NcPoly::from_word(Word::from_letters(w.letters()[i + 1..].to_vec()));
            out = &out + &(&(&prefix * img) * &suffix);
        }
        out
    })
}

/// The derivation del_l, determined by Leibniz's rule together with
/// del_l(x) = x z^{l-1} y and del_l(y) = -x z^{l-1} y. It kills 1 and
/// z = x + y.
pub fn derivation_del(l: u32, p: &NcPoly) -> NcPoly {
    assert!(l >= 1);
    let img_x = x_z_pow_y(l);
    let img_y = -&img_x;
    leibniz(p, &img_x, &img_y)
}

/// The derivation D_l, determined by D_l(x) = 0 and D_l(y) = x^l y.
pub fn derivation_d(l: u32, p: &NcPoly) -> NcPoly {
    assert!(l >= 1);
    let img_x = NcPoly::zero();
    let mut letters = vec![Letter::X; l as usize];
    letters.push(Letter::Y);
    let img_y = NcPoly::from_word(Word::from_letters(letters));
    leibniz(p, &img_x, &img_y)
}

/// The substitution automorphism sigma with sigma(x) = x and
/// sigma(y) = (1 + x + x^2 + ...) y, applied word by word and truncated to
/// degree `max_deg`. Agrees degree-by-degree with the exponential
/// exp(sum_l D_l / l) on the completed algebra.
pub fn sigma_trunc(p: &NcPoly, max_deg: u32) -> NcPoly {
    // sigma(y) truncated: x^j y for 0 <= j <= max_deg - 1
    let mut img_y = NcPoly::zero();
    for j in 0..max_deg {
        let mut letters = vec![Letter::X; j as usize];
        letters.push(Letter::Y);
        img_y.add_term(Word::from_letters(letters), Coef::one());
    }
    let img_x = NcPoly::from_word("x".parse().unwrap());
    p.apply_linear(|w| {
        if w.degree() > max_deg {
            return NcPoly::zero();
        }
        let mut acc = NcPoly::one();
        for &l in w.letters() {
            let img = match l {
                Letter::X => &img_x,
                Letter::Y => &img_y,
            };
            acc = (&acc * img).truncate(max_deg);
            if acc.is_zero() {
                break;
            }
        }
        acc
    })
}

/// Left multiplication by x.
pub fn lx_prepend(p: &NcPoly) -> NcPoly {
    p.apply_linear(|w| {
        let mut letters = vec![Letter::X];
        letters.extend_from_slice(w.letters());
        NcPoly::from_word(Word::from_letters(letters))
    })
}

/// Remove one leading x from every word; fails if any word is empty or
/// starts with y.
pub fn lx_strip(p: &NcPoly) -> Result<NcPoly, AlgebraError> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        if w.letters().first() != Some(&Letter::X) {
            return Err(AlgebraError::NotDivisibleByX(w.clone()));
        }
        out.add_term(Word::from_letters(w.letters()[1..].to_vec()), c.clone());
    }
    Ok(out)
}
