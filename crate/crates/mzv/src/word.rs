//! Words over the two-letter alphabet {x, y}.
//!
//! A word encodes an index through `z_k = x^{k-1} y`: the monomials ending
//! in `y` (together with the empty word) span the subalgebra h1, and the
//! monomials starting with `x` and ending in `y` span h0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::index::Index;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("word `{0}` is not in h1 (must be empty or end in y)")]
    NotInH1(Word),
    #[error("word `{0}` is not in h0 (must start with x and end in y)")]
    NotInH0(Word),
    #[error("cannot strip a leading x from `{0}`")]
    NotDivisibleByX(Word),
    #[error("the empty index has no word encoding")]
    EmptyIndex,
    #[error("invalid word character `{0}` (expected x or y)")]
    BadLetter(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

/// A monomial in the noncommutative ring Q<x, y>; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn degree(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn in_h1(&self) -> bool {
        self.letters.last().is_none_or(|&l| l == Letter::Y)
    }

    pub fn in_h0(&self) -> bool {
        self.is_empty()
            || (self.letters.first() == Some(&Letter::X) && self.letters.last() == Some(&Letter::Y))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `z_k = x^{k-1} y` for a single part.
    pub fn z(k: u32) -> Word {
        assert!(k >= 1);
        let mut letters = vec![Letter::X; k as usize - 1];
        letters.push(Letter::Y);
        Word { letters }
    }

    /// `z_{k_1} ... z_{k_d}` for a nonempty index.
    pub fn from_index(k: &Index) -> Result<Word, AlgebraError> {
        if k.is_empty() {
            return Err(AlgebraError::EmptyIndex);
        }
        let mut letters = Vec::with_capacity(k.weight() as usize);
        for &part in k.parts() {
            letters.extend(std::iter::repeat_n(Letter::X, part as usize - 1));
            letters.push(Letter::Y);
        }
        Ok(Word { letters })
    }

    /// Inverse of `from_index` on nonempty h1 monomials.
    pub fn to_index(&self) -> Result<Index, AlgebraError> {
        if self.is_empty() || !self.in_h1() {
            return Err(AlgebraError::NotInH1(self.clone()));
        }
        let mut parts = Vec::new();
        let mut run = 0u32;
        for &l in &self.letters {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    parts.push(run + 1);
                    run = 0;
                }
            }
        }
        Ok(Index::new(parts))
    }
}

/// Term order for display and canonical polynomials: degree, then
/// lexicographic with x < y.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            match l {
                Letter::X => write!(f, "x")?,
                Letter::Y => write!(f, "y")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = AlgebraError;

    /// `xxy` style; `1` (or the empty string) is the empty word.
    fn from_str(text: &str) -> Result<Self, AlgebraError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(trimmed.len());
        for c in trimmed.chars() {
            match c {
                'x' => letters.push(Letter::X),
                'y' => letters.push(Letter::Y),
                c if c.is_whitespace() => {}
                c => return Err(AlgebraError::BadLetter(c)),
            }
        }
        Ok(Word { letters })
    }
}

/// All words of the given degree, in lexicographic order with x < y.
pub fn words_of_degree(n: u32) -> Vec<Word> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u64 << n) {
        let letters = (0..n)
            .map(|i| {
                if mask >> (n - 1 - i) & 1 == 0 {
                    Letter::X
                } else {
                    Letter::Y
                }
            })
            .collect();
        out.push(Word::from_letters(letters));
    }
    out
}

/// Nonconstant h0 monomials of the given degree (start x, end y).
pub fn h0_words(n: u32) -> Vec<Word> {
    if n < 2 {
        return Vec::new();
    }
    words_of_degree(n - 2)
        .into_iter()
        .map(|w| {
            let mut letters = vec![Letter::X];
            letters.extend_from_slice(w.letters());
            letters.push(Letter::Y);
            Word::from_letters(letters)
        })
        .collect()
}

/// h1 monomials of the given degree (end y); the empty word for degree 0.
pub fn h1_words(n: u32) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    words_of_degree(n - 1)
        .into_iter()
        .map(|w| {
            let mut letters = w.letters().to_vec();
            letters.push(Letter::Y);
            Word::from_letters(letters)
        })
        .collect()
}
