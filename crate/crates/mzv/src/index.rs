//! Index sets: compositions of positive integers naming zeta symbols.
//!
//! An index `(k_1, ..., k_d)` carries three statistics (weight, depth,
//! height), an admissibility predicate (`k_1 >= 2`), and two dualities:
//! the classical dual coming from the run decomposition of the index and
//! Hoffman's dual coming from the comma/plus exchange on the all-ones
//! expansion.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    #[error("index parts must be positive integers (offset {offset})")]
    NonPositivePart { offset: usize },
    #[error("index ({0}) is not admissible (leading part must be >= 2)")]
    NotAdmissible(Index),
    #[error("operation requires a nonempty index")]
    Empty,
}

/// A finite sequence of positive integers. The empty index is legal data;
/// operations that need depth >= 1 reject it explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    /// Panics if any part is zero; parse via `FromStr` for fallible input.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "index parts must be >= 1");
        Index { parts }
    }

    pub fn empty() -> Self {
        Index { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn height(&self) -> u32 {
        self.parts.iter().filter(|&&p| p >= 2).count() as u32
    }

    pub fn is_admissible(&self) -> bool {
        self.parts.first().is_some_and(|&p| p >= 2)
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats {
            weight: self.weight(),
            depth: self.depth(),
            height: self.height(),
            admissible: self.is_admissible(),
        }
    }

    /// Componentwise sum with an index of the same depth.
    pub fn add_parts(&self, other: &Index) -> Index {
        assert_eq!(self.depth(), other.depth(), "depth mismatch in index sum");
        Index::new(
            self.parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// The classical dual index, via the run decomposition
    /// `k = (a_1+1, 1^{b_1-1}, ..., a_s+1, 1^{b_s-1})` with `a_p, b_q >= 1`,
    /// mapped to `(b_s+1, 1^{a_s-1}, ..., b_1+1, 1^{a_1-1})`.
    pub fn dual(&self) -> Result<Index, IndexError> {
        if !self.is_admissible() {
            return Err(IndexError::NotAdmissible(self.clone()));
        }
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for &part in &self.parts {
            if part >= 2 {
                runs.push((part - 1, 1));
            } else {
                // part == 1 extends the current run; k_1 >= 2 guarantees one exists
                runs.last_mut().unwrap().1 += 1;
            }
        }
        let mut parts = Vec::with_capacity(self.weight() as usize);
        for &(a, b) in runs.iter().rev() {
            parts.push(b + 1);
            parts.extend(std::iter::repeat_n(1, a as usize - 1));
        }
        Ok(Index::new(parts))
    }

    /// Hoffman's dual: write the index as wt(k) ones with commas inside
    /// parts and plus signs at part boundaries, then exchange the two
    /// separators. Equivalently, the new part boundaries are the complement
    /// of the old ones among the wt(k)-1 gaps.
    pub fn hoffman_dual(&self) -> Result<Index, IndexError> {
        if self.is_empty() {
            return Err(IndexError::Empty);
        }
        let n = self.weight();
        let mut boundary = vec![false; n as usize + 1];
        let mut acc = 0;
        for &part in &self.parts[..self.parts.len() - 1] {
            acc += part;
            boundary[acc as usize] = true;
        }
        let mut parts = Vec::new();
        let mut run = 0u32;
        for gap in 1..n {
            run += 1;
            // complemented boundary: split where the original did not
            if !boundary[gap as usize] {
                parts.push(run);
                run = 0;
            }
        }
        parts.push(run + 1);
        Ok(Index::new(parts))
    }

    /// All refinements `k' >= k`: every part replaced by one of its
    /// compositions, concatenated. Returned in lexicographic order of the
    /// part sequences; the cardinality is `2^(wt - dep)`.
    pub fn refinements(&self) -> Vec<Index> {
        let mut out = vec![Vec::new()];
        for &part in &self.parts {
            let choices = all_compositions(part);
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for prefix in &out {
                for choice in &choices {
                    let mut parts = prefix.clone();
                    parts.extend_from_slice(choice.parts());
                    next.push(parts);
                }
            }
            out = next;
        }
        let mut out: Vec<Index> = out.into_iter().map(Index::new).collect();
        out.sort_by(|a, b| a.parts.cmp(&b.parts));
        out
    }
}

/// Canonical symbol ordering: weight, then depth, then part sequence.
impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical textual form: comma-separated parts, no parentheses.
impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = IndexError;

    /// Accepts `4,1,1,1` and `(4,1,1,1)` with arbitrary whitespace; the
    /// empty string (or `()`) denotes the empty index.
    fn from_str(text: &str) -> Result<Self, IndexError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };

        skip_ws(&mut pos);
        let mut closing = false;
        if pos < bytes.len() && bytes[pos] == b'(' {
            closing = true;
            pos += 1;
        }

        let mut parts = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] == b')' {
                if parts.is_empty() {
                    break; // empty index
                }
                return Err(IndexError::Syntax {
                    offset: pos,
                    expected: "digit",
                });
            }
            if !bytes[pos].is_ascii_digit() {
                return Err(IndexError::Syntax {
                    offset: pos,
                    expected: "digit",
                });
            }
            let start = pos;
            let mut value: u64 = 0;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                value = value * 10 + u64::from(bytes[pos] - b'0');
                if value > u64::from(u32::MAX) {
                    return Err(IndexError::NonPositivePart { offset: start });
                }
                pos += 1;
            }
            if value == 0 {
                return Err(IndexError::NonPositivePart { offset: start });
            }
            parts.push(value as u32);
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                continue;
            }
            break;
        }

        skip_ws(&mut pos);
        if closing {
            if pos >= bytes.len() || bytes[pos] != b')' {
                return Err(IndexError::Syntax {
                    offset: pos,
                    expected: "')'",
                });
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos != bytes.len() {
            return Err(IndexError::Syntax {
                offset: pos,
                expected: "end of input",
            });
        }
        Ok(Index { parts })
    }
}

/// Index statistics plus the admissibility flag (`k_1 >= 2`, depth >= 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexStats {
    pub weight: u32,
    pub depth: u32,
    pub height: u32,
    pub admissible: bool,
}

/// All compositions of `n` into exactly `parts` positive integers, in
/// lexicographic order. Empty when `parts > n` or exactly one of them is
/// zero; the single empty sequence when `n == parts == 0`.
pub fn compositions(n: u32, parts: u32) -> Vec<Index> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts as usize);
    fn rec(n: u32, parts: u32, current: &mut Vec<u32>, out: &mut Vec<Index>) {
        if parts == 0 {
            if n == 0 {
                out.push(Index::new(current.clone()));
            }
            return;
        }
        if n < parts {
            return; // remaining parts are each >= 1
        }
        for first in 1..=(n - parts + 1) {
            current.push(first);
            rec(n - first, parts - 1, current, out);
            current.pop();
        }
    }
    rec(n, parts, &mut current, &mut out);
    out
}

/// All compositions of `n` into any number of positive parts, ordered by
/// depth and lexicographically within each depth. `2^(n-1)` entries for
/// `n >= 1`; the empty composition for `n == 0`.
pub fn all_compositions(n: u32) -> Vec<Index> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Index::empty());
        return out;
    }
    for d in 1..=n {
        out.extend(compositions(n, d));
    }
    out
}

/// All sequences of `slots` nonnegative integers summing to `total`, in
/// lexicographic order (the epsilon shifts of the Ohno-type sums).
pub fn weak_compositions(total: u32, slots: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots as usize);
    fn rec(total: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if total == 0 {
                out.push(current.clone());
            }
            return;
        }
        for first in 0..=total {
            current.push(first);
            rec(total - first, slots - 1, current, out);
            current.pop();
        }
    }
    rec(total, slots, &mut current, &mut out);
    out
}
