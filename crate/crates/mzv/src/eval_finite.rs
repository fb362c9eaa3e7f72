//! Mod-p backend: truncated nested harmonic sums modulo primes, and
//! congruence verification over prime sweeps.
//!
//! A depth-d symbol mod p costs O(d p) after an O(p) inverse table; the
//! sweep visits n = 1, ..., p-1 once, maintaining one partial sum per
//! level exactly as the real backend does.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::identities::IdentityInstance;
use crate::index::Index;
use crate::report::{
    PrimeFailure, ReportDetail, SkipReason, SkippedPrime, Status, VerificationReport,
};
use crate::zeta::{SymbolKind, ZetaCombo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} divides a coefficient denominator")]
    BadPrime { p: u64 },
    #[error("expected a {expected} combination, got {got}")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
    #[error("empty index has no finite evaluation")]
    EmptyIndex,
    #[error("no admitted primes for weight {weight} (floor requires p - 1 > weight)")]
    NoAdmittedPrimes { weight: u32 },
    #[error("prime list must be strictly ascending and prime (offender: {0})")]
    BadPrimeList(u64),
}

/// Default sweep bounds: all primes in [11, 1009].
pub const DEFAULT_PRIME_LO: u64 = 11;
pub const DEFAULT_PRIME_HI: u64 = 1009;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An ascending list of primes. Admission against a given identity weight
/// follows the floor rule p - 1 > weight; skipped primes are reported,
/// and failures above the floor are hard failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    /// All primes in [lo, hi], by sieve.
    pub fn range(lo: u64, hi: u64) -> PrimeSet {
        let mut primes = Vec::new();
        if hi >= 2 {
            let mut composite = vec![false; hi as usize + 1];
            for n in 2..=hi {
                if !composite[n as usize] {
                    if n >= lo {
                        primes.push(n);
                    }
                    let mut m = n * n;
                    while m <= hi {
                        composite[m as usize] = true;
                        m += n;
                    }
                }
            }
        }
        PrimeSet { primes }
    }

    pub fn default_sweep() -> PrimeSet {
        PrimeSet::range(DEFAULT_PRIME_LO, DEFAULT_PRIME_HI)
    }

    pub fn from_vec(primes: Vec<u64>) -> Result<PrimeSet, FiniteError> {
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) || (i > 0 && primes[i - 1] >= p) {
                return Err(FiniteError::BadPrimeList(p));
            }
        }
        Ok(PrimeSet { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Minimal admitted prime for a given identity weight.
    pub fn floor_for_weight(weight: u32) -> u64 {
        u64::from(weight) + 2
    }
}

/// Residues of one symbol across a prime set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteEval {
    pub residues: BTreeMap<u64, u64>,
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u32, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse table 1..p-1 by the standard recurrence.
fn inverse_table(p: u64) -> Vec<u64> {
    let mut inv = vec![0u64; p as usize];
    if p > 1 {
        inv[1] = 1;
        for i in 2..p {
            inv[i as usize] = mul_mod(p - p / i, inv[(p % i) as usize], p);
        }
    }
    inv
}

/// Truncated sum over p > n_1 > ... > n_d >= 1 of the inverse powers,
/// reduced mod p.
pub fn eval_fmzv_mod_p(k: &Index, p: u64) -> Result<u64, FiniteError> {
    if !is_prime(p) {
        return Err(FiniteError::NotPrime(p));
    }
    if k.is_empty() {
        return Err(FiniteError::EmptyIndex);
    }
    let inv = inverse_table(p);
    Ok(eval_with_table(k, p, &inv))
}

fn eval_with_table(k: &Index, p: u64, inv: &[u64]) -> u64 {
    let exps: Vec<u32> = k.parts().to_vec();
    let d = exps.len();
    let mut levels = vec![0u64; d];
    for n in 1..p {
        let inv_n = inv[n as usize];
        for t in 0..d {
            let inner = if t + 1 < d { levels[t + 1] } else { 1 };
            levels[t] = (levels[t] + mul_mod(pow_mod(inv_n, exps[t], p), inner, p)) % p;
        }
    }
    levels[0]
}

/// Residues of one symbol across a full prime set.
pub fn eval_fmzv(k: &Index, ps: &PrimeSet) -> Result<FiniteEval, FiniteError> {
    let mut residues = BTreeMap::new();
    for &p in ps.primes() {
        residues.insert(p, eval_fmzv_mod_p(k, p)?);
    }
    Ok(FiniteEval { residues })
}

fn bigint_mod_p(n: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut r = n % &pb;
    if r.sign() == num_bigint::Sign::Minus {
        r += &pb;
    }
    r.to_u64().expect("reduced residue fits u64")
}

/// Coefficient-weighted sum of term residues mod p. Fails loudly when p
/// divides any coefficient denominator.
pub fn eval_combo_mod_p(c: &ZetaCombo, p: u64) -> Result<u64, FiniteError> {
    if !is_prime(p) {
        return Err(FiniteError::NotPrime(p));
    }
    let inv = inverse_table(p);
    let mut acc = 0u64;
    for (k, coef) in c.terms() {
        let den = bigint_mod_p(coef.denom(), p);
        if den == 0 {
            return Err(FiniteError::BadPrime { p });
        }
        let num = bigint_mod_p(coef.numer(), p);
        let den_inv = inv[den as usize];
        let scalar = mul_mod(num, den_inv, p);
        let term = eval_with_table(k, p, &inv);
        acc = (acc + mul_mod(scalar, term, p)) % p;
    }
    Ok(acc)
}

fn denominator_clashes(c: &ZetaCombo, p: u64) -> bool {
    let pb = BigInt::from(p);
    c.terms().any(|(_, coef)| (coef.denom() % &pb).is_zero())
}

/// Check lhs - rhs = 0 mod every admitted prime of the set. A prime is
/// admitted when p - 1 exceeds the identity weight and p is coprime to
/// every coefficient denominator; skipped primes are listed with reasons,
/// and any nonzero residual above the floor is a failure.
pub fn verify_finite(
    inst: &IdentityInstance,
    ps: &PrimeSet,
) -> Result<VerificationReport, FiniteError> {
    if inst.kind() != SymbolKind::Finite {
        return Err(FiniteError::WrongKind {
            expected: "finite",
            got: inst.kind().tag(),
        });
    }
    let diff = inst.difference();
    let weight = diff.max_weight().unwrap_or(0);
    let floor = PrimeSet::floor_for_weight(weight);

    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    let mut tested = 0usize;
    for &p in ps.primes() {
        if p < floor {
            skipped.push(SkippedPrime {
                p,
                reason: SkipReason::Floor,
            });
            continue;
        }
        if denominator_clashes(&diff, p) {
            skipped.push(SkippedPrime {
                p,
                reason: SkipReason::Denominator,
            });
            continue;
        }
        let residual = eval_combo_mod_p(&diff, p)?;
        tested += 1;
        if residual != 0 {
            failures.push(PrimeFailure { p, residual });
        }
    }
    if tested == 0 {
        return Err(FiniteError::NoAdmittedPrimes { weight });
    }
    let status = if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        status,
        detail: ReportDetail::Finite {
            weight,
            primes_tested: tested,
            skipped,
            failures,
        },
    })
}
