//! Verification outcomes, with a shared serialization schema across the
//! two numeric backends.

use serde_json::{json, Value};

use crate::index::Index;
use crate::poly::{coef_string, Coef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Per-term diagnostics from the real backend.
#[derive(Debug, Clone)]
pub struct RealTermDiag {
    pub index: Index,
    pub coef: Coef,
    pub value: f64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// p - 1 does not exceed the identity weight.
    Floor,
    /// p divides a coefficient denominator.
    Denominator,
}

impl SkipReason {
    pub fn tag(self) -> &'static str {
        match self {
            SkipReason::Floor => "floor",
            SkipReason::Denominator => "denominator",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkippedPrime {
    pub p: u64,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFailure {
    pub p: u64,
    pub residual: u64,
}

#[derive(Debug, Clone)]
pub enum ReportDetail {
    Real {
        residual: f64,
        tolerance: f64,
        trunc_n: u64,
        terms: Vec<RealTermDiag>,
    },
    Finite {
        weight: u32,
        primes_tested: usize,
        skipped: Vec<SkippedPrime>,
        failures: Vec<PrimeFailure>,
    },
}

/// Outcome of checking that lhs - rhs vanishes on one backend.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub status: Status,
    pub detail: ReportDetail,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn backend(&self) -> &'static str {
        match self.detail {
            ReportDetail::Real { .. } => "real",
            ReportDetail::Finite { .. } => "finite",
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.detail {
            ReportDetail::Real {
                residual,
                tolerance,
                trunc_n,
                terms,
            } => json!({
                "status": self.status.tag(),
                "backend": "real",
                "residual": residual,
                "tolerance": tolerance,
                "trunc_n": trunc_n,
                "terms": terms.iter().map(|t| json!({
                    "index": t.index.parts(),
                    "coef": coef_string(&t.coef),
                    "value": t.value,
                    "tail_bound": t.tail_bound,
                })).collect::<Vec<_>>(),
            }),
            ReportDetail::Finite {
                weight,
                primes_tested,
                skipped,
                failures,
            } => json!({
                "status": self.status.tag(),
                "backend": "finite",
                "weight": weight,
                "primes_tested": primes_tested,
                "skipped": skipped.iter().map(|s| json!({
                    "p": s.p,
                    "reason": s.reason.tag(),
                })).collect::<Vec<_>>(),
                "failures": failures.iter().map(|f| json!({
                    "p": f.p,
                    "residual": f.residual,
                })).collect::<Vec<_>>(),
            }),
        }
    }
}
