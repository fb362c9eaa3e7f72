//! Exact symbolic engine for multiple zeta value identities.
//!
//! The crate generates identity families among multiple zeta values and
//! their finite (mod-p) counterparts as exact rational combinations of
//! zeta symbols, and verifies them through two independent numeric
//! backends:
//!
//! * [`eval_real`] — truncated real nested sums with rigorous tail bounds;
//! * [`eval_finite`] — truncated sums modulo primes over configurable sweeps.
//!
//! Each main-family identity is also produced a second time from the
//! two-letter word algebra ([`word`], [`poly`], [`maps`]), giving an
//! independent algebraic cross-check of the index-level generators in
//! [`identities`].
//!
//! All values are immutable and all operations are pure, so everything
//! here can be shared and called concurrently without coordination.

pub mod eval_finite;
pub mod eval_real;
pub mod identities;
pub mod index;
pub mod maps;
pub mod poly;
pub mod report;
pub mod stuffle;
pub mod word;
pub mod zeta;

pub use eval_finite::{
    eval_combo_mod_p, eval_fmzv, eval_fmzv_mod_p, verify_finite, FiniteError, PrimeSet,
};
pub use eval_real::{eval_combo, eval_mzv, verify_real, EvalError, RealEval, DEFAULT_TRUNC};
pub use identities::{
    derivation_finite_instance, derivation_instance, gen_derivation, gen_derivation_finite,
    gen_finite, gen_finite_algebraic, gen_height_one, gen_main, gen_main_algebraic, gen_ohno,
    gen_ohno_finite, sym_mzv_star, IdentityError, IdentityInstance, Provenance,
};
pub use index::{Index, IndexError, IndexStats};
pub use report::{Status, VerificationReport};
pub use word::{Letter, Word};
pub use zeta::{to_zeta_combo, SymbolKind, ZetaCombo};
