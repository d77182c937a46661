//! Machine checks for crank generating functions of t-core partitions.
//!
//! The crate is layered bottom-up:
//!
//! - [`cyclotomic`]: Laurent polynomials in ζ and the rings Z[ζ]/Φ_ℓ(ζ),
//!   where divisibility by Φ_ℓ becomes a zero test.
//! - [`qseries`]: truncated q-series generic over the coefficient ring,
//!   eta-quotients and ζ-twisted products.
//! - [`partition`]: brute-force enumeration, cranks, hooks and t-cores.
//! - [`modular_cert`]: orbit, Γ₀(N) data and the ν bound that turn finitely
//!   many zero coefficients into a vanishing proof.
//! - [`crank_gf`]: the crank products, their mod-Φ_3 reduction and
//!   end-to-end verification.

pub mod arith;
pub mod crank_gf;
pub mod cyclotomic;
pub mod modular_cert;
pub mod partition;
pub mod qseries;
pub mod ring;

pub use cyclotomic::{CycElem, ExactRational, LaurentPoly};
pub use qseries::{EtaQuotientSpec, QSeries};
pub use ring::{Coeff, ZetaRing};

/// Integer-coefficient series.
pub type IntSeries = QSeries<num_bigint::BigInt>;
/// Rational-coefficient series.
pub type RatSeries = QSeries<num_rational::BigRational>;
/// Series over Z[ζ]/Φ_ℓ.
pub type CycSeries = QSeries<CycElem>;
/// Series with ζ kept as a formal Laurent variable.
pub type LaurentSeries = QSeries<LaurentPoly>;
