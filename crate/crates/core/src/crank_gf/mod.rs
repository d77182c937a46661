//! Crank generating functions: the classical C(z, τ), the t-core
//! generating function, the twisted products C^{(t)}, their reduction
//! modulo Φ_3 and end-to-end verification of the explained classes.

mod products;
mod reduce;
mod verify;

pub use products::{
    build_Ct, build_Ct_at_one, build_crank_gf, build_crank_gf_in, build_crank_gf_laurent, build_tcore_gf,
    CrankProductSpec, SUPPORTED_T,
};
pub use reduce::{reduce_mod_phi3, ReductionResult};
pub use verify::{
    direct_explained, orbit_seeds, scan, verify_theorem, ScanResult, TheoremData, VerificationReport,
    DEFAULT_DIRECT_BOUND,
};

use thiserror::Error;

use crate::cyclotomic::CycError;
use crate::modular_cert::ModularError;
use crate::qseries::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrankError {
    #[error("no crank product is known for t = {0} (supported: 5, 7, 11, 17, 19)")]
    UnsupportedT(u64),
    #[error("t must be at least 2, got {0}")]
    BadT(u64),
    #[error("scan needs alpha >= 1 and modulus >= 2 (alpha={alpha}, modulus={modulus})")]
    BadScan { alpha: u64, modulus: u64 },
    #[error("reduction identity for t = {t} fails at q^{index}")]
    ReductionMismatch { t: u64, index: usize },
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Modular(#[from] ModularError),
}
