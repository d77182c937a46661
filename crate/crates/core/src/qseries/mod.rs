//! Truncated formal power series in q over an exact coefficient ring, and
//! builders for eta-quotients and ζ-twisted products.

mod eta;
mod series;

pub use eta::{eta_product, twisted_pair_product, twisted_pair_product_in, EtaQuotientSpec};
pub use series::{series_inv, series_mul, slice_progression, QSeries};

use thiserror::Error;

use crate::cyclotomic::CycError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series precision must be at least 1")]
    ZeroPrecision,
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("constant term {0} is not a unit")]
    NonUnitHead(String),
    #[error("invalid progression: alpha={alpha}, beta={beta} (need 0 <= beta < alpha)")]
    BadProgression { alpha: usize, beta: usize },
    #[error("eta-quotient modulus must be positive, got {0}")]
    BadModulus(u64),
    #[error("exponent vector for M={modulus} needs {expected} entries (one per divisor), got {got}")]
    WrongArity { modulus: u64, expected: usize, got: usize },
    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },
    #[error("product stride must be positive")]
    BadStride,
    #[error(transparent)]
    Cyc(#[from] CycError),
}
