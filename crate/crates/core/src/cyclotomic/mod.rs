//! Exact scalar arithmetic: Laurent polynomials in ζ, the quotient rings
//! Z[ζ]/Φ_ℓ(ζ) for prime ℓ, and exact rationals.

mod cyc;
mod laurent;

pub use cyc::{cyc_add, cyc_is_zero, cyc_mul, cyc_project, CycElem};
pub use laurent::LaurentPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact reduced rational with positive denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("cyclotomic order {0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
}

pub fn rational(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den`, always with an explicit denominator.
pub fn format_rational(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Greatest integer not exceeding `q`.
pub fn floor_rational(q: &ExactRational) -> BigInt {
    q.floor().to_integer()
}
