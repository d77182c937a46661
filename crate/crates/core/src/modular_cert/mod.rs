//! Vanishing certificates for eta-quotient progressions: membership
//! conditions, the square-class orbit, Γ₀(N) coset data, the cusp lower
//! bounds and the coefficient bound ν.

mod bounds;
mod certificate;
mod gamma0;
mod tuple;

pub use bounds::{nu_bound, p_lower, p_star, AVector};
pub use certificate::{
    certify, first_nonvanishing, progression_values, required_precision, Certificate, CheckedCoeff, PValues,
    Verdict,
};
pub use gamma0::{coset_reps, cusp_reps, cusps_equivalent, index_gamma0, wang_applies, wang_reps, CosetRep};
pub use tuple::{delta_star_check, kappa, odot, orbit, pi_decomp, squares_set, support, DeltaStar, RaduTuple};

use thiserror::Error;

use crate::qseries::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("invalid tuple {0}: need alpha, N >= 1 and 0 <= beta < alpha")]
    InvalidTuple(String),
    #[error("{0} is not congruent to 1 mod 24, so it is not a square class")]
    NotSquareClass(u64),
    #[error("matrix {0:?} does not have determinant 1")]
    NotUnimodular([i64; 4]),
    #[error("representative {0:?} must be normalized to c >= 1")]
    UnnormalizedRep([i64; 4]),
    #[error("orbit is empty")]
    EmptyOrbit,
    #[error("a-vector is indexed by divisors of {got}, expected N = {expected}")]
    AVectorLevel { expected: u64, got: u64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
