use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{QSeries, SeriesError};
use crate::arith::divisors;
use crate::cyclotomic::CycElem;
use crate::ring::ZetaRing;

/// Exponent vector `r ∈ R(M)`: one integer per divisor of `M`, defining
/// `∏_{δ|M} ∏_{n≥1} (1 - q^{δn})^{r_δ}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EtaQuotientSpec {
    modulus: u64,
    // (δ, r_δ) for every divisor δ of `modulus`, ascending.
    exponents: Vec<(u64, i64)>,
}

impl EtaQuotientSpec {
    /// Exponents listed in ascending divisor order, as in `(2,-1,1,0)`.
    pub fn new(modulus: u64, exponents: &[i64]) -> Result<Self, SeriesError> {
        if modulus == 0 {
            return Err(SeriesError::BadModulus(modulus));
        }
        let divs = divisors(modulus);
        if divs.len() != exponents.len() {
            return Err(SeriesError::WrongArity {
                modulus,
                expected: divs.len(),
                got: exponents.len(),
            });
        }
        Ok(Self { modulus, exponents: divs.into_iter().zip(exponents.iter().copied()).collect() })
    }

    /// Builds a spec from `(δ, r_δ)` pairs; unlisted divisors get exponent 0.
    pub fn from_pairs(modulus: u64, pairs: &[(u64, i64)]) -> Result<Self, SeriesError> {
        let mut spec = Self::new(modulus, &vec![0; divisors(modulus).len()])?;
        for &(d, r) in pairs {
            let slot = spec
                .exponents
                .iter_mut()
                .find(|(delta, _)| *delta == d)
                .ok_or(SeriesError::NotADivisor { divisor: d, modulus })?;
            slot.1 += r;
        }
        Ok(spec)
    }

    pub fn zeros(modulus: u64) -> Result<Self, SeriesError> {
        Self::from_pairs(modulus, &[])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self, delta: u64) -> i64 {
        self.exponents.iter().find(|(d, _)| *d == delta).map_or(0, |(_, r)| *r)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().copied()
    }

    pub fn values(&self) -> Vec<i64> {
        self.exponents.iter().map(|(_, r)| *r).collect()
    }

    /// Σ r_δ.
    pub fn exponent_sum(&self) -> i64 {
        self.exponents.iter().map(|(_, r)| r).sum()
    }

    /// Σ δ r_δ.
    pub fn weighted_sum(&self) -> i64 {
        self.exponents.iter().map(|(d, r)| *d as i64 * r).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|(_, r)| *r == 0)
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Truncated integer expansion of the eta-quotient.
///
/// Each factor `(1 - q^{δn})^{±1}` is applied in place; factors with
/// `δn ≥ T` do not affect the truncation and are skipped.
pub fn eta_product(spec: &EtaQuotientSpec, precision: usize) -> Result<QSeries<BigInt>, SeriesError> {
    let mut out = QSeries::one(&BigInt::one(), precision)?;
    for (delta, r) in spec.iter() {
        let delta = delta as usize;
        for _ in 0..r.unsigned_abs() {
            for d in (delta..precision).step_by(delta) {
                if r > 0 {
                    out.mul_binomial(None, d);
                } else {
                    out.div_binomial(None, d);
                }
            }
        }
    }
    Ok(out)
}

/// `∏_{n≥1} (1 - ζ^k q^{δn})(1 - ζ^{-k} q^{δn})` over the ring of `proto`.
pub fn twisted_pair_product_in<R: ZetaRing>(
    proto: &R,
    k: i64,
    stride: usize,
    precision: usize,
) -> Result<QSeries<R>, SeriesError> {
    if stride == 0 {
        return Err(SeriesError::BadStride);
    }
    let mut out = QSeries::one(proto, precision)?;
    let mut u = proto.zeta_pow(k);
    u += &proto.zeta_pow(-k);
    for d in (stride..precision).step_by(stride) {
        out.mul_pair(&u, d);
    }
    Ok(out)
}

/// [`twisted_pair_product_in`] over Z[ζ]/Φ_ℓ.
pub fn twisted_pair_product(
    k: i64,
    stride: usize,
    order: u32,
    precision: usize,
) -> Result<QSeries<CycElem>, SeriesError> {
    let proto = CycElem::zero(order)?;
    twisted_pair_product_in(&proto, k, stride, precision)
}
