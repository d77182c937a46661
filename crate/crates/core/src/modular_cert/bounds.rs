use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{CosetRep, ModularError, RaduTuple};
use crate::cyclotomic::{floor_rational, ExactRational};
use crate::modular_cert::{index_gamma0, kappa};
use crate::qseries::EtaQuotientSpec;

/// Auxiliary exponent vector `a ∈ R(N)`.
pub type AVector = EtaQuotientSpec;

fn ratio(num: i128, den: i128) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// `min_{λ ∈ {0,…,α−1}} (1/24) Σ_{δ|M} r_δ · gcd²(δ(a + κλc), αc) / (δα)`.
pub fn p_lower(gamma: &CosetRep, tuple: &RaduTuple) -> Result<ExactRational, ModularError> {
    if gamma.c <= 0 {
        return Err(ModularError::UnnormalizedRep(gamma.entries()));
    }
    let alpha = tuple.alpha() as i128;
    let k = kappa(tuple.alpha()) as i128;
    let (a, c) = (gamma.a as i128, gamma.c as i128);
    let terms: Vec<(i128, i128)> =
        tuple.r().iter().filter(|(_, r)| *r != 0).map(|(d, r)| (d as i128, r as i128)).collect();
    // Common denominator 24·α·lcm(δ) keeps the inner loop in integers.
    let lcm = terms.iter().fold(1i128, |acc, (d, _)| acc.lcm(d));
    let best = (0..alpha)
        .map(|lambda| {
            terms
                .iter()
                .map(|(d, r)| {
                    let g = (d * (a + k * lambda * c)).gcd(&(alpha * c));
                    r * g * g * (lcm / d)
                })
                .sum::<i128>()
        })
        .min()
        .unwrap_or(0);
    Ok(ratio(best, 24 * alpha * lcm))
}

/// `(1/24) Σ_{δ|N} a_δ · gcd²(δ, c) / δ`.
pub fn p_star(gamma: &CosetRep, a: &AVector) -> ExactRational {
    let c = gamma.c as i128;
    a.iter()
        .filter(|(_, x)| *x != 0)
        .map(|(d, x)| {
            let d = d as i128;
            let g = d.gcd(&c);
            ratio(x as i128 * g * g, 24 * d)
        })
        .fold(ExactRational::zero(), |acc, v| acc + v)
}

/// The bound ν and ⌊ν⌋.
pub fn nu_bound(
    tuple: &RaduTuple,
    a: &AVector,
    orbit: &BTreeSet<u64>,
) -> Result<(ExactRational, BigInt), ModularError> {
    let beta_min = *orbit.first().ok_or(ModularError::EmptyOrbit)? as i128;
    let alpha = tuple.alpha() as i128;
    let index = index_gamma0(tuple.level()) as i128;
    let r = tuple.r();
    let sum_a = a.exponent_sum() as i128;
    let sum_r = r.exponent_sum() as i128;
    let nu = ratio((sum_a + sum_r) * index - a.weighted_sum() as i128, 24)
        - ratio(r.weighted_sum() as i128, 24 * alpha)
        - ratio(beta_min, alpha);
    let floor = floor_rational(&nu);
    Ok((nu, floor))
}
