use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use super::ModularError;
use crate::arith::{divisors, prime_factors};
use crate::qseries::EtaQuotientSpec;

/// The data `(α, M, N, r, β)` of a vanishing claim
/// `a(αn + β') = 0` for the eta-quotient `r ∈ R(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RaduTuple {
    alpha: u64,
    level: u64,
    r: EtaQuotientSpec,
    beta: u64,
}

impl RaduTuple {
    /// `M` is taken from `r`. Range conditions are left to
    /// [`delta_star_check`] so that bad tuples can still be reported.
    pub fn new(alpha: u64, level: u64, r: EtaQuotientSpec, beta: u64) -> Self {
        Self { alpha, level, r, beta }
    }

    /// Convenience constructor with `r` in ascending divisor order.
    pub fn from_parts(alpha: u64, m: u64, level: u64, r: &[i64], beta: u64) -> Result<Self, ModularError> {
        Ok(Self::new(alpha, level, EtaQuotientSpec::new(m, r)?, beta))
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }
    pub fn m(&self) -> u64 {
        self.r.modulus()
    }
    /// The level `N`.
    pub fn level(&self) -> u64 {
        self.level
    }
    pub fn r(&self) -> &EtaQuotientSpec {
        &self.r
    }
    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn with_beta(&self, beta: u64) -> Self {
        Self { beta, ..self.clone() }
    }

    pub fn validate(&self) -> Result<(), ModularError> {
        if self.alpha == 0 || self.level == 0 || self.beta >= self.alpha {
            return Err(ModularError::InvalidTuple(self.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for RaduTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.alpha, self.m(), self.level, self.r, self.beta)
    }
}

/// κ = gcd(α² − 1, 24).
pub fn kappa(alpha: u64) -> u64 {
    let a = alpha as u128;
    (a * a - 1).gcd(&24) as u64
}

/// `(s, j)` with `∏_{δ|M} δ^{|r_δ|} = 2^s · j`, `j` odd. `s` may be zero.
pub fn pi_decomp(spec: &EtaQuotientSpec) -> (u64, BigInt) {
    let mut product = BigInt::one();
    for (delta, r) in spec.iter() {
        product *= Pow::pow(BigInt::from(delta), r.unsigned_abs());
    }
    let s = product.trailing_zeros().unwrap_or(0);
    (s, product >> s)
}

/// Squares of units modulo `modulus`.
pub fn squares_set(modulus: u64) -> BTreeSet<u64> {
    (0..modulus)
        .filter(|x| x.gcd(&modulus) == 1)
        .map(|x| ((x as u128 * x as u128) % modulus as u128) as u64)
        .collect()
}

/// `[s] ⊙ β = βs + (s − 1)/24 · Σ δ r_δ  (mod α)`.
///
/// `s` is reduced to its least non-negative residue mod 24α first; every
/// unit square mod 24α is 1 mod 24, anything else is rejected.
pub fn odot(s: u64, beta: u64, tuple: &RaduTuple) -> Result<u64, ModularError> {
    let alpha = tuple.alpha as i128;
    if alpha == 0 {
        return Err(ModularError::InvalidTuple(tuple.to_string()));
    }
    let s = (s as i128).rem_euclid(24 * alpha);
    if (s - 1).rem_euclid(24) != 0 {
        return Err(ModularError::NotSquareClass(s as u64));
    }
    let shift = (s - 1) / 24 * tuple.r.weighted_sum() as i128;
    Ok((beta as i128 * s + shift).rem_euclid(alpha) as u64)
}

/// `P_{α,r}(β)`: the image of β under every square class mod 24α.
pub fn orbit(tuple: &RaduTuple) -> Result<BTreeSet<u64>, ModularError> {
    tuple.validate()?;
    squares_set(24 * tuple.alpha)
        .into_iter()
        .map(|s| odot(s, tuple.beta, tuple))
        .collect()
}

/// Outcome of the seven membership conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaStar {
    pub failed: Vec<u8>,
}

impl DeltaStar {
    pub fn passes(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Evaluates conditions 1–7. Condition 6 uses `24α` in the numerator;
/// condition 7 is only evaluated for even α.
pub fn delta_star_check(tuple: &RaduTuple) -> DeltaStar {
    let mut failed = Vec::new();
    let (alpha, m, level, beta) = (tuple.alpha as i128, tuple.m() as i128, tuple.level as i128, tuple.beta as i128);
    if alpha < 1 || m < 1 || level < 1 || beta >= alpha || tuple.r.modulus() != tuple.m() {
        // Nothing else is well defined.
        return DeltaStar { failed: vec![1] };
    }
    let k = kappa(tuple.alpha) as i128;
    let nonzero: Vec<(i128, i128)> =
        tuple.r.iter().filter(|(_, r)| *r != 0).map(|(d, r)| (d as i128, r as i128)).collect();

    if prime_factors(tuple.alpha).iter().any(|&p| level % p as i128 != 0) {
        failed.push(2);
    }
    let cond3 = nonzero.iter().all(|(d, _)| (alpha * level) % d == 0);
    if !cond3 {
        failed.push(3);
    }
    let cond4 = cond3 && {
        let sum: i128 = nonzero.iter().map(|(d, r)| r * (alpha * level / d)).sum();
        (k * level * sum) % 24 == 0
    };
    if !cond4 {
        failed.push(4);
    }
    let r_sum: i128 = nonzero.iter().map(|(_, r)| r).sum();
    if (k * level * r_sum) % 8 != 0 {
        failed.push(5);
    }
    let dr_sum: i128 = nonzero.iter().map(|(d, r)| d * r).sum();
    let g = (k * (-24 * beta - dr_sum)).gcd(&(24 * alpha));
    if level % (24 * alpha / g) != 0 {
        failed.push(6);
    }
    if alpha % 2 == 0 {
        let (s, j) = pi_decomp(&tuple.r);
        let s = s as i128;
        let first = (k * level) % 4 == 0 && (s * level) % 8 == 0;
        let second = s % 2 == 0 && (BigInt::from(level) * (BigInt::one() - j)) % 8u32 == BigInt::from(0);
        if !(first || second) {
            failed.push(7);
        }
    }
    DeltaStar { failed }
}

/// Divisors of `M` carrying a non-zero exponent.
pub fn support(spec: &EtaQuotientSpec) -> Vec<u64> {
    divisors(spec.modulus()).into_iter().filter(|&d| spec.exponent(d) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(alpha: u64, m: u64, n: u64, r: &[i64], beta: u64) -> RaduTuple {
        RaduTuple::from_parts(alpha, m, n, r, beta).unwrap()
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(1), 24);
        assert_eq!(kappa(15), 8);
        assert_eq!(kappa(21), 8);
        assert_eq!(kappa(2), 3);
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_decomp(&EtaQuotientSpec::new(1, &[5]).unwrap()), (0, BigInt::from(1)));
        assert_eq!(pi_decomp(&EtaQuotientSpec::new(21, &[2, -1, 1, 0]).unwrap()), (0, BigInt::from(21)));
        assert_eq!(pi_decomp(&EtaQuotientSpec::new(2, &[0, 3]).unwrap()), (3, BigInt::from(1)));
    }

    #[test]
    fn squares() {
        assert_eq!(squares_set(24), BTreeSet::from([1]));
        assert_eq!(squares_set(360), BTreeSet::from([1, 49, 121, 169, 241, 289]));
        assert!(squares_set(504).iter().all(|s| s.gcd(&504) == 1 && s % 24 == 1));
    }

    #[test]
    fn odot_examples() {
        let t7 = tuple(21, 21, 42, &[2, -1, 1, 0], 8);
        assert_eq!(odot(1, 8, &t7).unwrap(), 8);
        assert_eq!(odot(25, 8, &t7).unwrap(), 17);
        let t5 = tuple(15, 15, 45, &[2, -1, -1, 0], 6);
        assert_eq!(odot(49, 6, &t5).unwrap(), 12);
        assert_eq!(odot(7, 6, &t5), Err(ModularError::NotSquareClass(7)));
        // 409 ≡ 49 (mod 360)
        assert_eq!(odot(409, 6, &t5).unwrap(), 12);
    }

    #[test]
    fn orbit_examples() {
        let t7 = tuple(21, 21, 42, &[2, -1, 1, 0], 8);
        assert_eq!(orbit(&t7).unwrap(), BTreeSet::from([8, 11, 17]));
        let t5 = tuple(15, 15, 45, &[2, -1, -1, 0], 6);
        assert_eq!(orbit(&t5).unwrap(), BTreeSet::from([6, 12]));
        assert_eq!(orbit(&t5.with_beta(10)).unwrap(), BTreeSet::from([10, 13]));
    }

    #[test]
    fn delta_star_examples() {
        assert!(delta_star_check(&tuple(21, 21, 42, &[2, -1, 1, 0], 8)).passes());
        assert!(delta_star_check(&tuple(15, 15, 45, &[2, -1, -1, 0], 6)).passes());
        let bad = delta_star_check(&tuple(15, 15, 44, &[2, -1, -1, 0], 6));
        assert!(bad.failed.contains(&2), "{bad:?}");
        assert_eq!(delta_star_check(&tuple(15, 15, 45, &[2, -1, -1, 0], 15)).failed, vec![1]);
    }

    #[test]
    fn condition_six_uses_scaled_numerator() {
        // gcd(κ(-24β - Σδr), 24α) = 72 here; 24/72 is not an integer but 504/72 = 7 divides 42.
        let t7 = tuple(21, 21, 42, &[2, -1, 1, 0], 8);
        assert!(!delta_star_check(&t7).failed.contains(&6));
        assert!(delta_star_check(&RaduTuple::new(21, 6, t7.r().clone(), 8)).failed.contains(&6));
    }
}
