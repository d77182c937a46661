//! Coefficient rings for truncated q-series.
//!
//! Series code is written once against [`Coeff`]. The cyclotomic quotient
//! ring carries its order at runtime, so there is no context-free `zero()`;
//! constructors take a prototype element and build zeros and ones "like" it.

use std::fmt::Debug;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact commutative ring usable as a series coefficient.
pub trait Coeff:
    Clone + PartialEq + Debug + Send + Sync + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Image of an integer in the same ring as `self`.
    fn from_integer_like(&self, n: &BigInt) -> Self;
    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
    /// Whether `self` and `other` live in the same ring (same cyclotomic order).
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
    /// Short human-readable ring name used in error messages.
    fn ring_name(&self) -> String;
}

/// A coefficient ring with a distinguished element ζ.
///
/// Integers model the specialisation ζ = 1.
pub trait ZetaRing: Coeff {
    fn zeta_pow(&self, k: i64) -> Self;
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_integer_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
    fn ring_name(&self) -> String {
        "Z".into()
    }
}

impl ZetaRing for BigInt {
    fn zeta_pow(&self, _k: i64) -> Self {
        BigInt::one()
    }
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_integer_like(&self, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn ring_name(&self) -> String {
        "Q".into()
    }
}
