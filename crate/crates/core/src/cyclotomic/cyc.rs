use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CycError, LaurentPoly};
use crate::arith::is_prime;
use crate::ring::{Coeff, ZetaRing};

/// Element of Z[ζ]/Φ_ℓ(ζ) for a prime ℓ, in the basis 1, ζ, …, ζ^{ℓ-2}.
///
/// An element is zero exactly when its preimage is divisible by Φ_ℓ.
/// Operators panic on mixed orders; use [`cyc_mul`] and friends for a
/// checked variant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CycElem {
    fn check_order(order: u32) -> Result<(), CycError> {
        if is_prime(order as u64) {
            Ok(())
        } else {
            Err(CycError::NotPrime(order as u64))
        }
    }

    pub fn zero(order: u32) -> Result<Self, CycError> {
        Self::check_order(order)?;
        Ok(Self { order, coeffs: vec![BigInt::zero(); order as usize - 1] })
    }

    pub fn from_int(order: u32, n: impl Into<BigInt>) -> Result<Self, CycError> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = n.into();
        Ok(z)
    }

    /// ζ^k, reduced.
    pub fn zeta_power(order: u32, k: i64) -> Result<Self, CycError> {
        Self::project(&LaurentPoly::monomial(k, 1), order)
    }

    /// Image of a Laurent polynomial under ζ^k ↦ ζ^{k mod ℓ}, then
    /// ζ^{ℓ-1} ↦ -(1 + ζ + … + ζ^{ℓ-2}).
    pub fn project(p: &LaurentPoly, order: u32) -> Result<Self, CycError> {
        Self::check_order(order)?;
        let l = order as i64;
        let mut buckets = vec![BigInt::zero(); order as usize];
        for (k, c) in p.terms() {
            buckets[k.rem_euclid(l) as usize] += c;
        }
        Ok(Self::reduce(order, buckets))
    }

    /// Folds a length-ℓ vector (exponents mod ℓ) into the reduced basis.
    fn reduce(order: u32, mut buckets: Vec<BigInt>) -> Self {
        let top = buckets.pop().expect("order >= 2");
        if !top.is_zero() {
            for c in &mut buckets {
                *c -= &top;
            }
        }
        Self { order, coeffs: buckets }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of 1, ζ, …, ζ^{ℓ-2}.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The integer this element equals, if it lies in Z.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch: {} vs {}",
            self.order, other.order
        );
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let l = self.order as usize;
        let mut buckets = vec![BigInt::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    buckets[(i + j) % l] += a * b;
                }
            }
        }
        Self::reduce(self.order, buckets)
    }

    /// Inverse in Z[ζ]/Φ_ℓ when it exists, found by solving the
    /// multiplication-by-self linear system over Q and checking integrality.
    fn inverse(&self) -> Option<Self> {
        let n = self.coeffs.len();
        let mut basis = Self { order: self.order, coeffs: vec![BigInt::zero(); n] };
        // Augmented matrix: columns are self·ζ^i, right-hand side is 1.
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::with_capacity(n + 1); n];
        for i in 0..n {
            basis.coeffs.iter_mut().for_each(|c| c.set_zero());
            basis.coeffs[i] = BigInt::one();
            let col = self.mul_unchecked(&basis);
            for (r, c) in rows.iter_mut().zip(col.coeffs) {
                r.push(BigRational::from_integer(c));
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for v in rows[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for k in col..=n {
                        let d = &f * &rows[col][k];
                        rows[r][k] -= d;
                    }
                }
            }
        }
        let mut coeffs = Vec::with_capacity(n);
        for row in rows {
            let v = &row[n];
            if !v.is_integer() {
                return None;
            }
            coeffs.push(v.to_integer());
        }
        Some(Self { order: self.order, coeffs })
    }
}

/// Projection of a Laurent polynomial into Z[ζ]/Φ_ℓ.
pub fn cyc_project(p: &LaurentPoly, order: u32) -> Result<CycElem, CycError> {
    CycElem::project(p, order)
}

pub fn cyc_mul(a: &CycElem, b: &CycElem) -> Result<CycElem, CycError> {
    if a.order != b.order {
        return Err(CycError::OrderMismatch(a.order, b.order));
    }
    Ok(a.mul_unchecked(b))
}

pub fn cyc_add(a: &CycElem, b: &CycElem) -> Result<CycElem, CycError> {
    if a.order != b.order {
        return Err(CycError::OrderMismatch(a.order, b.order));
    }
    Ok(a + b)
}

pub fn cyc_is_zero(a: &CycElem) -> bool {
    a.is_zero()
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem<{}>({})", self.order, self)
    }
}

/// Comma-separated coefficients, lowest degree first.
impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<'a> AddAssign<&'a CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &'a CycElem) {
        self.assert_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<'a> SubAssign<&'a CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &'a CycElem) {
        self.assert_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(mut self) -> CycElem {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, rhs: &'a CycElem) -> CycElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &'a CycElem) -> CycElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &'a CycElem) -> CycElem {
        self.assert_same(rhs);
        self.mul_unchecked(rhs)
    }
}

impl Coeff for CycElem {
    fn zero_like(&self) -> Self {
        Self { order: self.order, coeffs: vec![BigInt::zero(); self.coeffs.len()] }
    }
    fn one_like(&self) -> Self {
        let mut one = self.zero_like();
        one.coeffs[0] = BigInt::one();
        one
    }
    fn is_zero_elem(&self) -> bool {
        CycElem::is_zero(self)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_integer_like(&self, n: &BigInt) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = n.clone();
        out
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.order == other.order
    }
    fn ring_name(&self) -> String {
        format!("Z[z]/Phi_{}", self.order)
    }
}

impl ZetaRing for CycElem {
    fn zeta_pow(&self, k: i64) -> Self {
        CycElem::zeta_power(self.order, k).expect("order already validated")
    }
}
