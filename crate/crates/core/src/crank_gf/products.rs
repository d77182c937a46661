use num_bigint::BigInt;
use num_traits::One;

use super::CrankError;
use crate::cyclotomic::{CycElem, LaurentPoly};
use crate::qseries::{eta_product, EtaQuotientSpec, QSeries};
use crate::ring::ZetaRing;

/// Shape of a t-core crank product
///
/// `∏ (1-q^n)(1-q^{tn})^P ∏_k (1-ζ^{±k} q^{tn}) / (1-ζ^{±1} q^n)`
/// with `P = tcore_power` and `k` running over `twists`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankProductSpec {
    pub t: u64,
    pub tcore_power: u32,
    pub twists: Vec<i64>,
}

/// The t values with a known crank product.
pub const SUPPORTED_T: [u64; 5] = [5, 7, 11, 17, 19];

impl CrankProductSpec {
    pub fn for_t(t: u64) -> Result<Self, CrankError> {
        let (tcore_power, twists): (u32, &[i64]) = match t {
            5 => (1, &[2, 4]),
            7 => (3, &[2, 4]),
            11 => (3, &[2, 4, 8, 10]),
            17 => (5, &[2, 4, 8, 10, 14, 16]),
            19 => (7, &[2, 4, 8, 10, 14, 16]),
            _ => return Err(CrankError::UnsupportedT(t)),
        };
        Ok(Self { t, tcore_power, twists: twists.to_vec() })
    }

    /// `tcore_power + 2·|twists|`, which must equal `t` for the ζ = 1
    /// specialisation to be the t-core generating function.
    pub fn specialised_power(&self) -> u64 {
        self.tcore_power as u64 + 2 * self.twists.len() as u64
    }

    /// Expands the product over the ring of `proto`.
    pub fn build<R: ZetaRing>(&self, proto: &R, precision: usize) -> Result<QSeries<R>, CrankError> {
        let t = self.t as usize;
        let mut out = QSeries::one(proto, precision)?;
        for n in 1..precision {
            out.mul_binomial(None, n);
        }
        for _ in 0..self.tcore_power {
            for d in (t..precision).step_by(t) {
                out.mul_binomial(None, d);
            }
        }
        for &k in &self.twists {
            let mut u = proto.zeta_pow(k);
            u += &proto.zeta_pow(-k);
            for d in (t..precision).step_by(t) {
                out.mul_pair(&u, d);
            }
        }
        let mut u = proto.zeta_pow(1);
        u += &proto.zeta_pow(-1);
        for n in 1..precision {
            out.div_pair(&u, n);
        }
        Ok(out)
    }
}

/// `∏ (1-q^n) / ((1-ζq^n)(1-ζ^{-1}q^n))` over the ring of `proto`.
pub fn build_crank_gf_in<R: ZetaRing>(proto: &R, precision: usize) -> Result<QSeries<R>, CrankError> {
    let mut out = QSeries::one(proto, precision)?;
    let mut u = proto.zeta_pow(1);
    u += &proto.zeta_pow(-1);
    for n in 1..precision {
        out.mul_binomial(None, n);
        out.div_pair(&u, n);
    }
    Ok(out)
}

/// The crank generating function with coefficients in Z[ζ]/Φ_ℓ.
pub fn build_crank_gf(order: u32, precision: usize) -> Result<QSeries<CycElem>, CrankError> {
    build_crank_gf_in(&CycElem::zero(order)?, precision)
}

/// The crank generating function with Laurent-polynomial coefficients, so
/// `[ζ^m q^n]` is read off directly.
pub fn build_crank_gf_laurent(precision: usize) -> Result<QSeries<LaurentPoly>, CrankError> {
    build_crank_gf_in(&LaurentPoly::zero(), precision)
}

/// `∏ (1-q^{tn})^t / (1-q^n)`, counting t-core partitions.
pub fn build_tcore_gf(t: u64, precision: usize) -> Result<QSeries<BigInt>, CrankError> {
    if t < 2 {
        return Err(CrankError::BadT(t));
    }
    let spec = EtaQuotientSpec::from_pairs(t, &[(1, -1), (t, t as i64)])?;
    Ok(eta_product(&spec, precision)?)
}

/// C^{(t)} with coefficients in Z[ζ]/Φ_3.
#[allow(non_snake_case)]
pub fn build_Ct(t: u64, precision: usize) -> Result<QSeries<CycElem>, CrankError> {
    CrankProductSpec::for_t(t)?.build(&CycElem::zero(3)?, precision)
}

/// C^{(t)} at ζ = 1, built from the same product shape over Z.
#[allow(non_snake_case)]
pub fn build_Ct_at_one(t: u64, precision: usize) -> Result<QSeries<BigInt>, CrankError> {
    CrankProductSpec::for_t(t)?.build(&BigInt::one(), precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Coeff;

    #[test]
    fn specs_specialise_to_t() {
        for t in SUPPORTED_T {
            assert_eq!(CrankProductSpec::for_t(t).unwrap().specialised_power(), t);
        }
        assert_eq!(CrankProductSpec::for_t(13), Err(CrankError::UnsupportedT(13)));
    }

    #[test]
    fn crank_gf_low_terms() {
        let c3 = build_crank_gf(3, 10).unwrap();
        assert_eq!(c3.coeff(0).unwrap(), &CycElem::from_int(3, 1).unwrap());
        assert_eq!(c3.coeff(1).unwrap(), &CycElem::from_int(3, -2).unwrap());
        let c5 = build_crank_gf(5, 10).unwrap();
        assert!(c5.coeff(4).unwrap().is_zero());
        let lp = build_crank_gf_laurent(6).unwrap();
        assert_eq!(lp.coeff(1).unwrap(), &LaurentPoly::from_terms([(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(
            lp.coeff(4).unwrap(),
            &LaurentPoly::from_terms([(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)])
        );
    }

    #[test]
    fn tcore_low_terms() {
        let g = build_tcore_gf(5, 8).unwrap();
        let v: Vec<i64> = g.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(&v[..5], &[1, 1, 2, 3, 5]);
        assert_eq!(v[6], 6);
        assert_eq!(build_tcore_gf(1, 4), Err(CrankError::BadT(1)));
    }

    #[test]
    fn ct_head_and_first_class() {
        let c = build_Ct(5, 20).unwrap();
        assert_eq!(c.coeff(0).unwrap(), &c.coeff(0).unwrap().one_like());
        assert!(c.coeff(6).unwrap().is_zero());
        assert!(build_Ct(13, 5).is_err());
    }
}
