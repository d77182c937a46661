use super::{build_Ct, CrankError, CrankProductSpec};
use crate::cyclotomic::CycElem;
use crate::qseries::{eta_product, EtaQuotientSpec};

/// `C^{(t)} ≡ η-quotient · ∏(1 - q^{3tk})^j  (mod Φ_3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub t: u64,
    /// The reduced eta-quotient over the divisors of 3t, with `r_{3t} = 0`.
    pub spec: EtaQuotientSpec,
    pub j: u32,
    pub verified_to: usize,
}

impl ReductionResult {
    /// The eta-quotient including the `(1 - q^{3tk})^j` factor.
    pub fn full_spec(&self) -> EtaQuotientSpec {
        let m = 3 * self.t;
        EtaQuotientSpec::from_pairs(m, &[(1, 2), (3, -1), (self.t, self.spec.exponent(self.t)), (m, self.j as i64)])
            .expect("divisors of 3t")
    }
}

/// Reads the reduction off the product shape and checks it coefficientwise
/// up to `verify_to`.
///
/// Modulo Φ_3, a pair `(1-ζ^{±k}x)` is `(1-x^3)/(1-x)` when `3 ∤ k` and
/// `(1-x)^2` otherwise; the denominator pair at `k = 1` contributes
/// `(1-q^n)/(1-q^{3n})`.
pub fn reduce_mod_phi3(t: u64, verify_to: usize) -> Result<ReductionResult, CrankError> {
    let shape = CrankProductSpec::for_t(t)?;
    let twisted = shape.twists.iter().filter(|k| *k % 3 != 0).count() as i64;
    let untwisted = shape.twists.len() as i64 - twisted;
    let r_t = shape.tcore_power as i64 - twisted + 2 * untwisted;
    let m = 3 * t;
    let spec = EtaQuotientSpec::from_pairs(m, &[(1, 2), (3, -1), (t, r_t)])?;
    let result = ReductionResult { t, spec, j: twisted as u32, verified_to: verify_to };

    let proto = CycElem::zero(3)?;
    let direct = build_Ct(t, verify_to)?;
    let reduced = eta_product(&result.full_spec(), verify_to)?.promote(&proto);
    if let Some(index) = direct.coeffs().iter().zip(reduced.coeffs()).position(|(a, b)| a != b) {
        return Err(CrankError::ReductionMismatch { t, index });
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_reductions() {
        let r7 = reduce_mod_phi3(7, 60).unwrap();
        assert_eq!(r7.spec.values(), vec![2, -1, 1, 0]);
        assert_eq!(r7.j, 2);
        let r11 = reduce_mod_phi3(11, 60).unwrap();
        assert_eq!(r11.spec.values(), vec![2, -1, -1, 0]);
        assert_eq!(r11.j, 4);
        let r5 = reduce_mod_phi3(5, 60).unwrap();
        assert_eq!(r5.spec.values(), vec![2, -1, -1, 0]);
        assert_eq!(r5.j, 2);
        assert_eq!(r5.full_spec().values(), vec![2, -1, -1, 2]);
    }
}
