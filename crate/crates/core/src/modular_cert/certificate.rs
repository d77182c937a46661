use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{
    coset_reps, delta_star_check, kappa, nu_bound, orbit, p_lower, p_star, pi_decomp, AVector, CosetRep,
    DeltaStar, ModularError, RaduTuple,
};
use crate::cyclotomic::{format_rational, ExactRational};
use crate::qseries::{eta_product, QSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proven,
    Failed(String),
}

impl Verdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, Verdict::Proven)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Proven => write!(f, "proven"),
            Verdict::Failed(why) => write!(f, "failed: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PValues {
    pub p_lower: ExactRational,
    pub p_star: ExactRational,
}

impl PValues {
    pub fn sum(&self) -> ExactRational {
        &self.p_lower + &self.p_star
    }
}

/// A coefficient `a(αn + β')` inspected by the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedCoeff {
    pub beta: u64,
    pub n: u64,
    pub value: BigInt,
}

/// Everything needed to audit one application of the vanishing lemma.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub tuple: RaduTuple,
    pub a: AVector,
    pub delta_star: DeltaStar,
    pub kappa: u64,
    pub pi: (u64, BigInt),
    pub orbit: BTreeSet<u64>,
    pub beta_min: u64,
    pub reps: Vec<CosetRep>,
    pub p_values: Vec<PValues>,
    pub nu: ExactRational,
    pub nu_floor: BigInt,
    pub checked: Vec<CheckedCoeff>,
    pub verdict: Verdict,
}

/// Series precision needed to read `a(αn + β')` for `n ≤ n_max`.
pub fn required_precision(alpha: u64, n_max: u64, orbit: &BTreeSet<u64>) -> usize {
    let top = orbit.last().copied().unwrap_or(0);
    (alpha * (n_max + 1) + top + 1) as usize
}

/// Values `a(αn + β')` for every β' in the orbit and `0 ≤ n ≤ n_max`.
pub fn progression_values(
    series: &QSeries<BigInt>,
    alpha: u64,
    orbit: &BTreeSet<u64>,
    n_max: u64,
) -> Vec<CheckedCoeff> {
    orbit
        .iter()
        .flat_map(|&beta| {
            (0..=n_max).filter_map(move |n| {
                series
                    .coeff((alpha * n + beta) as usize)
                    .map(|v| CheckedCoeff { beta, n, value: v.clone() })
            })
        })
        .collect()
}

/// First non-zero `a(αn + β')` with `n ≤ n_max` over the orbit, if any.
pub fn first_nonvanishing(tuple: &RaduTuple, n_max: u64) -> Result<Option<CheckedCoeff>, ModularError> {
    let orbit = orbit(tuple)?;
    let series = eta_product(tuple.r(), required_precision(tuple.alpha(), n_max, &orbit))?;
    Ok(progression_values(&series, tuple.alpha(), &orbit, n_max).into_iter().find(|c| !c.value.is_zero()))
}

/// Runs the full check for `tuple` with auxiliary vector `a`.
///
/// Mathematical failures land in [`Certificate::verdict`]; only malformed
/// input (β out of range, `a` not indexed by the divisors of N) is an error.
pub fn certify(tuple: &RaduTuple, a: &AVector) -> Result<Certificate, ModularError> {
    tuple.validate()?;
    if a.modulus() != tuple.level() {
        return Err(ModularError::AVectorLevel { expected: tuple.level(), got: a.modulus() });
    }
    let delta_star = delta_star_check(tuple);
    let orbit = orbit(tuple)?;
    let beta_min = *orbit.first().ok_or(ModularError::EmptyOrbit)?;
    let reps: Vec<CosetRep> = coset_reps(tuple.level()).iter().map(|g| g.normalized(tuple.level())).collect();
    let p_values = reps
        .par_iter()
        .map(|g| Ok(PValues { p_lower: p_lower(g, tuple)?, p_star: p_star(g, a) }))
        .collect::<Result<Vec<_>, ModularError>>()?;
    let (nu, nu_floor) = nu_bound(tuple, a, &orbit)?;

    let checked = match nu_floor.to_u64() {
        Some(n_max) => {
            let series = eta_product(tuple.r(), required_precision(tuple.alpha(), n_max, &orbit))?;
            progression_values(&series, tuple.alpha(), &orbit, n_max)
        }
        // ⌊ν⌋ < 0: the hypothesis is vacuous.
        None => Vec::new(),
    };

    let negative = p_values.iter().enumerate().find(|(_, p)| p.sum() < ExactRational::zero());
    let nonzero = checked.iter().find(|c| !c.value.is_zero());
    let mut reasons = Vec::new();
    if !delta_star.passes() {
        reasons.push(format!("tuple {tuple} violates conditions {:?}", delta_star.failed));
    }
    if let Some((i, p)) = negative {
        reasons.push(format!(
            "p_lower + p_star = {} < 0 at representative {} {}",
            format_rational(&p.sum()),
            i,
            reps[i]
        ));
    }
    if let Some(c) = nonzero {
        reasons.push(format!(
            "a({}*{}+{}) = a({}) = {} is non-zero",
            tuple.alpha(),
            c.n,
            c.beta,
            tuple.alpha() * c.n + c.beta,
            c.value
        ));
    }
    let verdict = if reasons.is_empty() { Verdict::Proven } else { Verdict::Failed(reasons.join("; ")) };

    Ok(Certificate {
        tuple: tuple.clone(),
        a: a.clone(),
        delta_star,
        kappa: kappa(tuple.alpha()),
        pi: pi_decomp(tuple.r()),
        orbit,
        beta_min,
        reps,
        p_values,
        nu,
        nu_floor,
        checked,
        verdict,
    })
}

#[derive(Serialize)]
struct TupleJson {
    alpha: String,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "N")]
    n: String,
    r: Vec<String>,
    beta: String,
}

#[derive(Serialize)]
struct PValueJson {
    rep_index: String,
    p_lower: String,
    p_star: String,
}

#[derive(Serialize)]
struct CheckedJson {
    beta: String,
    n: String,
    value: String,
}

#[derive(Serialize)]
struct CertificateJson {
    tuple: TupleJson,
    a: Vec<String>,
    kappa: String,
    pi: [String; 2],
    orbit: Vec<String>,
    beta_min: String,
    reps: Vec<[String; 4]>,
    p_values: Vec<PValueJson>,
    nu: String,
    nu_floor: String,
    checked: Vec<CheckedJson>,
    verdict: String,
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

impl Certificate {
    /// JSON form; every number is a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let t = &self.tuple;
        let wire = CertificateJson {
            tuple: TupleJson {
                alpha: t.alpha().to_string(),
                m: t.m().to_string(),
                n: t.level().to_string(),
                r: strs(t.r().values()),
                beta: t.beta().to_string(),
            },
            a: strs(self.a.values()),
            kappa: self.kappa.to_string(),
            pi: [self.pi.0.to_string(), self.pi.1.to_string()],
            orbit: strs(&self.orbit),
            beta_min: self.beta_min.to_string(),
            reps: self.reps.iter().map(|g| g.entries().map(|x| x.to_string())).collect(),
            p_values: self
                .p_values
                .iter()
                .enumerate()
                .map(|(i, p)| PValueJson {
                    rep_index: i.to_string(),
                    p_lower: format_rational(&p.p_lower),
                    p_star: format_rational(&p.p_star),
                })
                .collect(),
            nu: format_rational(&self.nu),
            nu_floor: self.nu_floor.to_string(),
            checked: self
                .checked
                .iter()
                .map(|c| CheckedJson { beta: c.beta.to_string(), n: c.n.to_string(), value: c.value.to_string() })
                .collect(),
            verdict: self.verdict.to_string(),
        };
        serde_json::to_value(wire).expect("certificate serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn avec(n: u64, head: i64) -> AVector {
        AVector::from_pairs(n, &[(1, head)]).unwrap()
    }

    #[test]
    fn table_row_eleven() {
        let tuple = RaduTuple::from_parts(33, 33, 33, &[2, -1, -1, 0], 11).unwrap();
        let cert = certify(&tuple, &avec(33, 4)).unwrap();
        assert_eq!(cert.verdict, Verdict::Proven);
        assert_eq!(cert.nu_floor, BigInt::from(7));
        assert_eq!(cert.orbit, BTreeSet::from([11, 20, 26, 29, 32]));
        assert_eq!(cert.checked.len(), 5 * 8);
        assert!(cert.checked.iter().all(|c| c.value.is_zero()));
    }

    #[test]
    fn tampered_tuple_fails_on_a_coefficient() {
        let tuple = RaduTuple::from_parts(21, 21, 42, &[2, -1, -1, 0], 8).unwrap();
        let cert = certify(&tuple, &avec(42, 2)).unwrap();
        match &cert.verdict {
            Verdict::Failed(why) => assert!(why.contains("is non-zero"), "{why}"),
            Verdict::Proven => panic!("tampered tuple must not be proven"),
        }
        assert!(cert.checked.iter().any(|c| !c.value.is_zero()));
    }

    #[test]
    fn a_vector_must_match_level() {
        let tuple = RaduTuple::from_parts(21, 21, 42, &[2, -1, 1, 0], 8).unwrap();
        assert!(matches!(certify(&tuple, &avec(21, 2)), Err(ModularError::AVectorLevel { .. })));
    }

    #[test]
    fn json_uses_strings() {
        let tuple = RaduTuple::from_parts(33, 33, 33, &[2, -1, -1, 0], 11).unwrap();
        let json = certify(&tuple, &avec(33, 4)).unwrap().to_json();
        assert_eq!(json["nu_floor"], "7");
        assert_eq!(json["tuple"]["r"][1], "-1");
        assert_eq!(json["verdict"], "proven");
        assert_eq!(json["reps"].as_array().unwrap().len(), 4);
        assert!(json["nu"].as_str().unwrap().contains('/'));
    }
}
