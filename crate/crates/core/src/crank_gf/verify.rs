use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{build_Ct, build_tcore_gf, reduce_mod_phi3, CrankError, ReductionResult};
use crate::modular_cert::{certify, orbit, AVector, Certificate, RaduTuple};

/// Default bound on `n` for the direct coefficient check.
pub const DEFAULT_DIRECT_BOUND: u64 = 30;

/// Stored data for one t: level, auxiliary vector and the classes the
/// crank product explains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremData {
    pub t: u64,
    pub level: u64,
    /// `a_1`; every other entry of the auxiliary vector is zero.
    pub a_head: i64,
    pub betas: &'static [u64],
}

impl TheoremData {
    pub fn for_t(t: u64) -> Result<Self, CrankError> {
        let (level, a_head, betas): (u64, i64, &'static [u64]) = match t {
            5 => (45, 2, &[6, 10, 12, 13]),
            7 => (42, 2, &[8, 11, 17]),
            11 => (33, 4, &[11, 20, 26, 29, 32]),
            17 => (51, 6, &[14, 20, 23, 26, 35, 38, 41, 47]),
            19 => (57, 6, &[14, 17, 26, 35, 38, 41, 44, 50, 56]),
            _ => return Err(CrankError::UnsupportedT(t)),
        };
        Ok(Self { t, level, a_head, betas })
    }

    pub fn alpha(&self) -> u64 {
        3 * self.t
    }

    pub fn a_vector(&self) -> AVector {
        AVector::from_pairs(self.level, &[(1, self.a_head)]).expect("1 divides N")
    }

    pub fn beta_set(&self) -> BTreeSet<u64> {
        self.betas.iter().copied().collect()
    }
}

/// Residues found by [`scan`], with the bound that was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub residues: Vec<u64>,
    pub n_max: u64,
}

/// All β in `0..alpha` with `p^{(t)}(αn + β) ≡ 0 (mod modulus)` for
/// every `n ≤ n_max`.
pub fn scan(t: u64, modulus: u64, alpha: u64, n_max: u64) -> Result<ScanResult, CrankError> {
    if alpha == 0 || modulus < 2 {
        return Err(CrankError::BadScan { alpha, modulus });
    }
    let series = build_tcore_gf(t, (alpha * (n_max + 1)) as usize)?;
    let m = BigInt::from(modulus);
    let residues = (0..alpha)
        .filter(|&beta| {
            (0..=n_max).all(|n| series.coeffs()[(alpha * n + beta) as usize].mod_floor(&m) == BigInt::zero())
        })
        .collect();
    Ok(ScanResult { residues, n_max })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub t: u64,
    pub reduction: ReductionResult,
    /// Residues β mod 3t whose C^{(t)} coefficients vanish mod Φ_3 for all
    /// `n ≤ direct_check_bound`.
    pub explained: BTreeSet<u64>,
    /// Residues where the t-core counts vanish mod 3 but the crank image
    /// does not.
    pub unexplained_vanishing: BTreeSet<u64>,
    pub certificates: Vec<Certificate>,
    pub direct_check_bound: u64,
    pub theorem_match: bool,
}

/// Picks one β per orbit so that the orbits cover `betas`.
pub fn orbit_seeds(tuple: &RaduTuple, betas: &BTreeSet<u64>) -> Result<Vec<u64>, CrankError> {
    let mut covered = BTreeSet::new();
    let mut seeds = Vec::new();
    for &beta in betas {
        if covered.contains(&beta) {
            continue;
        }
        covered.extend(orbit(&tuple.with_beta(beta))?);
        seeds.push(beta);
    }
    Ok(seeds)
}

/// Residues β in `0..3t` whose `[q^{3tn+β}] C^{(t)}` vanish mod Φ_3 for
/// `n ≤ n_max`.
pub fn direct_explained(t: u64, n_max: u64) -> Result<BTreeSet<u64>, CrankError> {
    let alpha = 3 * t;
    let series = build_Ct(t, (alpha * (n_max + 1)) as usize)?;
    Ok((0..alpha)
        .filter(|&beta| (0..=n_max).all(|n| series.coeffs()[(alpha * n + beta) as usize].is_zero()))
        .collect())
}

/// End-to-end check of the crank product for `t`.
pub fn verify_theorem(t: u64, n_max_direct: u64) -> Result<VerificationReport, CrankError> {
    let data = TheoremData::for_t(t)?;
    let alpha = data.alpha();
    let precision = (alpha * (n_max_direct + 1)) as usize;
    let reduction = reduce_mod_phi3(t, precision.max(200))?;

    let template = RaduTuple::new(alpha, data.level, reduction.spec.clone(), data.betas[0]);
    let listed = data.beta_set();
    let seeds = orbit_seeds(&template, &listed)?;
    let a = data.a_vector();
    let certificates = seeds
        .par_iter()
        .map(|&beta| certify(&template.with_beta(beta), &a))
        .collect::<Result<Vec<_>, _>>()?;

    let explained = direct_explained(t, n_max_direct)?;
    let vanishing: BTreeSet<u64> = scan(t, 3, alpha, n_max_direct)?.residues.into_iter().collect();
    let unexplained_vanishing = vanishing.difference(&explained).copied().collect();

    let certified: BTreeSet<u64> = certificates
        .iter()
        .filter(|c| c.verdict.is_proven())
        .flat_map(|c| c.orbit.iter().copied())
        .collect();
    let theorem_match =
        explained == listed && certified == listed && certificates.iter().all(|c| c.verdict.is_proven());

    Ok(VerificationReport {
        t,
        reduction,
        explained,
        unexplained_vanishing,
        certificates,
        direct_check_bound: n_max_direct,
        theorem_match,
    })
}

#[derive(Serialize)]
struct ReportJson {
    t: String,
    explained: Vec<String>,
    unexplained_vanishing: Vec<String>,
    certificates: Vec<serde_json::Value>,
    direct_check_bound: String,
    theorem_match: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        let strs = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect();
        serde_json::to_value(ReportJson {
            t: self.t.to_string(),
            explained: strs(&self.explained),
            unexplained_vanishing: strs(&self.unexplained_vanishing),
            certificates: self.certificates.iter().map(Certificate::to_json).collect(),
            direct_check_bound: self.direct_check_bound.to_string(),
            theorem_match: self.theorem_match,
        })
        .expect("report serializes")
    }
}
