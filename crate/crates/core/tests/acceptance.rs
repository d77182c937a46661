//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Every check here is exact: integer, rational or ring equality. The bounds
//! below are the only knobs and are pinned.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use qcrank::crank_gf::{
    build_Ct, build_Ct_at_one, build_crank_gf, build_crank_gf_laurent, build_tcore_gf, direct_explained,
    reduce_mod_phi3, scan, TheoremData, SUPPORTED_T,
};
use qcrank::cyclotomic::cyc_is_zero;
use qcrank::modular_cert::{
    certify, coset_reps, cusp_reps, cusps_equivalent, delta_star_check, first_nonvanishing, index_gamma0, orbit,
    p_lower, p_star, AVector, RaduTuple,
};
use qcrank::partition::{count_t_core, crank_table};
use qcrank::LaurentPoly;

const DIRECT_BOUND: u64 = 30;
const CLASSIFY_BOUND: u64 = 20;
const SCANNER_WITNESS_BOUND: u64 = 10;
const NU_EXTENSION_FACTOR: u64 = 5;
const ORACLE_TCORE_N: u32 = 30;
const ORACLE_TCORE_T: [u32; 5] = [2, 3, 5, 7, 11];
const CRANK_TABLE_N: u32 = 25;
const CLASSICAL: [(u32, usize, usize); 3] = [(5, 4, 20), (7, 5, 15), (11, 6, 10)];
const REDUCTION_PRECISION: usize = 200;
const EXPECTED_J: [(u64, u32); 5] = [(5, 2), (7, 2), (11, 4), (17, 6), (19, 6)];
const ZETA_ONE_PRECISION: usize = 500;

/// Criteria known to fail against the stored reference data; the suite stays green
/// only while they keep failing for the recorded reason.
const EXPECTED_FAIL: [u32; 1] = [4];

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(xs: &[u64]) -> BTreeSet<u64> {
    xs.iter().copied().collect()
}

fn table_tuple(t: u64, beta: u64) -> RaduTuple {
    let data = TheoremData::for_t(t).unwrap();
    let r: &[i64] = match t {
        7 | 19 => &[2, -1, 1, 0],
        _ => &[2, -1, -1, 0],
    };
    RaduTuple::from_parts(data.alpha(), data.alpha(), data.level, r, beta).unwrap()
}

fn legacy_t5_tuple() -> (RaduTuple, AVector) {
    let tuple = RaduTuple::from_parts(15, 15, 45, &[2, -1, 1, 0], 6).unwrap();
    (tuple, TheoremData::for_t(5).unwrap().a_vector())
}

fn c1_orbits() -> Check {
    let rows: [(u64, u64, &[u64]); 4] = [
        (7, 8, &[8, 11, 17]),
        (11, 11, &[11, 20, 26, 29, 32]),
        (17, 14, &[14, 20, 23, 26, 35, 38, 41, 47]),
        (19, 14, &[14, 17, 26, 35, 38, 41, 44, 50, 56]),
    ];
    for (t, beta, want) in rows {
        let got = orbit(&table_tuple(t, beta)).map_err(|e| e.to_string())?;
        ensure(got == set(want), || format!("t={t}: orbit {got:?}, expected {want:?}"))?;
    }
    Ok(())
}

fn c2_nu() -> Check {
    for (t, want) in [(7, 15), (11, 7), (17, 17), (19, 26)] {
        let data = TheoremData::for_t(t).unwrap();
        let cert = certify(&table_tuple(t, data.betas[0]), &data.a_vector()).map_err(|e| e.to_string())?;
        ensure(cert.nu_floor == BigInt::from(want), || format!("t={t}: floor(nu) = {}, expected {want}", cert.nu_floor))?;
    }
    let (tuple, a) = legacy_t5_tuple();
    let cert = certify(&tuple, &a).map_err(|e| e.to_string())?;
    ensure(cert.nu_floor == BigInt::from(11), || format!("legacy t=5 tuple: floor(nu) = {}", cert.nu_floor))
}

fn c3_delta_star_and_p_values() -> Check {
    let mut cases: Vec<(RaduTuple, AVector)> = [7u64, 11, 17, 19]
        .into_iter()
        .map(|t| {
            let data = TheoremData::for_t(t).unwrap();
            (table_tuple(t, data.betas[0]), data.a_vector())
        })
        .collect();
    let a5 = TheoremData::for_t(5).unwrap().a_vector();
    for beta in [6, 10] {
        cases.push((RaduTuple::from_parts(15, 15, 45, &[2, -1, -1, 0], beta).unwrap(), a5.clone()));
    }
    for (tuple, a) in &cases {
        let ds = delta_star_check(tuple);
        ensure(ds.passes(), || format!("{tuple}: conditions {:?} fail", ds.failed))?;
        for g in coset_reps(tuple.level()) {
            let g = g.normalized(tuple.level());
            let sum = p_lower(&g, tuple).map_err(|e| e.to_string())? + p_star(&g, a);
            ensure(sum >= Zero::zero(), || format!("{tuple}: p_lower + p_star = {sum} < 0 at {g}"))?;
        }
    }
    Ok(())
}

fn c4_cusps() -> Check {
    let computed = cusp_reps(45);
    let computed: Vec<(i64, i64)> = computed.iter().map(|g| g.cusp()).collect();
    let mut errs = Vec::new();
    if computed.len() != 8 {
        errs.push(format!("{} cusp classes for N=45, expected 8", computed.len()));
    }
    for (n, want) in [(45, 72), (42, 96)] {
        if index_gamma0(n) != want {
            errs.push(format!("index of Gamma0({n}) is {}, expected {want}", index_gamma0(n)));
        }
    }
    // ∞, 0, 1/3, 1/5, 1/9, 1/15, 2/15, 4/45 as (numerator, denominator).
    let reference: [(i64, i64); 8] = [(1, 0), (0, 1), (1, 3), (1, 5), (1, 9), (1, 15), (2, 15), (4, 45)];
    for p in reference {
        if !computed.iter().any(|&c| cusps_equivalent(p, c, 45)) {
            errs.push(format!("reference cusp {}/{} matches no computed class", p.0, p.1));
        }
    }
    for c in &computed {
        let hits: Vec<_> = reference.iter().filter(|&&p| cusps_equivalent(p, *c, 45)).collect();
        match hits.len() {
            1 => {}
            0 => errs.push(format!("computed cusp {}/{} has no representative in the reference list", c.0, c.1)),
            _ => errs.push(format!("computed cusp {}/{} is hit by reference cusps {hits:?}", c.0, c.1)),
        }
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

fn c5_certificates() -> Check {
    for t in SUPPORTED_T {
        let data = TheoremData::for_t(t).unwrap();
        let seeds: Vec<u64> = if t == 5 { vec![6, 10] } else { vec![data.betas[0]] };
        let mut covered = BTreeSet::new();
        for beta in seeds {
            let tuple = table_tuple(t, beta);
            let cert = certify(&tuple, &data.a_vector()).map_err(|e| e.to_string())?;
            ensure(cert.verdict.is_proven(), || format!("{tuple}: {}", cert.verdict))?;
            let ext = cert.nu_floor.to_u64().unwrap_or(0) * NU_EXTENSION_FACTOR;
            if let Some(c) = first_nonvanishing(&tuple, ext).map_err(|e| e.to_string())? {
                return Err(format!("{tuple}: a({}n+{}) = {} at n={} within {ext}", tuple.alpha(), c.beta, c.value, c.n));
            }
            covered.extend(cert.orbit);
        }
        ensure(covered == data.beta_set(), || format!("t={t}: certified {covered:?}"))?;
    }
    Ok(())
}

fn c6_direct() -> Check {
    for t in SUPPORTED_T {
        let data = TheoremData::for_t(t).unwrap();
        let alpha = data.alpha();
        let series = build_Ct(t, (alpha * (DIRECT_BOUND + 1)) as usize).map_err(|e| e.to_string())?;
        for &beta in data.betas {
            for n in 0..=DIRECT_BOUND {
                let c = &series.coeffs()[(alpha * n + beta) as usize];
                ensure(cyc_is_zero(c), || format!("t={t}: [q^{}] = {c} is non-zero", alpha * n + beta))?;
            }
        }
    }
    Ok(())
}

fn c7_classification() -> Check {
    for t in SUPPORTED_T {
        let data = TheoremData::for_t(t).unwrap();
        let found = direct_explained(t, CLASSIFY_BOUND).map_err(|e| e.to_string())?;
        ensure(found == data.beta_set(), || format!("t={t}: direct check passes for {found:?}"))?;
        if t != 5 {
            ensure(found.iter().all(|b| b % 3 == 2), || format!("t={t}: {found:?} not all 2 mod 3"))?;
        }
    }
    let vanishing: BTreeSet<u64> = scan(7, 3, 21, CLASSIFY_BOUND).map_err(|e| e.to_string())?.residues.into_iter().collect();
    let extra: BTreeSet<u64> = vanishing.difference(&TheoremData::for_t(7).unwrap().beta_set()).copied().collect();
    ensure(extra == set(&[3, 15, 18]), || format!("t=7 scanner extras {extra:?}"))?;
    let ct = build_Ct(7, (21 * (SCANNER_WITNESS_BOUND + 1)) as usize).map_err(|e| e.to_string())?;
    let witness = (0..=SCANNER_WITNESS_BOUND).any(|n| !cyc_is_zero(&ct.coeffs()[(21 * n + 3) as usize]));
    ensure(witness, || "t=7, beta=3: crank image vanishes for all n <= 10".into())
}

fn c8_oracles() -> Check {
    for t in ORACLE_TCORE_T {
        let g = build_tcore_gf(t as u64, ORACLE_TCORE_N as usize + 1).map_err(|e| e.to_string())?;
        for n in 0..=ORACLE_TCORE_N {
            let count = count_t_core(n, t).map_err(|e| e.to_string())?;
            ensure(g.coeffs()[n as usize] == BigInt::from(count), || {
                format!("t={t}, n={n}: enumeration {count}, product {}", g.coeffs()[n as usize])
            })?;
        }
    }
    ensure(count_t_core(5, 5) == Ok(2) && count_t_core(6, 5) == Ok(6), || "p5(5), p5(6) wrong".into())?;

    let table = crank_table(CRANK_TABLE_N).map_err(|e| e.to_string())?;
    let gf = build_crank_gf_laurent(CRANK_TABLE_N as usize + 1).map_err(|e| e.to_string())?;
    for n in 2..=CRANK_TABLE_N {
        let row = LaurentPoly::from_terms(table.row(n).into_iter().map(|(m, c)| (m, BigInt::from(c))));
        let prod = &gf.coeffs()[n as usize];
        ensure(&row == prod, || format!("n={n}: table {row}, product {prod}"))?;
    }
    let anomaly_table = LaurentPoly::from_terms(table.row(1).into_iter().map(|(m, c)| (m, BigInt::from(c))));
    ensure(
        anomaly_table == LaurentPoly::monomial(-1, 1)
            && gf.coeffs()[1] == LaurentPoly::from_terms([(-1, 1), (0, -1), (1, 1)]),
        || format!("n=1: table {anomaly_table}, product {}", gf.coeffs()[1]),
    )
}

fn c9_classical() -> Check {
    for (ell, beta, n_max) in CLASSICAL {
        let step = ell as usize;
        let series = build_crank_gf(ell, step * (n_max + 1)).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            let c = &series.coeffs()[step * n + beta];
            ensure(cyc_is_zero(c), || format!("ell={ell}: [q^{}] = {c}", step * n + beta))?;
        }
    }
    Ok(())
}

fn c10_reductions() -> Check {
    for (t, j) in EXPECTED_J {
        let red = reduce_mod_phi3(t, REDUCTION_PRECISION).map_err(|e| e.to_string())?;
        ensure(red.j == j, || format!("t={t}: j = {}, expected {j}", red.j))?;
    }
    for t in SUPPORTED_T {
        let at_one = build_Ct_at_one(t, ZETA_ONE_PRECISION).map_err(|e| e.to_string())?;
        let tcore = build_tcore_gf(t, ZETA_ONE_PRECISION).map_err(|e| e.to_string())?;
        ensure(at_one == tcore, || format!("t={t}: zeta=1 specialisation differs from the t-core series"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Check); 10] = [
        (1, "orbits reproduced", c1_orbits),
        (2, "floor(nu) reproduced", c2_nu),
        (3, "Delta* membership and p-value positivity", c3_delta_star_and_p_values),
        (4, "Gamma0(45) cusps and indices", c4_cusps),
        (5, "certificates proven, 5x extension", c5_certificates),
        (6, "direct check to n <= 30", c6_direct),
        (7, "explained-class classification", c7_classification),
        (8, "oracle agreement", c8_oracles),
        (9, "classical crank congruences", c9_classical),
        (10, "mod-Phi3 reductions", c10_reductions),
    ];
    let mut unexpected = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAIL.contains(&id);
        match &result {
            Ok(()) => println!("criterion {id:>2} PASS  {name} ({secs:.2}s)"),
            Err(why) => println!("criterion {id:>2} FAIL  {name} ({secs:.2}s): {why}"),
        }
        if result.is_ok() == expected_fail {
            unexpected += 1;
            if expected_fail {
                println!("             criterion {id} was expected to fail; update EXPECTED_FAIL");
            }
        } else if expected_fail {
            println!("             known failure: the reference cusp list is not a set of class representatives");
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
