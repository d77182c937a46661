use qcrank::crank_gf::{build_Ct, reduce_mod_phi3, scan, verify_theorem, TheoremData, SUPPORTED_T};
use qcrank::qseries::eta_product;
use qcrank::modular_cert::{certify, cusp_reps, p_lower, p_star, wang_applies, wang_reps, RaduTuple};
use qcrank::ExactRational;

fn p_sums(reps: &[qcrank::modular_cert::CosetRep], tuple: &RaduTuple, t: u64) -> Vec<ExactRational> {
    let a = TheoremData::for_t(t).unwrap().a_vector();
    let mut out: Vec<ExactRational> = reps
        .iter()
        .map(|g| {
            let g = g.normalized(tuple.level());
            p_lower(&g, tuple).unwrap() + p_star(&g, &a)
        })
        .collect();
    out.sort();
    out
}

#[test]
fn wang_and_cusp_branches_agree_on_square_free_levels() {
    for (t, r) in [(7u64, [2i64, -1, 1, 0]), (11, [2, -1, -1, 0]), (17, [2, -1, -1, 0]), (19, [2, -1, 1, 0])] {
        let data = TheoremData::for_t(t).unwrap();
        assert!(wang_applies(data.level));
        let tuple = RaduTuple::from_parts(data.alpha(), data.alpha(), data.level, &r, data.betas[0]).unwrap();
        let wang = wang_reps(data.level);
        let cusps = cusp_reps(data.level);
        assert_eq!(wang.len(), cusps.len(), "t={t}");
        assert_eq!(p_sums(&wang, &tuple, t), p_sums(&cusps, &tuple, t), "t={t}");
    }
}

#[test]
fn legacy_t5_tuple_does_not_prove_vanishing() {
    let a = TheoremData::for_t(5).unwrap().a_vector();
    let legacy = RaduTuple::from_parts(15, 15, 45, &[2, -1, 1, 0], 6).unwrap();
    let cert = certify(&legacy, &a).unwrap();
    assert_eq!(cert.nu_floor, 11.into());
    assert!(!cert.verdict.is_proven());
    assert!(cert.verdict.to_string().contains("is non-zero"));
}

#[test]
fn verify_every_t() {
    for t in [5, 11, 17, 19] {
        let report = verify_theorem(t, 20).unwrap();
        assert!(report.theorem_match, "t={t}: {:?}", report.explained);
        let json = report.to_json();
        assert_eq!(json["t"], t.to_string());
        assert_eq!(json["theorem_match"], true);
    }
}

#[test]
fn reduced_slices_transfer_to_the_crank_image() {
    const N_MAX: u64 = 30;
    for t in SUPPORTED_T {
        let data = TheoremData::for_t(t).unwrap();
        let alpha = data.alpha();
        let precision = (alpha * (N_MAX + 1)) as usize;
        let spec = reduce_mod_phi3(t, 200).unwrap().spec;
        let eta = eta_product(&spec, precision).unwrap();
        let ct = build_Ct(t, precision).unwrap();
        for &beta in data.betas {
            assert!(eta.slice_progression(alpha as usize, beta as usize).unwrap().is_zero(), "t={t} beta={beta}");
            assert!(ct.slice_progression(alpha as usize, beta as usize).unwrap().is_zero(), "t={t} beta={beta}");
        }
    }
}

#[test]
fn explained_classes_are_non_residues() {
    for t in [7u64, 11, 17, 19] {
        let data = TheoremData::for_t(t).unwrap();
        assert!(data.betas.iter().all(|b| b % 3 == 2), "t={t}");
        let vanishing = scan(t, 3, data.alpha(), 20).unwrap().residues;
        assert!(data.betas.iter().all(|b| vanishing.contains(b)), "t={t}");
    }
}

#[test]
fn extra_mod_three_classes() {
    // For t = 7, 11 every extra class is 0 mod 3; for t = 17, 19 some are 1 mod 3.
    let extras: [(u64, &[u64]); 4] = [
        (7, &[3, 15, 18]),
        (11, &[3, 12, 24, 27, 30]),
        (17, &[10, 16, 19, 25, 28, 34, 46, 49]),
        (19, &[7, 16, 19, 22, 25, 31, 37, 52, 55]),
    ];
    for (t, want) in extras {
        let data = TheoremData::for_t(t).unwrap();
        let found: Vec<u64> =
            scan(t, 3, data.alpha(), 60).unwrap().residues.into_iter().filter(|b| !data.betas.contains(b)).collect();
        assert_eq!(found, want, "t={t}");
    }
}
