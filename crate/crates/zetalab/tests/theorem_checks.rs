//! Decomposition verification: case structure, specialization identity,
//! and the corollary-style critical-line checks.

mod common;

use common::{catalog_600, SplitMix};
use zetalab::error::Error;
use zetalab::explicit::VonMangoldtTable;
use zetalab::sizdc::SizdcParams;
use zetalab::verify::{self, baselines, eps0_effective, DecompositionCase};

fn sizdc_default() -> SizdcParams {
    SizdcParams::parse("l=recip_loglog;v=one;phi=const:3;psi=const:100").unwrap()
}

#[test]
fn upper_case_at_sigma_two_structure() {
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let sizdc = sizdc_default();
    // x = 10: sigma_x ~ 1.37 so sigma = 2 sits in the upper case, and
    // delta_x ~ 0.43 < 1.5 keeps the near-zero disk empty
    let r = verify::verify_theorem1(&table, catalog, &sizdc, 100.0, 10.0, 2.0).unwrap();
    assert_eq!(r.case, DecompositionCase::Upper);
    assert_eq!(
        r.near_zero_log_sum, 0.0,
        "no zero reaches the disk at sigma = 2"
    );
    assert_eq!(r.shifted_zero_terms, 0.0);
    // residual is exactly lhs minus the weighted sum, as computed fields
    let expect = r.lhs_log_zeta - r.dirichlet_term;
    assert_eq!(r.residual, expect);
    // the zero terms being real, the imaginary parts satisfy an identity
    assert_eq!(r.residual.im, r.lhs_log_zeta.im - r.dirichlet_term.im);
    assert!(r.ratio < 1.0, "ratio {}", r.ratio);
}

#[test]
fn small_x_at_sigma_two_falls_in_lower_case() {
    // with x = 3 the crossover sigma_x = 1/2 + 2 delta_x ~ 2.32 exceeds
    // 2, so sigma = 2 takes the lower branch; all zero sums are still
    // empty (delta_x < 1 < distance to the strip) and the residual
    // reduces to lhs minus the weighted sum at s_1
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(16).unwrap();
    let sizdc = sizdc_default();
    let r = verify::verify_theorem1(&table, catalog, &sizdc, 100.0, 3.0, 2.0).unwrap();
    assert_eq!(r.case, DecompositionCase::Lower);
    assert!(r.sigma_1 > 2.0);
    assert_eq!(r.near_zero_log_sum, 0.0);
    assert_eq!(r.shifted_zero_terms, 0.0);
    assert_eq!(r.residual, r.lhs_log_zeta - r.dirichlet_term);
    assert!(r.ratio < 1.0, "ratio {}", r.ratio);
}

#[test]
fn upper_case_residual_against_independent_series() {
    // at sigma = 2 the decomposition residual must agree with the
    // absolutely-convergent route: log zeta(2+it) via the truncated
    // Dirichlet-with-tail method minus the same weighted sum
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let sizdc = sizdc_default();
    let t = 100.0;
    let r = verify::verify_theorem1(&table, catalog, &sizdc, t, 10.0, 2.0).unwrap();
    let oracle_log = zetalab::zeta::zeta(zetalab::zeta::EvalPoint::new(2.0, t).unwrap())
        .unwrap()
        .value
        .ln();
    let oracle_residual = oracle_log - r.dirichlet_term;
    assert!(
        (r.residual - oracle_residual).norm() < 1e-8,
        "residual {} vs oracle {}",
        r.residual,
        oracle_residual
    );
}

#[test]
fn lower_case_runs_at_critical_line() {
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let sizdc = sizdc_default();
    let r = verify::verify_theorem1(&table, catalog, &sizdc, 100.0, 10.0, 0.5).unwrap();
    assert_eq!(r.case, DecompositionCase::Lower);
    assert!(r.y_bound > 0.0);
    assert!(r.ratio.is_finite());
    assert!(
        baselines::within(r.ratio, baselines::THEOREM1_LOWER_T100_X10_RATIO),
        "ratio {} vs frozen {}",
        r.ratio,
        baselines::THEOREM1_LOWER_T100_X10_RATIO
    );
}

#[test]
fn specialization_identity_on_grid() {
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let sizdc = sizdc_default();
    let mut rng = SplitMix(0x5eed);
    let mut checked = 0;
    while checked < 8 {
        let t = rng.in_range(50.0, 550.0);
        let x = rng.in_range(3.5, 10.0);
        let sigma = rng.in_range(0.5, 2.0);
        let delta_x = 1.0 / x.ln();
        let t1 = match verify::verify_theorem1(&table, catalog, &sizdc, t, x, sigma) {
            Ok(r) => r,
            Err(Error::NearZero { .. }) => continue,
            Err(e) => panic!("unexpected: {e}"),
        };
        let t2 = verify::verify_theorem2(&table, catalog, &sizdc, t, x, delta_x, sigma).unwrap();
        assert_eq!(t1.case, t2.case);
        assert_eq!(t1.near_zero_log_sum, t2.near_zero_log_sum);
        assert_eq!(t1.shifted_zero_terms, t2.shifted_zero_terms);
        assert_eq!(t1.dirichlet_term, t2.dirichlet_term);
        assert_eq!(t1.lhs_log_zeta, t2.lhs_log_zeta);
        assert_eq!(t1.residual, t2.residual);
        assert_eq!(t1.y_bound, t2.y_bound);
        assert_eq!(t1.ratio, t2.ratio);
        checked += 1;
    }
}

#[test]
fn hypothesis_violations_reported_not_clamped() {
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(4_000_000).unwrap();
    // psi small: e^{Psi(t/2)} below x
    let tight = SizdcParams::parse("l=one;v=one;phi=const:3;psi=const:4").unwrap();
    let err = verify::verify_theorem1(&table, catalog, &tight, 100.0, 900.0, 2.0);
    match err {
        Err(Error::Hypothesis(msg)) => assert!(msg.contains("Psi"), "{msg}"),
        other => panic!("expected hypothesis error, got {other:?}"),
    }
    // x beyond t^2
    let sizdc = sizdc_default();
    let err = verify::verify_theorem2(&table, catalog, &sizdc, 14.5, 500.0, 0.5, 1.0);
    assert!(matches!(err, Err(Error::Hypothesis(_))));
}

#[test]
fn conjugation_mirror_of_terms() {
    // every computed term of the report is conjugation-covariant; with
    // real zero sums this reduces to the dirichlet and lhs terms
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let s = zetalab::Complex64::new(1.3, 250.0);
    let x = 10.0;
    let plus = zetalab::explicit::dirichlet_sum(&table, s, x, zetalab::explicit::Weight::OverLogN)
        .unwrap();
    let minus =
        zetalab::explicit::dirichlet_sum(&table, s.conj(), x, zetalab::explicit::Weight::OverLogN)
            .unwrap();
    assert!((plus.conj() - minus).norm() < 1e-13);
    let data = catalog.window_data();
    let w = data.window();
    let up = zetalab::zeta::log_zeta(zetalab::zeta::EvalPoint::new(1.3, 250.0).unwrap(), &w)
        .unwrap()
        .value;
    let down = zetalab::zeta::log_zeta(zetalab::zeta::EvalPoint::new(1.3, -250.0).unwrap(), &w)
        .unwrap()
        .value;
    assert!((up.conj() - down).norm() < 1e-9);
}

#[test]
fn corollary_hypothesis_error_at_small_heights() {
    let catalog = catalog_600();
    // log(10)^{0.025} is far below 3
    let err = verify::verify_corollary(catalog, 20.0, 0.1);
    match err {
        Err(Error::Hypothesis(msg)) => {
            assert!(msg.contains("effective eps0"), "{msg}");
        }
        other => panic!("expected hypothesis error, got {other:?}"),
    }
}

#[test]
fn corollary_with_effective_eps0() {
    let catalog = catalog_600();
    let t = 468.3;
    let eps0 = eps0_effective(t) * 1.02;
    let (report, row) = verify::verify_corollary(catalog, t, eps0).unwrap();
    assert!(report.x >= 3.0 && report.x < 4.0);
    assert!(report.ratio.is_finite());
    assert!(row.littlewood_ratio < 1.0);
    assert!(row.s_ratio < 1.0);
    // shift is 8/(eps0 log log t), echoed in the report
    let expect_shift = 8.0 / (eps0 * t.ln().ln());
    assert!((report.shifted_zero_terms - expect_shift).abs() < 1e-12);
}

#[test]
fn littlewood_scan_shapes_and_determinism() {
    let catalog = catalog_600();
    let scan = verify::littlewood_scan(catalog, 100.0, 550.0, 40, 0.1).unwrap();
    assert_eq!(scan.rows.len(), 40);
    for row in &scan.rows {
        assert!(row.littlewood_ratio.is_finite());
        assert!(row.s_ratio.is_finite());
    }
    assert!(scan.max_littlewood_ratio < 1.0);
    assert!(scan.max_s_ratio < 1.0);
    let again = verify::littlewood_scan(catalog, 100.0, 550.0, 40, 0.1).unwrap();
    assert_eq!(
        zetalab::report::littlewood_csv(&scan),
        zetalab::report::littlewood_csv(&again)
    );
    // single-point scan equals the corollary row at the same height
    let single = verify::littlewood_scan(catalog, 468.3, 468.3, 1, 0.1).unwrap();
    assert_eq!(single.rows.len(), 1);
    let eps0 = eps0_effective(468.3) * 1.02;
    let (_, row) = verify::verify_corollary(catalog, 468.3, eps0).unwrap();
    assert!((single.rows[0].log_abs_zeta - row.log_abs_zeta).abs() < 1e-12);
    assert!((single.rows[0].s_t - row.s_t).abs() < 1e-12);
}

#[test]
fn scan_point_near_ordinate_is_repelled_and_annotated() {
    let catalog = catalog_600();
    let gamma_1 = catalog.zeros()[0].gamma;
    let scan = verify::littlewood_scan(catalog, gamma_1 - 5e-4, gamma_1 - 5e-4, 1, 0.1).unwrap();
    let row = &scan.rows[0];
    assert!(row.repelled);
    assert!((row.t - row.nominal_t).abs() > 1e-4);
    assert!((row.t - gamma_1).abs() >= 1e-3);
    assert!(row.log_abs_zeta.is_finite());
}

#[test]
fn pefz_remainder_ratio_is_modest() {
    // the near-window expansion of zeta'/zeta leaves a remainder of
    // size O(log t); the measured ratio stays of order one at desk
    // heights and is reported, never asserted
    let catalog = catalog_600();
    for &(sigma, t) in &[(0.5, 100.3), (0.8, 250.0), (1.5, 500.0)] {
        let ratio = verify::pefz_remainder_ratio(catalog, sigma, t).unwrap();
        assert!(ratio.is_finite() && ratio >= 0.0);
        assert!(ratio < 5.0, "remainder ratio {ratio} at ({sigma}, {t})");
    }
}

#[test]
fn report_json_deterministic_and_well_formed() {
    let catalog = catalog_600();
    let table = VonMangoldtTable::new(101).unwrap();
    let sizdc = sizdc_default();
    let r1 = verify::verify_theorem1(&table, catalog, &sizdc, 100.0, 10.0, 0.5).unwrap();
    let r2 = verify::verify_theorem1(&table, catalog, &sizdc, 100.0, 10.0, 0.5).unwrap();
    let j1 = zetalab::report::decomposition_json(&r1);
    let j2 = zetalab::report::decomposition_json(&r2);
    assert_eq!(j1, j2);
    assert!(j1.starts_with("{\"kind\":\"decomposition\""));
    assert!(j1.contains("\"case\":\"lower\""));
    assert!(j1.ends_with("}\n"));
}
