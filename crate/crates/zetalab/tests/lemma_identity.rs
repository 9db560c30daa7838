//! The smoothed explicit-formula identity: weighted prime-power sum
//! against the zero-expansion side, within the truncation majorant.

mod common;

use common::catalog_1100;
use zetalab::error::Error;
use zetalab::explicit::{lemma1_rhs, VonMangoldtTable};
use zetalab::verify::check_lemma1;
use zetalab::Complex64;

#[test]
fn identity_holds_at_sample_points() {
    let catalog = catalog_1100();
    let table = VonMangoldtTable::new(101).unwrap();
    for &(sigma, t) in &[(2.0, 50.0), (0.8, 100.0), (1.2, 300.0)] {
        let s = Complex64::new(sigma, t);
        let check = check_lemma1(&table, catalog, s, 10.0, 1000.0).unwrap();
        assert!(
            check.passes,
            "(sigma, t) = ({sigma}, {t}): residual {:.3e} vs tail {:.3e}",
            check.residual, check.tail_bound
        );
        // the majorant is meaningful, not vacuous
        assert!(
            check.tail_bound < 1.0,
            "tail bound {:.3e}",
            check.tail_bound
        );
    }
}

#[test]
fn rhs_conjugation_symmetry() {
    let catalog = catalog_1100();
    let s = Complex64::new(1.2, 77.0);
    let a = lemma1_rhs(s, 10.0, catalog, 900.0).unwrap();
    let b = lemma1_rhs(s.conj(), 10.0, catalog, 900.0).unwrap();
    assert!((a.value.conj() - b.value).norm() < 1e-9);
    assert!((a.tail_bound - b.tail_bound).abs() < 1e-12);
}

#[test]
fn trivial_zero_terms_decay_monotonically() {
    // at s = 2 each trivial-zero term is bounded by
    // x^{-4k}/((2k+2)^2 log x) and decreases in k
    let x: f64 = 10.0;
    let s = Complex64::new(2.0, 0.0);
    let mut prev = f64::INFINITY;
    for k in 1..=6 {
        let tk = s + 2.0 * k as f64;
        let term = ((-tk * 2.0 * x.ln()).exp() - (-tk * x.ln()).exp()) / (tk * tk * x.ln());
        let cap = x.powi(-2 * k) / ((2 * k + 2) as f64).powi(2) / x.ln();
        assert!(term.norm() <= cap * 1.001, "k = {k}");
        assert!(term.norm() < prev);
        prev = term.norm();
    }
}

#[test]
fn guards_fire() {
    let catalog = catalog_1100();
    // cutoff above the certified range
    assert!(matches!(
        lemma1_rhs(Complex64::new(2.0, 50.0), 10.0, catalog, 5000.0),
        Err(Error::UncertifiedRange(_))
    ));
    // s on top of a zero
    let gamma_1 = catalog.zeros()[0].gamma;
    assert!(matches!(
        lemma1_rhs(Complex64::new(0.5, gamma_1), 10.0, catalog, 1000.0),
        Err(Error::NearZero { .. })
    ));
    // cutoff too close to t for the tail majorant
    assert!(matches!(
        lemma1_rhs(Complex64::new(2.0, 999.5), 10.0, catalog, 1000.0),
        Err(Error::Domain(_))
    ));
}

#[test]
fn residual_shrinks_with_cutoff() {
    let catalog = catalog_1100();
    let table = VonMangoldtTable::new(101).unwrap();
    let s = Complex64::new(0.8, 50.0);
    let near = check_lemma1(&table, catalog, s, 10.0, 300.0).unwrap();
    let far = check_lemma1(&table, catalog, s, 10.0, 1000.0).unwrap();
    assert!(far.residual < near.residual);
    assert!(far.tail_bound < near.tail_bound);
    assert!(near.passes && far.passes);
}
