//! Shared fixtures for the integration suites: small certified catalogs
//! built once per test binary.

#![allow(dead_code)]

use std::sync::OnceLock;
use zetalab::catalog::{scan_zeros, NontrivialZero, ZeroCatalog};

pub fn catalog_120() -> &'static ZeroCatalog {
    static C: OnceLock<ZeroCatalog> = OnceLock::new();
    C.get_or_init(|| scan_zeros(14.0, 120.0).expect("scan [14, 120]"))
}

pub fn catalog_600() -> &'static ZeroCatalog {
    static C: OnceLock<ZeroCatalog> = OnceLock::new();
    C.get_or_init(|| scan_zeros(14.0, 600.0).expect("scan [14, 600]"))
}

pub fn catalog_1100() -> &'static ZeroCatalog {
    static C: OnceLock<ZeroCatalog> = OnceLock::new();
    C.get_or_init(|| scan_zeros(14.0, 1100.0).expect("scan [14, 1100]"))
}

/// The 600-catalog with one off-line zero at beta = 0.75, gamma = 500.3.
pub fn synthetic_600() -> &'static ZeroCatalog {
    static C: OnceLock<ZeroCatalog> = OnceLock::new();
    C.get_or_init(|| {
        catalog_600()
            .inject_synthetic(&[NontrivialZero::synthetic(0.75, 500.3)])
            .expect("inject")
    })
}

/// Deterministic pseudo-random stream for grid tests.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
