//! Certified catalogs of nontrivial zeros: location, persistence, and
//! the counting queries N(T) and N(sigma, T, h).
//!
//! A catalog lists zeros beta + i gamma with gamma > 0 in strictly
//! ascending gamma; conjugates at -gamma are implied and never stored.
//! Within `certified_range` the list is complete.  Synthetic zeros (any
//! beta in (0,1)) may be injected for exercising off-critical-line code
//! paths, which flips the catalog into hypothesis mode: its range then
//! expresses an assumed zero multiset rather than a certified one.

mod scan;

pub use scan::scan_zeros;

use crate::error::{Error, Result};
use crate::zeta::ZeroWindow;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Synthetic,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::Synthetic => "synthetic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NontrivialZero {
    pub gamma: f64,
    pub beta: f64,
    pub multiplicity: u32,
    pub provenance: Provenance,
}

impl NontrivialZero {
    pub fn computed(gamma: f64) -> Self {
        NontrivialZero {
            gamma,
            beta: 0.5,
            multiplicity: 1,
            provenance: Provenance::Computed,
        }
    }

    pub fn synthetic(beta: f64, gamma: f64) -> Self {
        NontrivialZero {
            gamma,
            beta,
            multiplicity: 1,
            provenance: Provenance::Synthetic,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return Err(Error::Domain(format!(
                "beta = {} outside (0, 1)",
                self.beta
            )));
        }
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            return Err(Error::Domain(format!(
                "gamma = {} not positive",
                self.gamma
            )));
        }
        if self.multiplicity == 0 {
            return Err(Error::Domain("multiplicity must be positive".into()));
        }
        if self.provenance == Provenance::Computed && self.beta != 0.5 {
            return Err(Error::Domain(
                "computed zeros lie on the critical line".into(),
            ));
        }
        Ok(())
    }
}

/// Counting query for N(sigma, T, h): zeros with beta >= sigma and
/// T <= gamma <= T + h, with multiplicity.
#[derive(Debug, Clone, Copy)]
pub struct CountQuery {
    pub sigma: f64,
    pub t: f64,
    pub h: f64,
}

impl CountQuery {
    pub fn new(sigma: f64, t: f64, h: f64) -> Result<Self> {
        if !(sigma >= 0.5) {
            return Err(Error::Domain(format!("sigma = {sigma} below 1/2")));
        }
        if !(h > 0.0) {
            return Err(Error::Domain(format!("window length h = {h} not positive")));
        }
        Ok(CountQuery { sigma, t, h })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogMode {
    /// Complete list of actual zeros over the certified range.
    Certified,
    /// Contains synthetic entries; the range expresses an assumption.
    Hypothesis,
}

#[derive(Debug, Clone)]
pub struct ZeroCatalog {
    zeros: Vec<NontrivialZero>,
    certified: (f64, f64),
    mode: CatalogMode,
}

impl ZeroCatalog {
    pub(crate) fn from_parts(
        zeros: Vec<NontrivialZero>,
        certified: (f64, f64),
        mode: CatalogMode,
    ) -> Result<Self> {
        for z in &zeros {
            z.validate()?;
        }
        for w in zeros.windows(2) {
            if w[0].gamma >= w[1].gamma {
                return Err(Error::Ordering(format!(
                    "gamma {} followed by {}",
                    w[0].gamma, w[1].gamma
                )));
            }
        }
        if !(certified.0 < certified.1) {
            return Err(Error::Domain(format!(
                "certified range [{}, {}] is empty",
                certified.0, certified.1
            )));
        }
        Ok(ZeroCatalog {
            zeros,
            certified,
            mode,
        })
    }

    pub fn zeros(&self) -> &[NontrivialZero] {
        &self.zeros
    }

    pub fn certified_range(&self) -> (f64, f64) {
        self.certified
    }

    pub fn mode(&self) -> CatalogMode {
        self.mode
    }

    /// True when the catalog mixes computed and synthetic provenance.
    pub fn provenance_mix(&self) -> bool {
        self.mode == CatalogMode::Hypothesis
            && self
                .zeros
                .iter()
                .any(|z| z.provenance == Provenance::Computed)
    }

    pub fn is_computed_only(&self) -> bool {
        self.zeros
            .iter()
            .all(|z| z.provenance == Provenance::Computed)
    }

    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        // the first ordinate sits above 14.1, so completeness from the
        // floor of the scanned range extends down to 0
        let eff_lo = if self.certified.0 <= 14.01 {
            0.0
        } else {
            self.certified.0
        };
        eff_lo <= lo && hi <= self.certified.1
    }

    /// Zeros with gamma in [lo, hi].
    pub fn in_window(&self, lo: f64, hi: f64) -> &[NontrivialZero] {
        let a = self.zeros.partition_point(|z| z.gamma < lo);
        let b = self.zeros.partition_point(|z| z.gamma <= hi);
        &self.zeros[a..b]
    }

    /// N(sigma, T, h) with multiplicity.
    pub fn count_short_interval(&self, q: &CountQuery) -> Result<u64> {
        if self.mode == CatalogMode::Certified && !self.covers(q.t, q.t + q.h) {
            return Err(Error::UncertifiedRange(format!(
                "window [{}, {}] outside certified [{}, {}]",
                q.t,
                q.t + q.h,
                self.certified.0,
                self.certified.1
            )));
        }
        Ok(self
            .in_window(q.t, q.t + q.h)
            .iter()
            .filter(|z| z.beta >= q.sigma)
            .map(|z| z.multiplicity as u64)
            .sum())
    }

    /// N(T): zeros with 0 < gamma <= T, with multiplicity.  Needs a
    /// catalog whose completeness reaches down to the first ordinate.
    pub fn n_of_t(&self, t: f64) -> Result<u64> {
        if self.certified.0 > 14.01 {
            return Err(Error::UncertifiedRange(
                "N(T) needs a catalog complete from the first ordinate (scan from 14)".into(),
            ));
        }
        if t > self.certified.1 {
            return Err(Error::UncertifiedRange(format!(
                "T = {t} above certified top {}",
                self.certified.1
            )));
        }
        Ok(self
            .zeros
            .iter()
            .take_while(|z| z.gamma <= t)
            .map(|z| z.multiplicity as u64)
            .sum())
    }

    /// New catalog with synthetic zeros merged in; the result is in
    /// hypothesis mode (even for an empty list the mode is preserved,
    /// so injecting nothing into a certified catalog is the identity).
    pub fn inject_synthetic(&self, extra: &[NontrivialZero]) -> Result<ZeroCatalog> {
        if extra.is_empty() {
            return Ok(self.clone());
        }
        let mut zeros = self.zeros.clone();
        for z in extra {
            let z = NontrivialZero {
                provenance: Provenance::Synthetic,
                ..*z
            };
            z.validate()?;
            let i = zeros.partition_point(|w| w.gamma < z.gamma);
            if let Some(existing) = zeros.get_mut(i).filter(|w| w.gamma == z.gamma) {
                if existing.beta == z.beta {
                    existing.multiplicity += z.multiplicity;
                    continue;
                }
                return Err(Error::Ordering(format!(
                    "duplicate gamma {} with distinct beta {} vs {}",
                    z.gamma, existing.beta, z.beta
                )));
            }
            zeros.insert(i, z);
        }
        ZeroCatalog::from_parts(zeros, self.certified, CatalogMode::Hypothesis)
    }

    fn window_pairs(&self) -> Vec<(f64, f64)> {
        self.zeros.iter().map(|z| (z.beta, z.gamma)).collect()
    }

    /// Owned repulsion-guard / step-control data for the zeta operations.
    pub fn window_data(&self) -> WindowData {
        WindowData::from_catalog(self)
    }

    /// Serialize in the v1 cache format; byte-identical for identical
    /// catalogs.
    pub fn to_cache_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "zetalab-zeros v1; certified={:.12}:{:.12}; count={}",
            self.certified.0,
            self.certified.1,
            self.zeros.len()
        );
        for z in &self.zeros {
            let _ = writeln!(
                out,
                "{:.12} {:.12} {} {}",
                z.gamma,
                z.beta,
                z.multiplicity,
                z.provenance.name()
            );
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_cache_string())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<ZeroCatalog> {
        let text = std::fs::read_to_string(path)?;
        ZeroCatalog::from_cache_string(&text)
    }

    pub fn from_cache_string(text: &str) -> Result<ZeroCatalog> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Format {
            line: 1,
            reason: "empty file".into(),
        })?;
        let mut certified = None;
        let mut count = None;
        let mut fields = header.split("; ");
        let magic = fields.next().unwrap_or("");
        if magic != "zetalab-zeros v1" {
            return Err(Error::Format {
                line: 1,
                reason: format!("bad magic `{magic}`, expected `zetalab-zeros v1`"),
            });
        }
        for field in fields {
            let (key, value) = field.split_once('=').ok_or_else(|| Error::Format {
                line: 1,
                reason: format!("header field `{field}` is not key=value"),
            })?;
            match key {
                "certified" => {
                    let (a, b) = value.split_once(':').ok_or_else(|| Error::Format {
                        line: 1,
                        reason: "certified range is not T0:T1".into(),
                    })?;
                    let a: f64 = a.parse().map_err(|_| Error::Format {
                        line: 1,
                        reason: format!("bad certified lower bound `{a}`"),
                    })?;
                    let b: f64 = b.parse().map_err(|_| Error::Format {
                        line: 1,
                        reason: format!("bad certified upper bound `{b}`"),
                    })?;
                    certified = Some((a, b));
                }
                "count" => {
                    count = Some(value.parse::<usize>().map_err(|_| Error::Format {
                        line: 1,
                        reason: format!("bad count `{value}`"),
                    })?);
                }
                other => {
                    return Err(Error::Format {
                        line: 1,
                        reason: format!("unknown header field `{other}`"),
                    });
                }
            }
        }
        let certified = certified.ok_or(Error::Format {
            line: 1,
            reason: "missing certified=T0:T1".into(),
        })?;
        let count = count.ok_or(Error::Format {
            line: 1,
            reason: "missing count=n".into(),
        })?;

        let mut zeros = Vec::with_capacity(count);
        let mut any_synthetic = false;
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(' ');
            let mut next = |what: &str| {
                parts.next().ok_or_else(|| Error::Format {
                    line: line_no,
                    reason: format!("missing {what}"),
                })
            };
            let gamma: f64 = next("gamma")?.parse().map_err(|_| Error::Format {
                line: line_no,
                reason: "bad gamma".into(),
            })?;
            let beta: f64 = next("beta")?.parse().map_err(|_| Error::Format {
                line: line_no,
                reason: "bad beta".into(),
            })?;
            let multiplicity: u32 = next("multiplicity")?.parse().map_err(|_| Error::Format {
                line: line_no,
                reason: "bad multiplicity".into(),
            })?;
            let provenance = match next("provenance")? {
                "computed" => Provenance::Computed,
                "synthetic" => {
                    any_synthetic = true;
                    Provenance::Synthetic
                }
                other => {
                    return Err(Error::Format {
                        line: line_no,
                        reason: format!("unknown provenance `{other}`"),
                    });
                }
            };
            if !(beta > 0.0 && beta < 1.0) {
                return Err(Error::Format {
                    line: line_no,
                    reason: format!("beta = {beta} outside (0, 1)"),
                });
            }
            zeros.push(NontrivialZero {
                gamma,
                beta,
                multiplicity,
                provenance,
            });
        }
        if zeros.len() != count {
            return Err(Error::Format {
                line: 1,
                reason: format!("count={count} but {} zero lines", zeros.len()),
            });
        }
        let mode = if any_synthetic {
            CatalogMode::Hypothesis
        } else {
            CatalogMode::Certified
        };
        ZeroCatalog::from_parts(zeros, certified, mode)
    }
}

/// Owned (beta, gamma) pairs plus coverage, from which a `ZeroWindow`
/// can be borrowed for the zeta operations.
pub struct WindowData {
    pairs: Vec<(f64, f64)>,
    coverage: Option<(f64, f64)>,
}

impl WindowData {
    pub fn from_catalog(catalog: &ZeroCatalog) -> WindowData {
        let eff_lo = if catalog.certified.0 <= 14.01 {
            0.0
        } else {
            catalog.certified.0
        };
        WindowData {
            pairs: catalog.window_pairs(),
            coverage: Some((eff_lo, catalog.certified.1)),
        }
    }

    pub fn window(&self) -> ZeroWindow<'_> {
        ZeroWindow::new(&self.pairs, self.coverage)
    }
}
