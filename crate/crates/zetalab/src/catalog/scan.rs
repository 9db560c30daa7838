//! Zero location and completeness certification.
//!
//! Sampling anchors sit at half-Gram density (theta increments of pi/2),
//! sign changes of Z are refined by an Illinois-type false position to a
//! bracket of width 1e-9 plus one secant polish, and completeness over
//! the requested range is certified by the argument principle: the
//! number of sign changes found must equal the increment of
//! theta(t)/pi + 1 + S(t) between clean evaluation points chosen in wide
//! local gaps.  Blocks that come up short are resampled at doubled
//! density, up to 64 times the base density, before the scan gives up.

use super::{CatalogMode, NontrivialZero, ZeroCatalog};
use crate::error::{Error, Result};
use crate::zeta::{self, gram_point, theta_rs, ZeroWindow};
use rayon::prelude::*;

const REFINE_WIDTH: f64 = 1.0e-9;
const MAX_DENSITY_DOUBLINGS: usize = 6;

/// Scan [t_min, t_max] for critical-line zeros and certify completeness.
pub fn scan_zeros(t_min: f64, t_max: f64) -> Result<ZeroCatalog> {
    if !(14.0 <= t_min && t_min < t_max && t_max <= 1.0e6) {
        return Err(Error::Domain(format!(
            "scan range [{t_min}, {t_max}] outside 14 <= t_min < t_max <= 1e6"
        )));
    }
    let pad_lo = (t_min - 2.0).max(14.0);
    let pad_hi = t_max + 2.0;

    // Half-Gram sampling anchors over the padded range.
    let mut samples = anchor_grid(pad_lo, pad_hi);
    let mut values: Vec<f64> = samples.par_iter().map(|&t| zeta::z_value(t)).collect();
    let mut zeros = refine_all(&samples, &values, &[])?;

    for round in 0..=MAX_DENSITY_DOUBLINGS {
        match certify(t_min, t_max, pad_lo, pad_hi, &zeros) {
            Certification::Complete => {
                let listed: Vec<NontrivialZero> = zeros
                    .iter()
                    .copied()
                    .filter(|&g| (t_min..=t_max).contains(&g))
                    .map(NontrivialZero::computed)
                    .collect();
                return ZeroCatalog::from_parts(listed, (t_min, t_max), CatalogMode::Certified);
            }
            Certification::Excess => {
                let (lo, hi) = offending_block(&samples, &zeros);
                return Err(Error::Certification {
                    block_lo: lo,
                    block_hi: hi,
                    reason: "more sign changes than the argument-principle count".into(),
                });
            }
            Certification::Deficit | Certification::Unsettled => {
                if round == MAX_DENSITY_DOUBLINGS {
                    let (lo, hi) = offending_block(&samples, &zeros);
                    return Err(Error::Certification {
                        block_lo: lo,
                        block_hi: hi,
                        reason: format!(
                            "count still short of the argument-principle target after \
                             {}x base density",
                            1 << MAX_DENSITY_DOUBLINGS
                        ),
                    });
                }
                subdivide(&mut samples, &mut values, &zeros);
                zeros = refine_all(&samples, &values, &zeros)?;
            }
        }
    }
    unreachable!("deficit loop returns or errors within the doubling budget");
}

/// Sampling grid: theta-uniform anchors with spacing pi/2 in theta,
/// advanced by Newton on the asymptotic slope, plus both endpoints.
fn anchor_grid(lo: f64, hi: f64) -> Vec<f64> {
    let mut grid = vec![lo];
    let slope = |t: f64| 0.5 * (t / (2.0 * std::f64::consts::PI)).ln();
    let mut t = lo;
    loop {
        let step = 0.5 * std::f64::consts::PI / slope(t).max(0.05);
        t += step;
        if t >= hi {
            break;
        }
        grid.push(t);
    }
    grid.push(hi);
    grid
}

/// Find and refine every bracketed sign change, reusing zeros already
/// refined in earlier rounds when they fall inside the bracket.
fn refine_all(samples: &[f64], values: &[f64], known: &[f64]) -> Result<Vec<f64>> {
    let brackets: Vec<(f64, f64, f64, f64)> = samples
        .windows(2)
        .zip(values.windows(2))
        .filter(|(_, v)| v[0].signum() != v[1].signum())
        .map(|(s, v)| (s[0], s[1], v[0], v[1]))
        .collect();
    let mut zeros: Vec<f64> = brackets
        .par_iter()
        .map(|&(a, b, za, zb)| {
            if let Some(&g) = known.iter().find(|&&g| g > a && g < b) {
                g
            } else {
                illinois(a, b, za, zb)
            }
        })
        .collect();
    zeros.sort_by(|a, b| a.partial_cmp(b).unwrap());
    zeros.dedup_by(|a, b| (*a - *b).abs() < REFINE_WIDTH);
    Ok(zeros)
}

/// Illinois false position to bracket width REFINE_WIDTH, then one
/// secant polish.
fn illinois(mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    debug_assert!(fa.signum() != fb.signum());
    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() <= REFINE_WIDTH {
            break;
        }
        let mut c = b - fb * (b - a) / (fb - fa);
        // keep strictly interior; fall back to bisection when stuck
        let margin = 0.01 * (b - a).abs();
        if !(c > a.min(b) + margin && c < a.max(b) - margin) {
            c = 0.5 * (a + b);
        }
        let fc = zeta::z_value(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = b;
            fa = fb;
            b = c;
            fb = fc;
            side = 1;
        }
    }
    // secant polish on the final bracket
    let g = b - fb * (b - a) / (fb - fa);
    if g.is_finite() && g > a.min(b) - REFINE_WIDTH && g < a.max(b) + REFINE_WIDTH {
        g
    } else {
        0.5 * (a + b)
    }
}

enum Certification {
    Complete,
    Deficit,
    Excess,
    Unsettled,
}

/// Compare the number of found zeros against the argument-principle
/// count between clean points below t_min and above t_max.
fn certify(t_min: f64, t_max: f64, pad_lo: f64, pad_hi: f64, zeros: &[f64]) -> Certification {
    let pairs: Vec<(f64, f64)> = zeros.iter().map(|&g| (0.5, g)).collect();
    let eff_lo = if pad_lo <= 14.01 { 0.0 } else { pad_lo };
    let window = ZeroWindow::new(&pairs, Some((eff_lo, pad_hi)));

    let lo_point = match clean_point(t_min, pad_lo.max(eff_lo + 1.0).min(t_min), t_min, zeros) {
        Some(p) => p,
        None => return Certification::Unsettled,
    };
    let hi_point = match clean_point(t_max, t_max, pad_hi - 1.0, zeros) {
        Some(p) => p,
        None => return Certification::Unsettled,
    };

    let n_lo = match n_arg_rounded(lo_point, &window) {
        Some(n) => n,
        None => return Certification::Unsettled,
    };
    let n_hi = match n_arg_rounded(hi_point, &window) {
        Some(n) => n,
        None => return Certification::Unsettled,
    };
    let target = n_hi - n_lo;
    let found = zeros
        .iter()
        .filter(|&&g| g > lo_point && g < hi_point)
        .count() as i64;
    match found.cmp(&target) {
        std::cmp::Ordering::Equal => Certification::Complete,
        std::cmp::Ordering::Less => Certification::Deficit,
        std::cmp::Ordering::Greater => Certification::Excess,
    }
}

fn n_arg_rounded(t: f64, window: &ZeroWindow<'_>) -> Option<i64> {
    let n = zeta::n_arg(t, window).ok()?;
    let rounded = n.round();
    if (n - rounded).abs() <= 0.25 {
        Some(rounded as i64)
    } else {
        None
    }
}

/// A point in [lo, hi] as close to `target` as possible while keeping a
/// distance of at least 0.05 from every known zero; falls back to the
/// midpoint of the widest local gap.
fn clean_point(target: f64, lo: f64, hi: f64, zeros: &[f64]) -> Option<f64> {
    if lo > hi {
        return None;
    }
    let dist = |t: f64| -> f64 {
        let i = zeros.partition_point(|&g| g < t);
        let mut d = f64::INFINITY;
        if i < zeros.len() {
            d = d.min(zeros[i] - t);
        }
        if i > 0 {
            d = d.min(t - zeros[i - 1]);
        }
        d
    };
    let clamped = target.clamp(lo, hi);
    if dist(clamped) >= 0.05 {
        return Some(clamped);
    }
    // candidate midpoints of gaps intersecting [lo, hi]
    let mut best: Option<(f64, f64)> = None; // (distance to target, point)
    let i0 = zeros.partition_point(|&g| g < lo - 1.0);
    let i1 = zeros.partition_point(|&g| g < hi + 1.0);
    let mut cands = Vec::new();
    for w in zeros[i0..i1].windows(2) {
        cands.push(0.5 * (w[0] + w[1]));
    }
    cands.push(lo);
    cands.push(hi);
    for c in cands {
        let c = c.clamp(lo, hi);
        if dist(c) >= 0.05 {
            let score = (c - target).abs();
            if best.is_none_or(|(s, _)| score < s) {
                best = Some((score, c));
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Insert midpoints into sample intervals that contain no located zero
/// (the suspicious ones); if every interval already holds a zero, double
/// everywhere.
fn subdivide(samples: &mut Vec<f64>, values: &mut Vec<f64>, zeros: &[f64]) {
    let mut empty_intervals = Vec::new();
    for (i, w) in samples.windows(2).enumerate() {
        let has_zero = {
            let a = zeros.partition_point(|&g| g < w[0]);
            a < zeros.len() && zeros[a] <= w[1]
        };
        if !has_zero {
            empty_intervals.push(i);
        }
    }
    let targets: Vec<usize> = if empty_intervals.is_empty() {
        (0..samples.len() - 1).collect()
    } else {
        empty_intervals
    };
    let mids: Vec<f64> = targets
        .iter()
        .map(|&i| 0.5 * (samples[i] + samples[i + 1]))
        .collect();
    let mid_values: Vec<f64> = mids.par_iter().map(|&t| zeta::z_value(t)).collect();
    for ((&i, &m), &v) in targets.iter().zip(&mids).zip(&mid_values).rev() {
        samples.insert(i + 1, m);
        values.insert(i + 1, v);
    }
}

/// For error reporting: the Gram block around the widest gap between
/// consecutive located zeros.
fn offending_block(samples: &[f64], zeros: &[f64]) -> (f64, f64) {
    let mut worst = (samples[0], *samples.last().unwrap());
    let mut width = 0.0;
    for w in zeros.windows(2) {
        if w[1] - w[0] > width {
            width = w[1] - w[0];
            worst = (w[0], w[1]);
        }
    }
    // snap to the enclosing Gram interval
    let theta_lo = theta_rs(worst.0) / std::f64::consts::PI;
    let n = theta_lo.floor() as i64;
    let g_lo = gram_point(n);
    let g_hi = gram_point(n + 1);
    if g_lo < worst.1 && g_hi > worst.0 {
        (g_lo, g_hi)
    } else {
        worst
    }
}
