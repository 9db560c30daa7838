//! Complex log-gamma (Stirling with argument shift) and the phase
//! function theta(t) with zeta(1/2 + it) = Z(t) e^{-i theta(t)}.

use super::em::bernoulli_over_factorial;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Principal-branch-continuous log Gamma for Re z > 0.
///
/// Shifts z up until |z| >= 14, then applies the Stirling series
/// (z - 1/2) ln z - z + ln(2 pi)/2 + sum_k B_{2k} / ((2k)(2k-1) z^{2k-1}).
/// Since Re z stays positive throughout, the imaginary part is the
/// continuous argument of Gamma along vertical lines.
pub(crate) fn ln_gamma(z0: Complex64) -> Complex64 {
    assert!(z0.re > 0.0, "ln_gamma requires Re z > 0, got {z0}");
    let mut z = z0;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < 14.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let b = bernoulli_over_factorial();
    // B_{2k}/((2k)(2k-1)) = b[k] * (2k-2)!
    let z_inv = 1.0 / z;
    let z_inv2 = z_inv * z_inv;
    let mut zp = z_inv;
    let mut fact = 1.0f64; // (2k-2)!
    let mut series = Complex64::new(0.0, 0.0);
    for (k, &bk) in b.iter().enumerate().take(13).skip(1) {
        if k > 1 {
            fact *= ((2 * k - 3) * (2 * k - 2)) as f64;
            zp *= z_inv2;
        }
        series += zp * (bk * fact);
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series + shift
}

/// Riemann–Siegel theta: theta(t) = Im ln Gamma(1/4 + it/2) - (t/2) ln pi.
/// Odd in t; theta(0) = 0.
pub fn theta_rs(t: f64) -> f64 {
    let half = ln_gamma(Complex64::new(0.25, 0.5 * t.abs())).im - 0.5 * t.abs() * PI.ln();
    if t < 0.0 {
        -half
    } else {
        half
    }
}

/// Solve theta(t) = target on the increasing branch t > 2 pi.
/// theta is strictly increasing past its minimum at t = 2 pi, so a plain
/// bisection on an expanded bracket is enough.
pub(crate) fn theta_inverse(target: f64) -> f64 {
    let lo_floor = 6.35;
    assert!(
        target > theta_rs(lo_floor),
        "theta target {target} below the increasing branch"
    );
    let mut hi = 18.0f64.max(target.abs() + 10.0);
    while theta_rs(hi) < target {
        hi *= 1.5;
    }
    let mut lo = lo_floor;
    for _ in 0..90 {
        let mid = 0.5 * (lo + hi);
        if theta_rs(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 * hi.max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Gram point g_n: the unique t > 2 pi with theta(t) = n pi, for n >= -1.
pub fn gram_point(n: i64) -> f64 {
    theta_inverse(n as f64 * PI)
}
