//! Euler–Maclaurin evaluation of zeta(s) and zeta'(s).
//!
//! For s = sigma + it the partial sum over n < N is completed by the
//! integral term N^{1-s}/(s-1), the half term N^{-s}/2, and Bernoulli
//! corrections B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.  The remainder after
//! K corrections is bounded by |(s+2K+1)/(sigma+2K+1)| times the first
//! omitted correction, which is what `err_value` reports.

use num_complex::Complex64;
use std::sync::OnceLock;

const MAX_K: usize = 46;

/// zeta(m) for real m >= 2, by partial sum plus low-order tail completion.
/// Only used to bootstrap the Bernoulli table; the three tail coefficients
/// are 1/12 = B2/2!, -1/720 = B4/4!, 1/30240 = B6/6!.
fn real_zeta_ge2(m: f64) -> f64 {
    let n = 60.0_f64;
    let mut sum = 0.0;
    for j in 1..60 {
        sum += (j as f64).powf(-m);
    }
    sum += n.powf(1.0 - m) / (m - 1.0);
    sum += 0.5 * n.powf(-m);
    sum += m / 12.0 * n.powf(-m - 1.0);
    sum -= m * (m + 1.0) * (m + 2.0) / 720.0 * n.powf(-m - 3.0);
    sum += m * (m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0) / 30240.0 * n.powf(-m - 5.0);
    sum
}

/// B_{2k}/(2k)! for k = 1..=MAX_K (index 0 unused), via
/// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
pub(crate) fn bernoulli_over_factorial() -> &'static [f64; MAX_K + 1] {
    static TABLE: OnceLock<[f64; MAX_K + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; MAX_K + 1];
        let two_pi = 2.0 * std::f64::consts::PI;
        for (k, slot) in t.iter_mut().enumerate().skip(1) {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * real_zeta_ge2(2.0 * k as f64) * two_pi.powi(-2 * k as i32);
        }
        t
    })
}

pub(crate) struct EmEval {
    pub value: Complex64,
    pub deriv: Complex64,
    pub err_value: f64,
    pub err_deriv: f64,
}

/// One Euler–Maclaurin pass with a fixed truncation point `n`.
/// `max_k` caps the number of Bernoulli corrections; returns None when the
/// corrections fail to drop below `tol` while still decreasing.
fn zeta_em_fixed(s: Complex64, n: usize, max_k: usize, tol: f64) -> Option<EmEval> {
    let nf = n as f64;
    let ln_n = nf.ln();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    for j in 1..n {
        let lj = (j as f64).ln();
        let p = (-s * lj).exp();
        sum += p;
        dsum -= p * lj;
    }

    let n_pow_ms = (-s * ln_n).exp(); // N^{-s}
    let sm1 = s - 1.0;
    // N^{1-s}/(s-1) and its s-derivative
    let integral = n_pow_ms * nf / sm1;
    let d_integral = -integral * ln_n - integral / sm1;
    // N^{-s}/2 and derivative
    let half = n_pow_ms * 0.5;
    let d_half = -half * ln_n;

    let mut value = sum + integral + half;
    let mut deriv = dsum + d_integral + d_half;

    // Bernoulli corrections, built incrementally to avoid huge intermediates:
    //   term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    //   harm_k = sum_{j=0}^{2k-2} 1/(s+j)          (for the derivative)
    let b = bernoulli_over_factorial();
    let mut term = s * (b[1] / nf) * n_pow_ms;
    let mut harm = 1.0 / s;
    let mut prev_mag = f64::INFINITY;
    let inv_n2 = 1.0 / (nf * nf);
    let mut k = 1usize;
    loop {
        value += term;
        deriv += term * (harm - ln_n);
        let mag = term.norm();
        if mag > prev_mag {
            return None; // divergent regime: N too small for this s
        }
        prev_mag = mag;

        // next term
        let a0 = s + (2 * k - 1) as f64;
        let a1 = s + (2 * k) as f64;
        term = term * a0 * a1 * (b[k + 1] / b[k] * inv_n2);
        harm += 1.0 / a0 + 1.0 / a1;
        k += 1;

        if mag < tol {
            break;
        }
        if k > max_k {
            return None;
        }
    }

    // remainder bound: |(s+2k+1)/(sigma+2k+1)| * |first omitted term|
    let fudge = (s + (2 * k + 1) as f64).norm() / (s.re + (2 * k + 1) as f64);
    let err_value = term.norm() * fudge;
    let err_deriv = err_value * (ln_n + harm.norm() + 1.0);
    Some(EmEval {
        value,
        deriv,
        err_value,
        err_deriv,
    })
}

/// Euler–Maclaurin with automatic choice of the truncation point.
pub(crate) fn zeta_em(s: Complex64) -> EmEval {
    let t_abs = s.im.abs();
    let mut n = (0.26 * t_abs).ceil() as usize + 16;
    let tol = 2e-14;
    for _ in 0..5 {
        if let Some(out) = zeta_em_fixed(s, n, MAX_K, tol) {
            return out;
        }
        n = n * 3 / 2 + 8;
    }
    // Last resort: take the largest N attempted with a loose pass.
    zeta_em_fixed(s, n, MAX_K, 1e-9)
        .unwrap_or_else(|| panic!("euler-maclaurin failed to converge at s = {s} with N = {n}"))
}

/// Truncated Dirichlet series with Euler–Maclaurin tail completion,
/// restricted to sigma >= 2 where a single correction already overshoots
/// machine precision.  Kept as an internally distinct route so the two
/// methods can cross-check each other.
pub(crate) fn zeta_dirichlet_tail(s: Complex64) -> EmEval {
    debug_assert!(s.re >= 2.0);
    let n = ((40.0 * s.im.abs()) as usize).max(2000);
    zeta_em_fixed(s, n, 3, 1e-16).unwrap_or_else(|| zeta_em(s))
}
