//! Evaluation of zeta(s), zeta'/zeta(s), branch-tracked log zeta(s), the
//! real function Z(t), the phase theta(t), and the argument function S(t)
//! on the strip sigma in [0.4, 3], |t| <= 1e6.
//!
//! Method regions: Euler–Maclaurin everywhere, except a truncated
//! Dirichlet series for sigma >= 2 at small |t|, and the Riemann–Siegel
//! formula for Z(t) above t = 1e4.

mod em;
mod gamma;
mod rs;

pub use gamma::{gram_point, theta_rs};
pub use rs::RS_THRESHOLD;

use crate::error::{Error, Result};
use num_complex::Complex64;

pub const SIGMA_MIN: f64 = 0.4;
pub const SIGMA_MAX: f64 = 3.0;
pub const T_MAX: f64 = 1.0e6;
/// Height floor for the operations whose statements require t >= 14.
pub const T_FLOOR: f64 = 14.0;
/// Uniform repulsion guard: inputs closer than this to a catalogued
/// ordinate are rejected rather than evaluated.
pub const ZERO_GUARD: f64 = 1.0e-3;

/// A point s = sigma + it of the evaluation strip.
///
/// `min_zero_distance` is the distance from t to the nearest catalogued
/// ordinate; it starts unknown and is filled on demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub sigma: f64,
    pub t: f64,
    pub min_zero_distance: Option<f64>,
}

impl EvalPoint {
    /// Validates sigma in [0.4, 3] and |t| <= 1e6.  The t >= 14 floor is
    /// enforced by the operations whose statements need it, not here:
    /// plain zeta evaluation is also used at small heights (e.g. s = 2).
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !(SIGMA_MIN..=SIGMA_MAX).contains(&sigma) || !sigma.is_finite() {
            return Err(Error::Domain(format!(
                "sigma = {sigma} outside [{SIGMA_MIN}, {SIGMA_MAX}]"
            )));
        }
        if !t.is_finite() || t.abs() > T_MAX {
            return Err(Error::Domain(format!("|t| = {} exceeds {T_MAX}", t.abs())));
        }
        Ok(EvalPoint {
            sigma,
            t,
            min_zero_distance: None,
        })
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn with_zero_distance(mut self, window: &ZeroWindow<'_>) -> Self {
        self.min_zero_distance = Some(window.ordinate_distance(self.t.abs()));
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    EulerMaclaurin,
    RiemannSiegel,
    DirichletTail,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::RiemannSiegel => "riemann_siegel",
            Method::DirichletTail => "dirichlet_tail",
        }
    }
}

/// An evaluated value together with its truncation bound.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_bound: f64,
    pub method: Method,
}

impl EvalResult {
    fn checked(self) -> Result<Self> {
        if !(self.value.re.is_finite() && self.value.im.is_finite())
            || !self.abs_error_bound.is_finite()
            || self.abs_error_bound <= 0.0
        {
            return Err(Error::Domain(format!(
                "non-finite evaluation: {} (bound {})",
                self.value, self.abs_error_bound
            )));
        }
        Ok(self)
    }
}

/// Read-only view of the known zeros near a height, used for repulsion
/// guards and safe step control.  `pairs` holds (beta, gamma) sorted by
/// gamma > 0; `coverage` is the interval of ordinates over which the list
/// is known to be complete.
#[derive(Debug, Clone, Copy)]
pub struct ZeroWindow<'a> {
    pairs: &'a [(f64, f64)],
    coverage: Option<(f64, f64)>,
}

impl<'a> ZeroWindow<'a> {
    pub fn new(pairs: &'a [(f64, f64)], coverage: Option<(f64, f64)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].1 <= w[1].1));
        ZeroWindow { pairs, coverage }
    }

    pub fn empty() -> Self {
        ZeroWindow {
            pairs: &[],
            coverage: None,
        }
    }

    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        match self.coverage {
            Some((a, b)) => a <= lo && hi <= b,
            None => false,
        }
    }

    /// Distance from t to the nearest listed ordinate (infinite when the
    /// list is empty).
    pub fn ordinate_distance(&self, t: f64) -> f64 {
        let i = self.pairs.partition_point(|z| z.1 < t);
        let mut d = f64::INFINITY;
        if i < self.pairs.len() {
            d = d.min((self.pairs[i].1 - t).abs());
        }
        if i > 0 {
            d = d.min((t - self.pairs[i - 1].1).abs());
        }
        d
    }

    /// Lower bound on the distance from the point (sigma, t) to any zero.
    /// Within a covered window the listed zeros are all there are, so the
    /// minimum over them (capped by the window half-width) is a genuine
    /// lower bound; outside coverage only beta < 1 is trustworthy.
    fn zero_distance_lower_bound(&self, sigma: f64, t: f64) -> f64 {
        let mut d = f64::INFINITY;
        let lo = self.pairs.partition_point(|z| z.1 < t - 2.0);
        for &(beta, gamma) in &self.pairs[lo..] {
            if gamma > t + 2.0 {
                break;
            }
            d = d.min(((sigma - beta).powi(2) + (t - gamma).powi(2)).sqrt());
        }
        if self.covers(t - 1.0, t + 1.0) {
            d.min(1.0)
        } else if sigma > 1.0 {
            (sigma - 1.0).min(d)
        } else {
            f64::NAN
        }
    }
}

fn guard_check(window: &ZeroWindow<'_>, t: f64, guard: f64) -> Result<()> {
    let i = window.pairs.partition_point(|z| z.1 < t);
    for j in [i.wrapping_sub(1), i] {
        if let Some(&(_, gamma)) = window.pairs.get(j) {
            let dist = (t - gamma).abs();
            if dist < guard * (1.0 - 1e-9) {
                return Err(Error::NearZero { gamma, dist, guard });
            }
        }
    }
    Ok(())
}

/// zeta(s).
pub fn zeta(s: EvalPoint) -> Result<EvalResult> {
    let z = s.as_complex();
    if (z - 1.0).norm() < 1e-6 {
        return Err(Error::Domain("pole of zeta at s = 1".into()));
    }
    let out = if s.sigma >= 2.0 && s.t.abs() <= 250.0 {
        let e = em::zeta_dirichlet_tail(z);
        EvalResult {
            value: e.value,
            abs_error_bound: e.err_value.max(1e-16),
            method: Method::DirichletTail,
        }
    } else {
        let e = em::zeta_em(z);
        EvalResult {
            value: e.value,
            abs_error_bound: e.err_value.max(1e-16),
            method: Method::EulerMaclaurin,
        }
    };
    out.checked()
}

/// zeta'/zeta(s).  The repulsion guard is applied when a zero window is
/// supplied; bare calls are allowed away from the critical strip interior.
pub fn zeta_log_deriv(s: EvalPoint) -> Result<EvalResult> {
    zeta_log_deriv_guarded(s, &ZeroWindow::empty())
}

pub fn zeta_log_deriv_guarded(s: EvalPoint, window: &ZeroWindow<'_>) -> Result<EvalResult> {
    guard_check(window, s.t.abs(), ZERO_GUARD)?;
    let z = s.as_complex();
    if (z - 1.0).norm() < 1e-6 {
        return Err(Error::Domain("pole of zeta at s = 1".into()));
    }
    let e = em::zeta_em(z);
    let denom = e.value.norm();
    if denom < 1e-12 {
        return Err(Error::NearZero {
            gamma: s.t,
            dist: denom,
            guard: ZERO_GUARD,
        });
    }
    let value = e.deriv / e.value;
    let bound = e.err_deriv / denom + e.deriv.norm() * e.err_value / (denom * denom);
    EvalResult {
        value,
        abs_error_bound: bound.max(1e-16),
        method: Method::EulerMaclaurin,
    }
    .checked()
}

/// Z(t), real-valued: Euler–Maclaurin below RS_THRESHOLD, Riemann–Siegel
/// above it.
pub fn riemann_siegel_z(t: f64) -> Result<EvalResult> {
    if !(T_FLOOR..=T_MAX).contains(&t) {
        return Err(Error::Domain(format!(
            "t = {t} outside [{T_FLOOR}, {T_MAX}]"
        )));
    }
    let (value, err, method) = if t > RS_THRESHOLD {
        let (v, e) = rs::z_riemann_siegel(t);
        (v, e, Method::RiemannSiegel)
    } else {
        let (v, e) = rs::z_euler_maclaurin(t);
        (v, e, Method::EulerMaclaurin)
    };
    EvalResult {
        value: Complex64::new(value, 0.0),
        abs_error_bound: err.max(1e-16),
        method,
    }
    .checked()
}

/// Internal Z used by the zero scan.
pub(crate) fn z_value(t: f64) -> f64 {
    if t > RS_THRESHOLD {
        rs::z_riemann_siegel(t).0
    } else {
        rs::z_euler_maclaurin(t).0
    }
}

/// The Riemann–Siegel route irrespective of the crossover, for
/// cross-method tests.
pub fn z_riemann_siegel_raw(t: f64) -> (f64, f64) {
    rs::z_riemann_siegel(t)
}

/// The branch of log zeta obtained by continuous variation along the
/// horizontal segment from 2 + it to sigma + it, principal at 2 + it.
///
/// Steps never exceed min(0.05, half the distance to the nearest known
/// zero); a step whose principal log increment comes out suspiciously
/// large is split, and the walk aborts with BranchTrackError rather than
/// guess when splitting bottoms out.
pub fn log_zeta(s: EvalPoint, window: &ZeroWindow<'_>) -> Result<EvalResult> {
    let t = s.t.abs();
    let (value, err) = log_zeta_walk(s.sigma, t, window, ZERO_GUARD)?;
    let value = if s.t < 0.0 { value.conj() } else { value };
    EvalResult {
        value,
        abs_error_bound: err.max(1e-16),
        method: Method::EulerMaclaurin,
    }
    .checked()
}

fn zeta_plain(sigma: f64, t: f64) -> (Complex64, f64) {
    let e = em::zeta_em(Complex64::new(sigma, t));
    (e.value, e.err_value)
}

pub(crate) fn log_zeta_walk(
    sigma: f64,
    t: f64,
    window: &ZeroWindow<'_>,
    guard: f64,
) -> Result<(Complex64, f64)> {
    if !(SIGMA_MIN..=SIGMA_MAX).contains(&sigma) || !(T_FLOOR..=T_MAX).contains(&t) {
        return Err(Error::Domain(format!(
            "log zeta path endpoint ({sigma}, {t}) outside domain"
        )));
    }
    guard_check(window, t, guard)?;
    if sigma < 1.25 && !window.covers(t - 1.0, t + 1.0) {
        return Err(Error::UncertifiedRange(format!(
            "branch tracking into sigma = {sigma} needs zero coverage of [{}, {}]",
            t - 1.0,
            t + 1.0
        )));
    }

    let (z_start, e_start) = zeta_plain(2.0, t);
    let mut log = z_start.ln(); // principal; |zeta(2+it) - 1| < 0.65
    let mut err = e_start / z_start.norm();
    let mut cur = 2.0f64;
    let mut cur_val = z_start;

    let toward = if sigma >= 2.0 { 1.0 } else { -1.0 };
    let mut iterations = 0usize;
    while (sigma - cur).abs() > 1e-15 {
        iterations += 1;
        if iterations > 100_000 {
            return Err(Error::BranchTrack(format!(
                "step budget exhausted at alpha = {cur} (t = {t})"
            )));
        }
        let dist = window.zero_distance_lower_bound(cur, t);
        if dist.is_nan() {
            return Err(Error::UncertifiedRange(format!(
                "no usable zero-distance bound at alpha = {cur}, t = {t}"
            )));
        }
        if dist < guard * (1.0 - 1e-9) {
            return Err(Error::BranchTrack(format!(
                "path passes within {dist:.3e} of a zero at alpha = {cur}, t = {t}"
            )));
        }
        let step = 0.05f64.min(0.5 * dist).min((sigma - cur).abs());
        let mut next = cur + toward * step;
        if (next - sigma) * toward > 0.0 {
            next = sigma;
        }
        let (next_val, next_err) = zeta_plain(next, t);
        let dlog = (next_val / cur_val).ln();
        if dlog.im.abs() > std::f64::consts::FRAC_PI_2 {
            return Err(Error::BranchTrack(format!(
                "argument jump {:.3} over [{next}, {cur}] at t = {t}",
                dlog.im
            )));
        }
        log += dlog;
        err += next_err / next_val.norm().max(1e-300);
        cur = next;
        cur_val = next_val;
    }
    Ok((log, err))
}

/// Reference route for the same branch: quadrature of zeta'/zeta along
/// the segment, Gauss–Legendre 7-point per safety step.  Slow; used for
/// cross-validation only.
pub fn log_zeta_via_quadrature(sigma: f64, t: f64, window: &ZeroWindow<'_>) -> Result<Complex64> {
    const GL_X: [f64; 7] = [
        -0.949107912342759,
        -0.741531185599394,
        -0.405845151377397,
        0.0,
        0.405845151377397,
        0.741531185599394,
        0.949107912342759,
    ];
    const GL_W: [f64; 7] = [
        0.129484966168870,
        0.279705391489277,
        0.381830050505119,
        0.417959183673469,
        0.381830050505119,
        0.279705391489277,
        0.129484966168870,
    ];
    guard_check(window, t, ZERO_GUARD)?;
    let (z_start, _) = zeta_plain(2.0, t);
    let mut log = z_start.ln();
    let mut cur = 2.0f64;
    let toward = if sigma >= 2.0 { 1.0 } else { -1.0 };
    while (sigma - cur).abs() > 1e-15 {
        let dist = window.zero_distance_lower_bound(cur, t);
        if dist.is_nan() || dist < ZERO_GUARD * 0.999 {
            return Err(Error::BranchTrack(format!(
                "quadrature path blocked at alpha = {cur}"
            )));
        }
        let step = 0.04f64.min(0.45 * dist).min((sigma - cur).abs());
        let next = cur + toward * step;
        let mid = 0.5 * (cur + next);
        let half = 0.5 * (next - cur);
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi, wi) in GL_X.iter().zip(GL_W.iter()) {
            let alpha = mid + half * xi;
            let e = em::zeta_em(Complex64::new(alpha, t));
            acc += (e.deriv / e.value) * *wi;
        }
        log += acc * half;
        cur = next;
    }
    Ok(log)
}

/// S(t) = Im log zeta(1/2 + it) / pi along the tracked branch.
pub fn s_of_t(t: f64, window: &ZeroWindow<'_>) -> Result<f64> {
    if !(T_FLOOR..=T_MAX).contains(&t) {
        return Err(Error::Domain(format!(
            "t = {t} outside [{T_FLOOR}, {T_MAX}]"
        )));
    }
    let (log, _) = log_zeta_walk(0.5, t, window, ZERO_GUARD)?;
    Ok(log.im / std::f64::consts::PI)
}

/// theta(t)/pi + 1 + S(t); near an integer when the window data is
/// complete around t, which is what the scan certification exploits.
pub(crate) fn n_arg(t: f64, window: &ZeroWindow<'_>) -> Result<f64> {
    let s = s_of_t(t, window)?;
    Ok(theta_rs(t) / std::f64::consts::PI + 1.0 + s)
}
