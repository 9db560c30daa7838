//! The smoothed von Mangoldt sums, the zero neighborhood A(x, t) with
//! its derived window quantities, and the composite bound quantities
//! tau, F_a, G_a, Y_a, E_a that control the decomposition error terms.

mod mangoldt;

pub use mangoldt::{lambda, lambda_x, PrimePower, VonMangoldtTable};

use crate::catalog::{CatalogMode, NontrivialZero, ZeroCatalog};
use crate::error::{Error, Result};
use crate::sizdc::SizdcParams;
use crate::zeta::{zeta_log_deriv, EvalPoint};
use num_complex::Complex64;
use rayon::prelude::*;

/// Smoothing parameter cap; keeps the sieve table at or below 1e6 + slack.
pub const X_MAX: f64 = 1.0e3;

/// Smoothing state: x >= 3, delta_x = 1/log x, the shift a, and
/// sigma_1 = 1/2 + a + delta_x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothingParams {
    pub x: f64,
    pub delta_x: f64,
    pub a: f64,
    pub sigma_1: f64,
}

impl SmoothingParams {
    pub fn new(x: f64, a: f64) -> Result<SmoothingParams> {
        if !(3.0..=X_MAX).contains(&x) {
            return Err(Error::Domain(format!("x = {x} outside [3, {X_MAX}]")));
        }
        if !(a > 0.0 && a <= 1.0) {
            return Err(Error::Domain(format!("a = {a} outside (0, 1]")));
        }
        let delta_x = 1.0 / x.ln();
        Ok(SmoothingParams {
            x,
            delta_x,
            a,
            sigma_1: 0.5 + a + delta_x,
        })
    }

    /// The Theorem-1 specialization a = delta_x.
    pub fn with_a_delta(x: f64) -> Result<SmoothingParams> {
        let delta_x = 1.0 / x.ln();
        SmoothingParams::new(x, delta_x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Plain,
    OverLogN,
}

/// Finite weighted Dirichlet sum over prime powers n <= x^2:
/// sum Lambda_x(n) / n^s, optionally divided by log n.
///
/// Chunked with a fixed chunk size so the summation order (hence the
/// floating-point result) is reproducible regardless of parallelism.
pub fn dirichlet_sum(
    table: &VonMangoldtTable,
    s: Complex64,
    x: f64,
    weight: Weight,
) -> Result<Complex64> {
    if !(3.0..=X_MAX).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [3, {X_MAX}]")));
    }
    let x2 = x * x;
    if (table.limit() as f64) < x2.floor() {
        return Err(Error::Domain(format!(
            "table limit {} below x^2 = {x2}",
            table.limit()
        )));
    }
    const CHUNK: usize = 4096;
    let terms: Vec<PrimePower> = table
        .prime_powers()
        .take_while(|pp| (pp.n as f64) <= x2)
        .collect();
    let partials: Vec<Complex64> = terms
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut acc = Complex64::new(0.0, 0.0);
            for pp in chunk {
                let w = lambda_x_from_lambda(pp.lambda, pp.n, x);
                if w == 0.0 {
                    continue;
                }
                let ln_n = (pp.n as f64).ln();
                let term = (-s * ln_n).exp()
                    * match weight {
                        Weight::Plain => w,
                        Weight::OverLogN => w / ln_n,
                    };
                acc += term;
            }
            acc
        })
        .collect();
    Ok(partials.into_iter().sum())
}

fn lambda_x_from_lambda(lambda_n: f64, n: u64, x: f64) -> f64 {
    let nf = n as f64;
    if nf > x * x {
        0.0
    } else if nf <= x {
        lambda_n
    } else {
        lambda_n * (x * x / nf).ln() / x.ln()
    }
}

/// The admission radius of a zero with real part beta:
/// min(t/2, x^{3 (beta - 1/2)} / sqrt(log x)).
pub fn admission_radius(beta: f64, x: f64, t: f64) -> f64 {
    (0.5 * t).min(x.powf(3.0 * (beta - 0.5)) / x.ln().sqrt())
}

/// The set A(x, t) with its maximal real part sigma_A and effective
/// window half-length L.
#[derive(Debug, Clone)]
pub struct ZeroNeighborhood {
    pub members: Vec<NontrivialZero>,
    pub sigma_a: f64,
    pub l_window: f64,
    /// A was empty: sigma_A = 1/2 and L = delta_x are sentinels, flagged
    /// in every report that consumes them.
    pub empty_sentinel: bool,
    /// Descriptor of the catalog the members came from.
    pub source: String,
}

/// Membership scan for A(x, t).
///
/// Coverage is enforced on the effective window [t - r, t + r] with r
/// the admission radius of the largest real part present anywhere in the
/// catalog; zeros farther out cannot satisfy the membership inequality,
/// so this is equivalent to requiring the full [t/2, 3t/2] and far
/// cheaper to certify.  Hypothesis-mode catalogs define their own zero
/// multiset and skip the coverage check.
pub fn build_neighborhood(catalog: &ZeroCatalog, x: f64, t: f64) -> Result<ZeroNeighborhood> {
    if !(3.0..=X_MAX).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [3, {X_MAX}]")));
    }
    if t < 14.0 {
        return Err(Error::Domain(format!("t = {t} below 14")));
    }
    let delta_x = 1.0 / x.ln();
    let beta_cap = catalog
        .zeros()
        .iter()
        .map(|z| z.beta)
        .fold(0.5f64, f64::max);
    let r_required = admission_radius(beta_cap, x, t);
    if catalog.mode() == CatalogMode::Certified
        && !catalog.covers((t - r_required).max(0.0), t + r_required)
    {
        return Err(Error::UncertifiedRange(format!(
            "neighborhood at t = {t} needs coverage of [{:.3}, {:.3}]",
            t - r_required,
            t + r_required
        )));
    }

    let members: Vec<NontrivialZero> = catalog
        .in_window(t - r_required, t + r_required)
        .iter()
        .copied()
        .filter(|z| (t - z.gamma).abs() <= admission_radius(z.beta, x, t))
        .collect();

    let source = format!(
        "catalog[{:.3},{:.3}]#{}{}",
        catalog.certified_range().0,
        catalog.certified_range().1,
        catalog.zeros().len(),
        if catalog.mode() == CatalogMode::Hypothesis {
            ";hypothesis"
        } else {
            ""
        }
    );
    if members.is_empty() {
        return Ok(ZeroNeighborhood {
            members,
            sigma_a: 0.5,
            l_window: delta_x,
            empty_sentinel: true,
            source,
        });
    }
    let sigma_a = members.iter().map(|z| z.beta).fold(f64::MIN, f64::max);
    let radius_max = members
        .iter()
        .map(|z| x.powf(3.0 * (z.beta - 0.5)) / x.ln().sqrt())
        .fold(f64::MIN, f64::max);
    Ok(ZeroNeighborhood {
        members,
        sigma_a,
        l_window: (0.5 * t).min(radius_max),
        empty_sentinel: false,
        source,
    })
}

/// tau, F_a, G_a, Y_a, E_a at one (sigma, t), with each additive
/// component of Y and E stored separately.
#[derive(Debug, Clone)]
pub struct BoundQuantities {
    pub tau: u8,
    pub f_a: f64,
    pub g_a: f64,
    pub y_a: f64,
    pub e_a: f64,
    /// |sum over n <= x^2 of Lambda_x(n) n^{-s_1}|
    pub dirichlet_s1_abs: f64,
    pub y_components: Vec<(&'static str, f64)>,
    pub e_components: Vec<(&'static str, f64)>,
}

/// Evaluate the bound quantities.  `sigma` enters only Y_a; the rest
/// depend on (x, a, t) and the condition parameters at t/2.
pub fn bound_quantities(
    table: &VonMangoldtTable,
    nbhd: &ZeroNeighborhood,
    params: &SmoothingParams,
    sizdc: &SizdcParams,
    sigma: f64,
    t: f64,
) -> Result<BoundQuantities> {
    // the lower decomposition case evaluates Y at sigma_1, which can
    // reach 1.5 + delta_x, hence the slack above 2
    if !(0.5..=2.5).contains(&sigma) {
        return Err(Error::Domain(format!("sigma = {sigma} outside [1/2, 2.5]")));
    }
    let half_t = 0.5 * t;
    let psi_half = sizdc.psi.eval(half_t)?;
    if params.a < 1.0 / psi_half || params.a > 1.0 {
        return Err(Error::Domain(format!(
            "a = {} outside [1/Psi(t/2), 1] = [{:.6}, 1]",
            params.a,
            1.0 / psi_half
        )));
    }
    let x = params.x;
    let a = params.a;
    let delta_x = params.delta_x;
    let ln_x = x.ln();
    let ln_t = t.ln();
    let phi = sizdc.phi.eval(half_t)?;
    let ln_phi = phi.ln();
    if ln_phi <= 0.0 {
        return Err(Error::Domain(format!("Phi(t/2) = {phi} must exceed 1")));
    }

    let tau: u8 = if a <= nbhd.sigma_a { 1 } else { 0 };
    let f_a = f_quantity(x, a, nbhd.sigma_a, phi)?;
    let g_a = if tau == 1 {
        (sizdc.l.eval(half_t)? + delta_x) * sizdc.v.eval(half_t)? * ln_x * ln_t
    } else {
        0.0
    };

    let s1 = Complex64::new(params.sigma_1, t);
    let dirichlet_s1_abs = dirichlet_sum(table, s1, x, Weight::Plain)?.norm();

    // Y_a(sigma, x, t)
    let y_lead = x.powf(0.5 + a - sigma) / ln_x * (dirichlet_s1_abs + ln_t);
    let y_zero_f = g_a * (x.powf(0.5 - sigma) * f_a / ln_x);
    let y_zero_mid = g_a
        * (x.powf(0.5 - sigma) / ln_x
            * (1.0 + phi.powf(-delta_x) * ln_x / ln_phi)
            * (x / phi).powf(a));
    let y_zero_phi = g_a * (phi.powf(0.5 - sigma + delta_x) / ln_phi);
    let y_components = vec![
        ("dirichlet_lead", y_lead),
        ("zero_f", y_zero_f),
        ("zero_mid", y_zero_mid),
        ("zero_phi", y_zero_phi),
    ];
    let y_a = y_lead + y_zero_f + y_zero_mid + y_zero_phi;

    // E_a(x, t)
    let e_lead = dirichlet_s1_abs + ln_t;
    let e_zero_f = g_a * x.powf(-a) * f_a;
    let e_zero_phi = g_a * phi.powf(-a) * (1.0 + ln_x / ln_phi * phi.powf(-delta_x));
    let e_components = vec![
        ("dirichlet_lead", e_lead),
        ("zero_f", e_zero_f),
        ("zero_phi", e_zero_phi),
    ];
    let e_a = e_lead + e_zero_f + e_zero_phi;

    let out = BoundQuantities {
        tau,
        f_a,
        g_a,
        y_a,
        e_a,
        dirichlet_s1_abs,
        y_components,
        e_components,
    };
    for v in [out.f_a, out.g_a, out.y_a, out.e_a] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!(
                "bound quantity left the finite nonnegative range: {v}"
            )));
        }
    }
    Ok(out)
}

/// F_a(x, t) = (x/Phi)^a * sum_{k=0}^{[(sigma_A - a) log Phi]}
/// (x^2/Phi)^{(k+1)/log Phi}, with the Gaussian bracket as floor; the
/// sum is empty (F = 0) when the bracket is negative.
fn f_quantity(x: f64, a: f64, sigma_a: f64, phi: f64) -> Result<f64> {
    let ln_phi = phi.ln();
    let m = ((sigma_a - a) * ln_phi).floor();
    if m < 0.0 {
        return Ok(0.0);
    }
    let prefix_ln = a * (x.ln() - ln_phi);
    let step_ln = (2.0 * x.ln() - ln_phi) / ln_phi;
    // overflow guard for the log-space evaluation
    let max_ln = prefix_ln + (m + 1.0) * step_ln.max(0.0);
    if max_ln > 690.0 {
        return Err(Error::Domain(format!(
            "F overflows f64 (log-scale {max_ln:.1}); shrink x or enlarge Phi"
        )));
    }
    let mut sum = 0.0;
    let mut k = 0.0;
    while k <= m {
        sum += ((k + 1.0) * step_ln).exp();
        k += 1.0;
    }
    Ok(prefix_ln.exp() * sum)
}

/// The two sides of the smoothed explicit-formula identity: the exact
/// weighted sum on the left, and on the right
/// -zeta'/zeta(s) + pole term - truncated zero sum - trivial-zero sum,
/// with an explicit majorant for the discarded zeros above the cutoff.
#[derive(Debug, Clone, Copy)]
pub struct Lemma1Rhs {
    pub value: Complex64,
    pub tail_bound: f64,
}

pub fn lemma1_rhs(
    s: Complex64,
    x: f64,
    catalog: &ZeroCatalog,
    gamma_cutoff: f64,
) -> Result<Lemma1Rhs> {
    if !(3.0..=X_MAX).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [3, {X_MAX}]")));
    }
    let tt = s.im.abs();
    if gamma_cutoff > catalog.certified_range().1 && catalog.mode() == CatalogMode::Certified {
        return Err(Error::UncertifiedRange(format!(
            "cutoff {gamma_cutoff} above certified top {}",
            catalog.certified_range().1
        )));
    }
    if catalog.certified_range().0 > 14.01 {
        return Err(Error::UncertifiedRange(
            "zero sum needs a catalog complete from the first ordinate".into(),
        ));
    }
    if gamma_cutoff < tt + 2.0 {
        return Err(Error::Domain(format!(
            "cutoff {gamma_cutoff} must exceed |t| + 2 = {}",
            tt + 2.0
        )));
    }
    // repulsion from zeros and the pole
    for z in catalog.in_window(tt - 1.0, tt + 1.0) {
        let d = (Complex64::new(z.beta, z.gamma) - Complex64::new(s.re, tt)).norm();
        if d < 1e-3 {
            return Err(Error::NearZero {
                gamma: z.gamma,
                dist: d,
                guard: 1e-3,
            });
        }
    }

    let ln_x = x.ln();
    let x_pow = |z: Complex64| (z * ln_x).exp();

    let log_deriv = zeta_log_deriv(EvalPoint::new(s.re, s.im)?)?;
    let mut value = -log_deriv.value;

    let one_minus_s = 1.0 - s;
    value += (x_pow(one_minus_s * 2.0) - x_pow(one_minus_s)) / (one_minus_s * one_minus_s * ln_x);

    // nontrivial zeros up to the cutoff, conjugates expanded on the fly
    let zero_sum: Complex64 = catalog
        .in_window(0.0, gamma_cutoff)
        .par_iter()
        .map(|z| {
            let mut acc = Complex64::new(0.0, 0.0);
            for gamma in [z.gamma, -z.gamma] {
                let rho = Complex64::new(z.beta, gamma);
                let d = rho - s;
                acc += (x_pow(d * 2.0) - x_pow(d)) / (d * d * ln_x) * z.multiplicity as f64;
            }
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    value -= zero_sum;

    // trivial zeros at -2k
    for k in 1..=200 {
        let tk = s + 2.0 * k as f64;
        let term = (x_pow(-tk * 2.0) - x_pow(-tk)) / (tk * tk * ln_x);
        value -= term;
        if term.norm() < 1e-16 {
            break;
        }
    }

    let tail = zero_tail_majorant(s.re, tt, x, gamma_cutoff) + log_deriv.abs_error_bound;
    Ok(Lemma1Rhs {
        value,
        tail_bound: tail,
    })
}

/// Majorant for the discarded zero terms with |gamma| > cutoff.
///
/// Per unit interval [m, m+1] the zero count is bounded by
/// log(m/2pi)/(2pi) + 3.2 at desk heights (Riemann-von Mangoldt density
/// plus a generous allowance for the argument term), each term by
/// (x^{2(1-sigma)} + x^{1-sigma}) / ((gamma -+ t)^2 log x), and the sum
/// over blocks by its first term plus the closed-form integral.
fn zero_tail_majorant(sigma: f64, t_abs: f64, x: f64, cutoff: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let coef = (x.powf(2.0 * (1.0 - sigma)) + x.powf(1.0 - sigma)) / x.ln();
    let mu = |u: f64| u.max(8.0).ln() / two_pi - (two_pi.ln()) / two_pi + 3.2;
    let m0 = cutoff.floor();

    // side at distance (u - t): integral of mu(u)/(u-t)^2 from m0
    let side_minus = {
        let m = m0;
        let t = t_abs;
        let log_int = (m / two_pi).ln() / (m - t)
            + if t.abs() < 1e-9 {
                1.0 / m
            } else {
                (m / (m - t)).ln() / t
            };
        mu(m) / (m - t).powi(2) + log_int / two_pi + 3.2 / (m - t)
    };
    // conjugate side at distance (u + t)
    let side_plus = {
        let m = m0;
        let t = t_abs;
        let log_int = (m / two_pi).ln() / (m + t)
            + if t.abs() < 1e-9 {
                1.0 / m
            } else {
                ((m + t) / m).ln() / t
            };
        mu(m) / (m + t).powi(2) + log_int / two_pi + 3.2 / (m + t)
    };
    coef * (side_minus + side_plus)
}
