//! Frozen regression baselines.
//!
//! The decomposition and bound statements carry implicit constants, so
//! their numerical checks are ratio regressions: each baseline below was
//! measured once on the fixed grid named next to it (see the
//! measure_baselines example) and committed.  Runs must stay within
//! HEADROOM of the frozen value.

/// Multiplicative slack on every frozen baseline.
pub const HEADROOM: f64 = 1.05;

/// Max of |residual| / Y_{delta_x}(2, x, t) for the upper case at
/// sigma = 2, x = 10, over the 10-point height grid
/// {50, 100, 200, 300, 500, 700, 1000, 2000, 5000, 9950}.
pub const THEOREM1_UPPER_SIGMA2_RATIO: f64 = 2.4761910167e-4;

/// |residual| / y_bound for the lower case at t = 100, x = 10,
/// sigma = 1/2 (first-run measurement on this exact input).
pub const THEOREM1_LOWER_T100_X10_RATIO: f64 = 8.8928614185e-4;

/// Max of log|zeta(1/2+it)| log log t / log t over the 200-point
/// log-spaced scan of [100, 1e4].
pub const LITTLEWOOD_RATIO_MAX: f64 = 5.7386555917e-1;

/// Max of |S(t)| log log t / log t over the same scan.
pub const S_RATIO_MAX: f64 = 2.6098939295e-1;

/// |residual| / (log t / log log t) for the corollary decomposition,
/// measured over heights {5000, 9000, 9973.3} with eps0 back-solved so
/// that x lands in [3, 4].
pub const COROLLARY_RATIO_MAX: f64 = 8.6118138788e-1;

/// Gate for a measured ratio against its frozen baseline.
pub fn within(measured: f64, frozen: f64) -> bool {
    measured.is_finite() && measured <= frozen * HEADROOM
}
