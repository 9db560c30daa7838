//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the supported evaluation region.
    #[error("domain error: {0}")]
    Domain(String),

    /// An evaluation point sits too close to a catalogued zero ordinate.
    #[error("point at distance {dist:.3e} from ordinate {gamma:.9} (guard {guard:.1e})")]
    NearZero { gamma: f64, dist: f64, guard: f64 },

    /// Continuous branch tracking could not certify the absence of a zero
    /// crossing between consecutive path nodes.
    #[error("branch tracking failed: {0}")]
    BranchTrack(String),

    /// The completeness certificate for a zero scan did not close.
    #[error("certification failed in block [{block_lo:.6}, {block_hi:.6}]: {reason}")]
    Certification {
        block_lo: f64,
        block_hi: f64,
        reason: String,
    },

    /// A query reached outside the range over which the catalog is complete.
    #[error("uncertified range: {0}")]
    UncertifiedRange(String),

    /// Conflicting zero entries at the same ordinate.
    #[error("zero ordering conflict: {0}")]
    Ordering(String),

    /// Malformed catalog file or parameter string.
    #[error("format error at line {line}: {reason}")]
    Format { line: usize, reason: String },

    /// A stated hypothesis of a theorem or lemma is violated by the inputs.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A function spec fails its required monotonicity class.
    #[error("monotonicity violated: {0}")]
    Monotonicity(String),

    /// Command-line / configuration grammar errors.
    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
