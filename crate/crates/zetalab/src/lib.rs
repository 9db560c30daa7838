//! zetalab: numerical machinery for log zeta in the critical strip and
//! the distribution of nontrivial zeros.
//!
//! The crate evaluates zeta(s), zeta'/zeta(s), a branch-tracked log
//! zeta(s), Z(t), theta(t), and S(t); locates and certifies nontrivial
//! zeros into persistent catalogs; computes the smoothed von Mangoldt
//! sums and the zero-neighborhood quantities that drive short-interval
//! zero-density bounds; and verifies the resulting decomposition
//! identities and bound shapes numerically on real or synthetic zero
//! data.

pub mod catalog;
pub mod error;
pub mod explicit;
pub mod report;
pub mod sizdc;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
