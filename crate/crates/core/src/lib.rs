//! Exact arithmetic for the affine Weyl group of type G2: Kazhdan-Lusztig
//! polynomials, canonical-basis products, the lowest two-sided cell and the
//! representation theory of the simple group of type G2.

pub mod cell;
pub mod config;
pub mod error;
pub mod kl;
pub mod laurent;
pub mod rep;
pub mod weyl;

pub use config::{OutputFormat, RunConfig};
pub use error::{Error, Result};
pub use kl::{HeckeCombination, KlConfig, KlEngine, Side};
pub use laurent::LaurentPoly;
pub use weyl::{Generator, GroupElement, RationalPoint};

/// Version string embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
