//! Exact verification toolkit for root systems, affine Weyl group linkage,
//! weight-equation searches, socle-weight multisets and the type-C Weyl
//! module chase.

pub mod cli;
pub mod error;
pub mod linkage;
pub mod numeric;
pub mod rootsys;
pub mod socle;
pub mod typec;
pub mod wsearch;

pub use error::{Error, Result};
