//! Exact and asymptotic analysis of q-weighted non-intersecting lattice paths.

pub mod asymptotics;
pub mod error;
pub mod nilp;
pub mod qcore;
pub mod sampler;
pub mod shell;

pub use error::{Error, Result};
