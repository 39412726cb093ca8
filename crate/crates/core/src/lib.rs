//! Triangulations of cyclic polytopes and extension of simplex families on
//! the moment curve.

pub mod counterexamples;
pub mod error;
pub mod extension;
pub mod geometry;
pub mod moment;
pub mod triangulation;

pub use error::{Error, Result};
pub use moment::Simplex;
