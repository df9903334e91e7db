//! Exact analysis of finite-dimensional left-symmetric algebras given by structure constants.

pub mod algebra;
pub mod classification;
pub mod completeness;
pub mod decomposition;
pub mod error;
pub mod field;
pub mod graph;
pub mod ideals;

pub use algebra::{Algebra, UnitalExtension};
pub use error::{Error, Result};
