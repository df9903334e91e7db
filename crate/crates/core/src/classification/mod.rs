//! The catalog of known algebras and the classification pipeline.

pub mod catalog;
pub mod classify;
pub mod enumerate;
pub mod iso;
pub mod solve;

pub use classify::{classify, ClassificationReport};
pub use iso::iso_family5;
