//! Exact verification of almost Poisson algebras, algebras with bracket,
//! their representations, matched pairs, D-bialgebras and operator
//! constructions, all over the rationals and given by structure constants.

pub mod error;
pub mod exact;
pub mod fixtures;
pub mod algebra;
pub mod bialgebra;
pub mod cli;
pub mod document;
pub mod linalg;
pub mod matched_pair;
pub mod operators;
pub mod report;
pub mod representation;
pub mod tensor;

pub use error::{Error, Result};
pub use exact::{Rational, Vector};
pub use linalg::LinearMap;
pub use report::{CheckReport, Identity, Scope, Violation};
pub use tensor::{StructureConstants, Tensor2};

/// Largest total dimension accepted by constructors and the loader.
pub const MAX_DIM: usize = 24;
