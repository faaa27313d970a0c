//! Independent classical algorithms valid when the base ring is a field,
//! used to validate both general procedures on field instances.

mod algorithms;
mod linalg;
mod subspace;

pub use algorithms::{field_matrices, input_span, rstar_classical, vstar_isa};
pub use linalg::{mat_mul, mat_vec, nullspace, rank, rref};
pub use subspace::Subspace;
