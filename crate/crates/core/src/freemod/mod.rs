//! Groebner-basis engine for finitely generated submodules of free
//! modules R[y]^k: reduction, Buchberger completion, canonical reduced
//! bases, membership, equality, syzygies, intersections, and preimages.

mod element;
mod gb;
mod matrix;
mod ops;
mod presentation;

pub use element::{ModuleElement, ModuleOrder, PositionRule};
pub use gb::{buchberger, groebner_checked, normal_form, normal_form_tracked, reduce_basis, GroebnerBasis};
pub use matrix::PolyMatrix;
pub use ops::{intersect, is_member, kernel_of_matrix, module_equal, preimage, sum};
pub use presentation::SubmodulePresentation;
