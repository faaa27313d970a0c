//! Systems (A, B) over polynomial rings, invariance and reachability
//! predicates, and the procedures computing the maximal reachability
//! submodule of a given state submodule.

mod kernel_elem;
mod procedures;
mod system;
mod verify;

pub use kernel_elem::{cyclic_submodule, ControlTrajectory, KernelElement};
pub use procedures::{CyclicPiece, IterativeResult, ReachabilityResult};
pub use system::{StateSubmodule, SystemPair};
pub use verify::{verify_reachability_certificate, CertificateReport, Clause, ClauseCheck};
