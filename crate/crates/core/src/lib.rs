//! Exact symbolic computation of maximal reachability submodules.
//!
//! Given a linear discrete-time system (A, B) with entries in a
//! polynomial ring R over Q or a prime field, and a finitely generated
//! submodule M of the state module R^n, this crate computes the maximal
//! reachability submodule of M by two independent routes: a kernel
//! computation for the polynomial matrix pencil [yE - A, -B], and an
//! ascending-chain procedure. A classical field-case oracle cross-checks
//! both when the base ring has no variables.

pub mod config;
pub mod error;
pub mod field_oracle;
pub mod freemod;
pub mod geocontrol;
pub mod polyring;
pub mod samples;

pub use config::Context;
pub use error::{Error, Result};
