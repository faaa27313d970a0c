//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Structural misuse (mixing rings, mismatched ranks in low-level
/// arithmetic) panics instead; those are programming errors, not inputs.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed expression text, unknown variable, negative exponent, ...
    #[error("parse error: {0}")]
    Parse(String),

    /// Inconsistent matrix/module dimensions in user-supplied data.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// The pencil variable occurred where only the base ring is allowed.
    #[error("pencil variable not allowed in {0}")]
    PencilVariable(String),

    /// The configured S-pair budget was exhausted before completion.
    #[error("s-pair cap exhausted after {0} pairs")]
    PairCapExhausted(usize),

    /// A stabilization chain exceeded the configured iteration cap.
    #[error("iteration cap exhausted after {0} steps")]
    IterationCapExhausted(usize),

    /// An always-on internal consistency check failed; this signals an
    /// engine bug, never bad user input.
    #[error("engine self-check failed: {0}")]
    SelfCheck(String),

    /// A field-only algorithm was invoked over a ring with variables.
    #[error("operation requires a field coefficient ring (no ring variables), got {0}")]
    NotAField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
