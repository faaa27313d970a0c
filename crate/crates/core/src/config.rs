//! Tunable knobs for the Groebner engine and the chain procedures.

use crate::freemod::{ModuleOrder, PositionRule};
use crate::polyring::MonomialOrder;

/// Resource caps and order selection threaded through every computation.
///
/// Both caps guard against implementation bugs; termination itself is
/// guaranteed over Noetherian coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Context {
    /// Base monomial order used for all Groebner runs.
    pub base_order: MonomialOrder,
    /// Maximum number of S-pairs processed in one Buchberger run.
    pub spair_cap: usize,
    /// Maximum number of steps in an ascending-chain procedure.
    pub chain_cap: usize,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            base_order: MonomialOrder::Grevlex,
            spair_cap: 1_000_000,
            chain_cap: 64,
        }
    }
}

impl Context {
    pub fn with_order(order: MonomialOrder) -> Self {
        Context { base_order: order, ..Context::default() }
    }

    /// Canonical module order: module identity (reduced-basis fingerprints,
    /// equality tests, canonical output) is always taken under this order.
    /// Term-over-position keeps reduced bases small; position elimination
    /// is used only inside the syzygy construction, where it is required.
    pub fn canonical_order(&self) -> ModuleOrder {
        ModuleOrder { base: self.base_order, rule: PositionRule::TermOverPosition }
    }
}
