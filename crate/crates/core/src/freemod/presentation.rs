//! Finitely generated submodules presented by generators, with lazily
//! computed, shared, reduced Groebner bases.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::element::{ModuleElement, ModuleOrder};
use super::gb::{groebner_checked, GroebnerBasis};
use crate::config::Context;
use crate::error::Result;
use crate::polyring::{same_ring, RingSpec};

/// A submodule of R[y]^k given by a finite generator list. The reduced
/// Groebner basis under a given order is computed at most once and shared
/// across clones; it is the module-identity fingerprint.
#[derive(Debug)]
pub struct SubmodulePresentation {
    ring: Arc<RingSpec>,
    rank: usize,
    gens: Vec<ModuleElement>,
    cache: Arc<Mutex<HashMap<ModuleOrder, Arc<GroebnerBasis>>>>,
}

impl Clone for SubmodulePresentation {
    fn clone(&self) -> Self {
        SubmodulePresentation {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            gens: self.gens.clone(),
            cache: Arc::clone(&self.cache),
        }
    }
}

impl SubmodulePresentation {
    /// Normalizing constructor: zero generators and exact duplicates are
    /// dropped, input order is otherwise preserved.
    pub fn new(ring: &Arc<RingSpec>, rank: usize, gens: Vec<ModuleElement>) -> Self {
        let mut kept: Vec<ModuleElement> = Vec::with_capacity(gens.len());
        for g in gens {
            assert_eq!(g.rank(), rank, "rank mismatch in presentation");
            assert!(same_ring(ring, g.ring()), "ring mismatch in presentation");
            if g.is_zero() || kept.contains(&g) {
                continue;
            }
            kept.push(g);
        }
        SubmodulePresentation {
            ring: Arc::clone(ring),
            rank,
            gens: kept,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn zero(ring: &Arc<RingSpec>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new())
    }

    /// The full free module R[y]^rank.
    pub fn full(ring: &Arc<RingSpec>, rank: usize) -> Self {
        Self::new(ring, rank, (0..rank).map(|i| ModuleElement::unit(ring, rank, i)).collect())
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis under `ord`, cached per order.
    pub fn groebner(&self, ord: ModuleOrder, spair_cap: usize) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.get(&ord) {
                return Ok(Arc::clone(gb));
            }
        }
        let gb = Arc::new(groebner_checked(&self.gens, ord, spair_cap)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(Arc::clone(cache.entry(ord).or_insert(gb)))
    }

    /// Reduced basis under the canonical fingerprint order.
    pub fn canonical_gb(&self, ctx: &Context) -> Result<Arc<GroebnerBasis>> {
        self.groebner(ctx.canonical_order(), ctx.spair_cap)
    }

    /// Replace the generator list by the canonical reduced basis.
    pub fn canonicalized(&self, ctx: &Context) -> Result<SubmodulePresentation> {
        let gb = self.canonical_gb(ctx)?;
        Ok(SubmodulePresentation::new(&self.ring, self.rank, gb.elements.clone()))
    }
}
