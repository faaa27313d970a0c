//! Systems (A, B) and finitely generated submodules of the state module.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::config::Context;
use crate::error::{Error, Result};
use crate::freemod::{self, ModuleElement, PolyMatrix, SubmodulePresentation};
use crate::polyring::{MonomialOrder, Polynomial, RingSpec};

/// A discrete-time linear system: A is n x n, B is n x m, both over the
/// y-free base ring R. The pencil kernel is cached per base order and
/// shared across clones.
#[derive(Debug, Clone)]
pub struct SystemPair {
    ring: Arc<RingSpec>,
    a: PolyMatrix,
    b: PolyMatrix,
    pencil_cache: Arc<Mutex<HashMap<MonomialOrder, Arc<SubmodulePresentation>>>>,
}

impl SystemPair {
    pub fn new(a: PolyMatrix, b: PolyMatrix) -> Result<Self> {
        let ring = Arc::clone(a.ring());
        if a.rows() != a.cols() {
            return Err(Error::Dimension(format!(
                "A must be square, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        if b.rows() != a.rows() {
            return Err(Error::Dimension(format!(
                "B must have {} rows, got {}",
                a.rows(),
                b.rows()
            )));
        }
        if !a.is_pencil_free() {
            return Err(Error::PencilVariable("system matrix A".into()));
        }
        if !b.is_pencil_free() {
            return Err(Error::PencilVariable("system matrix B".into()));
        }
        Ok(SystemPair { ring, a, b, pencil_cache: Arc::new(Mutex::new(HashMap::new())) })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn state_dim(&self) -> usize {
        self.a.rows()
    }

    pub fn input_dim(&self) -> usize {
        self.b.cols()
    }

    pub fn a(&self) -> &PolyMatrix {
        &self.a
    }

    pub fn b(&self) -> &PolyMatrix {
        &self.b
    }

    /// The polynomial matrix pencil [yE - A, -B], n x (n + m).
    pub fn pencil_matrix(&self) -> PolyMatrix {
        let n = self.state_dim();
        let m = self.input_dim();
        let ring = &self.ring;
        let y = Polynomial::variable(ring, ring.pencil_slot());
        PolyMatrix::from_fn(ring, n, n + m, |r, c| {
            if c < n {
                let mut p = -self.a.get(r, c);
                if r == c {
                    p = &p + &y;
                }
                p
            } else {
                -self.b.get(r, c - n)
            }
        })
    }

    /// Kernel of the pencil in R[y]^{n+m}; independent of any M, computed
    /// once per base order and shared.
    pub fn pencil_kernel(&self, ctx: &Context) -> Result<Arc<SubmodulePresentation>> {
        {
            let cache = self.pencil_cache.lock().unwrap();
            if let Some(k) = cache.get(&ctx.base_order) {
                return Ok(Arc::clone(k));
            }
        }
        let kernel = Arc::new(freemod::kernel_of_matrix(&self.pencil_matrix(), ctx)?);
        let mut cache = self.pencil_cache.lock().unwrap();
        Ok(Arc::clone(cache.entry(ctx.base_order).or_insert(kernel)))
    }

    /// Column module of B.
    pub fn input_image(&self) -> StateSubmodule {
        StateSubmodule::new(&self.ring, self.state_dim(), self.b.cols_as_elements())
            .expect("B columns are y-free by construction")
    }

    /// Column module of [B, AB, ..., A^{n-1}B]: the maximal reachability
    /// submodule of the full state module.
    pub fn reachable_module(&self) -> StateSubmodule {
        let n = self.state_dim();
        let mut block = self.b.clone();
        let mut gens = block.cols_as_elements();
        for _ in 1..n {
            block = self.a.mul_mat(&block);
            gens.extend(block.cols_as_elements());
        }
        StateSubmodule::new(&self.ring, n, gens).expect("powers of A keep entries y-free")
    }
}

/// A finitely generated R-submodule of R^n: generators are y-free vectors,
/// and all module arithmetic stays y-free, so the R[y] engine decides
/// R-module questions faithfully.
#[derive(Debug, Clone)]
pub struct StateSubmodule {
    ambient: usize,
    pres: SubmodulePresentation,
}

impl StateSubmodule {
    pub fn new(ring: &Arc<RingSpec>, ambient: usize, gens: Vec<ModuleElement>) -> Result<Self> {
        for g in &gens {
            if g.rank() != ambient {
                return Err(Error::Dimension(format!(
                    "state vector of rank {} in ambient dimension {ambient}",
                    g.rank()
                )));
            }
            if !g.is_pencil_free() {
                return Err(Error::PencilVariable("state submodule generator".into()));
            }
        }
        Ok(StateSubmodule { ambient, pres: SubmodulePresentation::new(ring, ambient, gens) })
    }

    pub fn zero(ring: &Arc<RingSpec>, ambient: usize) -> Self {
        StateSubmodule { ambient, pres: SubmodulePresentation::zero(ring, ambient) }
    }

    /// The full state module R^n.
    pub fn full(ring: &Arc<RingSpec>, ambient: usize) -> Self {
        StateSubmodule { ambient, pres: SubmodulePresentation::full(ring, ambient) }
    }

    /// Span of the columns of `m`.
    pub fn from_image_matrix(m: &PolyMatrix) -> Result<Self> {
        Self::new(m.ring(), m.rows(), m.cols_as_elements())
    }

    /// `{x : K x = 0}` for a y-free constraint matrix K (p x n).
    pub fn from_kernel_matrix(k: &PolyMatrix, ctx: &Context) -> Result<Self> {
        if !k.is_pencil_free() {
            return Err(Error::PencilVariable("kernel-form constraint matrix".into()));
        }
        let syz = freemod::kernel_of_matrix(k, ctx)?;
        Self::new(k.ring(), k.cols(), syz.generators().to_vec())
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.pres.ring()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[ModuleElement] {
        self.pres.generators()
    }

    pub fn presentation(&self) -> &SubmodulePresentation {
        &self.pres
    }

    /// Canonical reduced basis as the generator list; the canonical form
    /// of y-free generators stays y-free.
    pub fn canonicalized(&self, ctx: &Context) -> Result<StateSubmodule> {
        let pres = self.pres.canonicalized(ctx)?;
        debug_assert!(pres.generators().iter().all(ModuleElement::is_pencil_free));
        Ok(StateSubmodule { ambient: self.ambient, pres })
    }

    pub fn is_zero_module(&self, ctx: &Context) -> Result<bool> {
        Ok(self.pres.canonical_gb(ctx)?.is_empty())
    }

    pub fn contains_vector(&self, v: &ModuleElement, ctx: &Context) -> Result<bool> {
        freemod::is_member(v, &self.pres, ctx)
    }

    pub fn contains_module(&self, other: &StateSubmodule, ctx: &Context) -> Result<bool> {
        for g in other.generators() {
            if !self.contains_vector(g, ctx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &StateSubmodule, ctx: &Context) -> Result<bool> {
        freemod::module_equal(&self.pres, &other.pres, ctx)
    }

    pub fn sum(&self, other: &StateSubmodule) -> StateSubmodule {
        StateSubmodule { ambient: self.ambient, pres: freemod::sum(&self.pres, &other.pres) }
    }

    pub fn intersect(&self, other: &StateSubmodule, ctx: &Context) -> Result<StateSubmodule> {
        Ok(StateSubmodule {
            ambient: self.ambient,
            pres: freemod::intersect(&self.pres, &other.pres, ctx)?,
        })
    }

    /// Image `{A v : v in self}` under a y-free matrix.
    pub fn apply(&self, a: &PolyMatrix) -> StateSubmodule {
        let gens = self.generators().iter().map(|g| a.mul_vec(g)).collect();
        StateSubmodule {
            ambient: a.rows(),
            pres: SubmodulePresentation::new(self.ring(), a.rows(), gens),
        }
    }

    /// Full preimage `{x : A x in self}` under a y-free matrix.
    pub fn preimage_under(&self, a: &PolyMatrix, ctx: &Context) -> Result<StateSubmodule> {
        Ok(StateSubmodule {
            ambient: a.cols(),
            pres: freemod::preimage(a, &self.pres, ctx)?,
        })
    }
}
