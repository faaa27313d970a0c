//! The two routes to the maximal reachability submodule: the pencil-kernel
//! construction and the ascending-chain procedure, plus the invariance
//! predicate they both rest on.

use super::kernel_elem::{cyclic_submodule, ControlTrajectory, KernelElement};
use super::system::{StateSubmodule, SystemPair};
use crate::config::Context;
use crate::error::{Error, Result};
use crate::freemod::{self, ModuleElement, SubmodulePresentation};

/// One cyclic summand of a kernel-method result: a verified kernel
/// element, its trajectory, the swept state vectors, and their span.
#[derive(Debug, Clone)]
pub struct CyclicPiece {
    pub kernel_element: KernelElement,
    pub trajectory: ControlTrajectory,
    pub states: Vec<ModuleElement>,
    pub submodule: StateSubmodule,
}

/// Kernel-method output: the canonical maximal reachability submodule
/// together with its cyclic decomposition.
#[derive(Debug, Clone)]
pub struct ReachabilityResult {
    pub module: StateSubmodule,
    pub pieces: Vec<CyclicPiece>,
}

/// Chain-method output with the stabilization bookkeeping.
#[derive(Debug, Clone)]
pub struct IterativeResult {
    pub module: StateSubmodule,
    pub minimal_conditioned: StateSubmodule,
    pub mstar_steps: usize,
    pub w_steps: usize,
}

impl SystemPair {
    fn check_ambient(&self, m: &StateSubmodule) -> Result<()> {
        if m.ambient() != self.state_dim() {
            return Err(Error::Dimension(format!(
                "submodule lives in dimension {}, system has {} states",
                m.ambient(),
                self.state_dim()
            )));
        }
        Ok(())
    }

    /// The submodule of kernel elements whose state components stay in M:
    /// ker[yE - A, -B] intersected with M[y] x R[y]^m. Returned with
    /// canonical (reduced-basis) generators.
    pub fn constrained_kernel(
        &self,
        m: &StateSubmodule,
        ctx: &Context,
    ) -> Result<SubmodulePresentation> {
        self.check_ambient(m)?;
        let ring = self.ring();
        let n = self.state_dim();
        let mm = self.input_dim();
        let rank = n + mm;

        // M[y] x R[y]^m is spanned by M's generators padded with zero
        // inputs together with the input unit vectors.
        let mut gens: Vec<ModuleElement> = m
            .generators()
            .iter()
            .map(|v| {
                let mut entries = v.entries().to_vec();
                entries.extend((0..mm).map(|_| crate::polyring::Polynomial::zero(ring)));
                ModuleElement::new(ring, entries)
            })
            .collect();
        for j in 0..mm {
            gens.push(ModuleElement::unit(ring, rank, n + j));
        }
        let target = SubmodulePresentation::new(ring, rank, gens);

        let kernel = self.pencil_kernel(ctx)?;
        let meet = freemod::intersect(&kernel, &target, ctx)?;
        meet.canonicalized(ctx)
    }

    /// Maximal reachability submodule of M via the pencil kernel: collect
    /// the y-coefficient vectors of the state parts of the constrained
    /// kernel's generators. The result arrives together with its cyclic
    /// decomposition, one piece per generator.
    pub fn max_reachability_kernel(
        &self,
        m: &StateSubmodule,
        ctx: &Context,
    ) -> Result<ReachabilityResult> {
        self.check_ambient(m)?;
        let ring = self.ring();
        let n = self.state_dim();
        let generators = self.constrained_kernel(m, ctx)?;

        let mut pieces = Vec::new();
        let mut all_states = Vec::new();
        for h in generators.generators() {
            let kernel_element = KernelElement::new(self, h.clone())?;
            let trajectory = kernel_element.trajectory()?;
            let f = kernel_element.state_part();
            let states: Vec<ModuleElement> =
                f.pencil_coefficient_vectors().into_iter().map(|(_, v)| v).collect();
            let submodule = cyclic_submodule(&f)?;
            all_states.extend(states.iter().cloned());
            pieces.push(CyclicPiece { kernel_element, trajectory, states, submodule });
        }
        let module = StateSubmodule::new(ring, n, all_states)?.canonicalized(ctx)?;
        Ok(ReachabilityResult { module, pieces })
    }

    /// Minimal conditioned module M_*: limit of the ascending chain
    /// S_0 = im B, S_k = im B + A(S_{k-1} ∩ M). Returns the limit and the
    /// stabilization index k with S_k = S_{k+1}.
    pub fn minimal_conditioned(
        &self,
        m: &StateSubmodule,
        ctx: &Context,
    ) -> Result<(StateSubmodule, usize)> {
        self.check_ambient(m)?;
        let im_b = self.input_image();
        let mut current = im_b.clone();
        for step in 0..ctx.chain_cap {
            let next = im_b.sum(&current.intersect(m, ctx)?.apply(self.a()));
            if !next.contains_module(&current, ctx)? {
                return Err(Error::SelfCheck("conditioned chain failed to ascend".into()));
            }
            if current.equals(&next, ctx)? {
                return Ok((current.canonicalized(ctx)?, step));
            }
            current = next;
        }
        Err(Error::IterationCapExhausted(ctx.chain_cap))
    }

    /// Maximal reachability submodule of M via the ascending chain
    /// W_0 = M_* ∩ M ∩ A^{-1}(im B),
    /// W_k = M_* ∩ M ∩ A^{-1}(W_{k-1} + im B).
    pub fn max_reachability_iterative(
        &self,
        m: &StateSubmodule,
        ctx: &Context,
    ) -> Result<IterativeResult> {
        self.check_ambient(m)?;
        let (mstar, mstar_steps) = self.minimal_conditioned(m, ctx)?;
        let im_b = self.input_image();
        let bound = mstar.intersect(m, ctx)?;

        let mut current = bound.intersect(&im_b.preimage_under(self.a(), ctx)?, ctx)?;
        for step in 0..ctx.chain_cap {
            let lifted = current.sum(&im_b).preimage_under(self.a(), ctx)?;
            let next = bound.intersect(&lifted, ctx)?;
            if !next.contains_module(&current, ctx)? {
                return Err(Error::SelfCheck("reachability chain failed to ascend".into()));
            }
            if current.equals(&next, ctx)? {
                return Ok(IterativeResult {
                    module: current.canonicalized(ctx)?,
                    minimal_conditioned: mstar,
                    mstar_steps,
                    w_steps: step,
                });
            }
            current = next;
        }
        Err(Error::IterationCapExhausted(ctx.chain_cap))
    }

    /// A U ⊆ U + im B, checked generator-wise.
    pub fn is_ab_invariant(&self, u: &StateSubmodule, ctx: &Context) -> Result<bool> {
        self.check_ambient(u)?;
        let closure = u.sum(&self.input_image());
        for g in u.generators() {
            if !closure.contains_vector(&self.a().mul_vec(g), ctx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
