//! Pencil-kernel elements and the finite control trajectories they encode.
//!
//! An element h = (f, g) of ker[yE - A, -B] satisfies (yE - A)f = Bg.
//! Reading the y-coefficients of f as states and of g as inputs produces
//! a control trajectory that starts and ends at zero; building and
//! checking that trajectory is the executable form of the claim that the
//! span of f's coefficient vectors is a reachability submodule.

use std::collections::BTreeMap;

use super::system::{StateSubmodule, SystemPair};
use crate::error::{Error, Result};
use crate::freemod::ModuleElement;

/// A verified element of the pencil kernel, with its state/input split.
#[derive(Debug, Clone)]
pub struct KernelElement {
    sys: SystemPair,
    h: ModuleElement,
}

impl KernelElement {
    /// Wraps `h` after checking the pencil identity exactly. The degree
    /// relation deg_y(g) >= deg_y(f) + 1 (for f != 0) is forced by the
    /// identity and checked as an engine invariant.
    pub fn new(sys: &SystemPair, h: ModuleElement) -> Result<Self> {
        let n = sys.state_dim();
        let m = sys.input_dim();
        if h.rank() != n + m {
            return Err(Error::Dimension(format!(
                "kernel element of rank {}, expected {}",
                h.rank(),
                n + m
            )));
        }
        if !sys.pencil_matrix().mul_vec(&h).is_zero() {
            return Err(Error::SelfCheck(
                "kernel element does not annihilate the pencil".into(),
            ));
        }
        let ke = KernelElement { sys: sys.clone(), h };
        let fdeg = ke.state_part().pencil_degree();
        let gdeg = ke.input_part().pencil_degree();
        if let Some(fd) = fdeg {
            if gdeg.map_or(true, |gd| gd < fd + 1) {
                return Err(Error::SelfCheck(
                    "input part degree is below state part degree + 1".into(),
                ));
            }
        }
        Ok(ke)
    }

    pub fn system(&self) -> &SystemPair {
        &self.sys
    }

    pub fn element(&self) -> &ModuleElement {
        &self.h
    }

    /// f: the first n entries.
    pub fn state_part(&self) -> ModuleElement {
        let n = self.sys.state_dim();
        ModuleElement::new(self.h.ring(), self.h.entries()[..n].to_vec())
    }

    /// g: the last m entries.
    pub fn input_part(&self) -> ModuleElement {
        let n = self.sys.state_dim();
        ModuleElement::new(self.h.ring(), self.h.entries()[n..].to_vec())
    }

    /// Extract the encoded trajectory: with d = deg_y(g), state x_k is the
    /// coefficient of y^{d-k} in f and input u_k the coefficient of
    /// y^{d-k} in g. All trajectory invariants are verified before the
    /// trajectory is returned.
    pub fn trajectory(&self) -> Result<ControlTrajectory> {
        let ring = self.h.ring();
        let n = self.sys.state_dim();
        let m = self.sys.input_dim();
        let f = self.state_part();
        let g = self.input_part();
        let d = g.pencil_degree().unwrap_or(0) as usize;

        let f_coeffs: BTreeMap<u16, ModuleElement> =
            f.pencil_coefficient_vectors().into_iter().collect();
        let g_coeffs: BTreeMap<u16, ModuleElement> =
            g.pencil_coefficient_vectors().into_iter().collect();
        let state_at = |k: usize| -> ModuleElement {
            if k == 0 || k > d {
                return ModuleElement::zero(ring, n);
            }
            f_coeffs.get(&((d - k) as u16)).cloned().unwrap_or_else(|| ModuleElement::zero(ring, n))
        };
        let input_at = |k: usize| -> ModuleElement {
            g_coeffs.get(&((d - k) as u16)).cloned().unwrap_or_else(|| ModuleElement::zero(ring, m))
        };

        let states: Vec<ModuleElement> = (0..=d + 1).map(state_at).collect();
        let inputs: Vec<ModuleElement> = (0..=d).map(input_at).collect();
        let traj = ControlTrajectory { states, inputs };
        traj.verify(&self.sys)?;
        Ok(traj)
    }
}

/// States x_0..x_{d+1} and inputs u_0..u_d of a finite control process:
/// x_0 = 0, x_{k+1} = A x_k + B u_k, and x_{d+1} = 0.
#[derive(Debug, Clone)]
pub struct ControlTrajectory {
    pub states: Vec<ModuleElement>,
    pub inputs: Vec<ModuleElement>,
}

impl ControlTrajectory {
    pub fn horizon(&self) -> usize {
        self.inputs.len().saturating_sub(1)
    }

    /// Check every trajectory invariant against the system.
    pub fn verify(&self, sys: &SystemPair) -> Result<()> {
        let d = self.horizon();
        if self.states.len() != d + 2 {
            return Err(Error::SelfCheck(format!(
                "trajectory has {} states for horizon {d}",
                self.states.len()
            )));
        }
        if !self.states[0].is_zero() {
            return Err(Error::SelfCheck("trajectory does not start at zero".into()));
        }
        if !self.states[d + 1].is_zero() {
            return Err(Error::SelfCheck("trajectory does not return to zero".into()));
        }
        for k in 0..=d {
            let step = &sys.a().mul_vec(&self.states[k]) + &sys.b().mul_vec(&self.inputs[k]);
            if step != self.states[k + 1] {
                return Err(Error::SelfCheck(format!(
                    "recurrence x_{} = A x_{k} + B u_{k} violated",
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

/// The submodule generated by the y-coefficient vectors of a state-space
/// polynomial vector f; for f = pi(h) with h in the pencil kernel this is
/// the cyclic submodule swept by the encoded trajectory.
pub fn cyclic_submodule(f: &ModuleElement) -> Result<StateSubmodule> {
    let gens: Vec<ModuleElement> =
        f.pencil_coefficient_vectors().into_iter().map(|(_, v)| v).collect();
    StateSubmodule::new(f.ring(), f.rank(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, RingSpec};
    use crate::samples;

    #[test]
    fn zero_kernel_element_gives_empty_trajectory() {
        let (sys, _m) = samples::example_a();
        let h = ModuleElement::zero(sys.ring(), 5);
        let ke = KernelElement::new(&sys, h).unwrap();
        let traj = ke.trajectory().unwrap();
        assert_eq!(traj.horizon(), 0);
        assert!(traj.states.iter().all(ModuleElement::is_zero));
        assert!(traj.inputs.iter().all(ModuleElement::is_zero));
    }

    #[test]
    fn example_a_reference_element() {
        let (sys, _m) = samples::example_a();
        let ring = sys.ring();
        let h = ModuleElement::new(
            ring,
            ["t", "-t", "-t", "t", "-y"]
                .iter()
                .map(|s| parse_polynomial(s, ring).unwrap())
                .collect(),
        );
        let ke = KernelElement::new(&sys, h).unwrap();
        let traj = ke.trajectory().unwrap();
        // d = 1: x_1 = (t, -t, -t) reached with u_0 = (0, -1)
        assert_eq!(traj.horizon(), 1);
        let x1 = &traj.states[1];
        assert_eq!(x1.render(Default::default()), "(t, -t, -t)");
        assert_eq!(traj.inputs[0].render(Default::default()), "(0, -1)");
        assert_eq!(traj.inputs[1].render(Default::default()), "(t, 0)");
    }

    #[test]
    fn rejects_non_kernel_elements() {
        let (sys, _m) = samples::example_a();
        let ring = sys.ring();
        let bogus = ModuleElement::new(
            ring,
            ["1", "0", "0", "0", "0"]
                .iter()
                .map(|s| parse_polynomial(s, ring).unwrap())
                .collect(),
        );
        assert!(KernelElement::new(&sys, bogus).is_err());
    }

    #[test]
    fn cyclic_submodule_of_y_free_vector() {
        let ring = RingSpec::rationals(&["t"]).unwrap();
        let f = ModuleElement::new(
            &ring,
            ["t", "-t", "-t"].iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect(),
        );
        let u = cyclic_submodule(&f).unwrap();
        assert_eq!(u.generators().len(), 1);
        assert_eq!(u.generators()[0], f);

        let zero = ModuleElement::zero(&ring, 3);
        assert!(cyclic_submodule(&zero).unwrap().generators().is_empty());
    }
}
