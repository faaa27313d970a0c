//! Subspaces of the state space when the base ring is a field.

use std::sync::Arc;

use super::linalg::{mat_mul, mat_vec, nullspace, rref};
use crate::config::Context;
use crate::error::{Error, Result};
use crate::freemod::ModuleElement;
use crate::geocontrol::StateSubmodule;
use crate::polyring::{Coeff, Polynomial, RingSpec};

/// A subspace of F^n held in reduced row echelon form, its canonical
/// fingerprint; equality of subspaces is equality of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ring: Arc<RingSpec>,
    ambient: usize,
    basis: Vec<Vec<Coeff>>,
}

impl Subspace {
    pub fn from_vectors(
        ring: &Arc<RingSpec>,
        ambient: usize,
        vectors: Vec<Vec<Coeff>>,
    ) -> Result<Self> {
        if !ring.is_field_base() {
            return Err(Error::NotAField(ring.to_string()));
        }
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::Dimension(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
        }
        Ok(Subspace { ring: Arc::clone(ring), ambient, basis: rref(ring, vectors) })
    }

    pub fn zero(ring: &Arc<RingSpec>, ambient: usize) -> Result<Self> {
        Self::from_vectors(ring, ambient, Vec::new())
    }

    pub fn full(ring: &Arc<RingSpec>, ambient: usize) -> Result<Self> {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![ring.c_zero(); ambient];
                v[i] = ring.c_one();
                v
            })
            .collect();
        Self::from_vectors(ring, ambient, basis)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Coeff>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        let ring = &self.ring;
        let mut r = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if r[pivot].is_zero() {
                continue;
            }
            let factor = r[pivot].clone();
            for c in 0..self.ambient {
                let sub = ring.c_mul(&row[c], &factor);
                r[c] = ring.c_sub(&r[c], &sub);
            }
        }
        r.iter().all(Coeff::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(&self.ring, self.ambient, vs).expect("same ambient")
    }

    /// Constraint rows C with `self = {x : C x = 0}`.
    pub fn annihilator(&self) -> Vec<Vec<Coeff>> {
        nullspace(&self.ring, &self.basis, self.ambient)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut constraints = self.annihilator();
        constraints.extend(other.annihilator());
        let basis = nullspace(&self.ring, &constraints, self.ambient);
        Subspace::from_vectors(&self.ring, self.ambient, basis).expect("same ambient")
    }

    /// Image `{A v : v in self}`.
    pub fn apply(&self, a: &[Vec<Coeff>]) -> Subspace {
        let vs = self.basis.iter().map(|v| mat_vec(&self.ring, a, v)).collect();
        Subspace::from_vectors(&self.ring, a.len(), vs).expect("consistent dimensions")
    }

    /// Full preimage `{x : A x in self}` = nullspace of (annihilator * A).
    pub fn preimage(&self, a: &[Vec<Coeff>]) -> Subspace {
        let c = self.annihilator();
        let ca = mat_mul(&self.ring, &c, a);
        let ncols = a.first().map_or(0, Vec::len);
        let basis = nullspace(&self.ring, &ca, ncols);
        Subspace::from_vectors(&self.ring, ncols, basis).expect("consistent dimensions")
    }

    /// View as a module of constant vectors, for cross-checks against the
    /// Groebner route.
    pub fn to_state_submodule(&self) -> StateSubmodule {
        let gens = self
            .basis
            .iter()
            .map(|v| {
                ModuleElement::new(
                    &self.ring,
                    v.iter().map(|c| Polynomial::constant(&self.ring, c.clone())).collect(),
                )
            })
            .collect();
        StateSubmodule::new(&self.ring, self.ambient, gens).expect("constants are y-free")
    }

    /// Extract a subspace from a state submodule over a field base ring;
    /// canonical generators of such a module are constant vectors.
    pub fn from_state_submodule(m: &StateSubmodule, ctx: &Context) -> Result<Subspace> {
        let ring = m.ring();
        if !ring.is_field_base() {
            return Err(Error::NotAField(ring.to_string()));
        }
        let canon = m.canonicalized(ctx)?;
        let mut vectors = Vec::new();
        for g in canon.generators() {
            let mut v = Vec::with_capacity(m.ambient());
            for p in g.entries() {
                if p.is_zero() {
                    v.push(ring.c_zero());
                } else if p.total_degree() == Some(0) {
                    v.push(p.terms()[0].1.clone());
                } else {
                    return Err(Error::NotAField(format!(
                        "non-constant generator entry {p} over a field base"
                    )));
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(ring, m.ambient(), vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_q() -> Arc<RingSpec> {
        RingSpec::rationals(&[]).unwrap()
    }

    fn sp(ring: &Arc<RingSpec>, vs: &[&[i64]]) -> Subspace {
        Subspace::from_vectors(
            ring,
            vs.first().map_or(0, |v| v.len()),
            vs.iter().map(|v| v.iter().map(|&x| ring.c_from_int(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn sums_intersections_preimages() {
        let ring = ring_q();
        let e1 = sp(&ring, &[&[1, 0, 0]]);
        let e12 = sp(&ring, &[&[1, 0, 0], &[0, 1, 0]]);
        let e23 = sp(&ring, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(e12.intersect(&e23), sp(&ring, &[&[0, 1, 0]]));
        assert_eq!(e1.sum(&e23).dim(), 3);
        // shift matrix: A e2 = e1, A e3 = e2
        let a: Vec<Vec<Coeff>> = vec![
            vec![ring.c_from_int(0), ring.c_from_int(1), ring.c_from_int(0)],
            vec![ring.c_from_int(0), ring.c_from_int(0), ring.c_from_int(1)],
            vec![ring.c_from_int(0), ring.c_from_int(0), ring.c_from_int(0)],
        ];
        // preimage of <e1> = {x : Ax in <e1>} = vectors with third coord free,
        // second coord free?? A(x1,x2,x3) = (x2,x3,0); in <e1> iff x3 = 0.
        let pre = e1.preimage(&a);
        assert_eq!(pre.dim(), 2);
        assert!(pre.contains(&[ring.c_from_int(5), ring.c_from_int(7), ring.c_zero()]));
        assert!(!pre.contains(&[ring.c_zero(), ring.c_zero(), ring.c_from_int(1)]));
    }

    #[test]
    fn rref_fingerprint_equality() {
        let ring = ring_q();
        let u = sp(&ring, &[&[1, 1, 0], &[0, 0, 1]]);
        let v = sp(&ring, &[&[1, 1, 1], &[0, 0, 2]]);
        assert_eq!(u, v);
        assert_ne!(u, sp(&ring, &[&[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn roundtrip_through_state_submodule() {
        let ring = ring_q();
        let u = sp(&ring, &[&[1, 2, 3], &[0, 1, 1]]);
        let m = u.to_state_submodule();
        let back = Subspace::from_state_submodule(&m, &Context::default()).unwrap();
        assert_eq!(u, back);
    }
}
