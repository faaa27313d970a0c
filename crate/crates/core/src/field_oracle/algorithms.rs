//! Classical invariant-subspace and reachability-subspace algorithms over
//! fields, used as an independent oracle for the two general procedures.

use super::linalg::rref;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::geocontrol::SystemPair;
use crate::polyring::Coeff;

/// Constant matrices of a field-mode system.
pub fn field_matrices(sys: &SystemPair) -> Result<(Vec<Vec<Coeff>>, Vec<Vec<Coeff>>)> {
    let ring = sys.ring();
    if !ring.is_field_base() {
        return Err(Error::NotAField(ring.to_string()));
    }
    let extract = |m: &crate::freemod::PolyMatrix| -> Result<Vec<Vec<Coeff>>> {
        let mut rows = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for c in 0..m.cols() {
                let p = m.get(r, c);
                if p.is_zero() {
                    row.push(ring.c_zero());
                } else if p.total_degree() == Some(0) {
                    row.push(p.terms()[0].1.clone());
                } else {
                    return Err(Error::NotAField(format!("non-constant entry {p}")));
                }
            }
            rows.push(row);
        }
        Ok(rows)
    };
    Ok((extract(sys.a())?, extract(sys.b())?))
}

/// Column span of B as a subspace.
pub fn input_span(sys: &SystemPair) -> Result<Subspace> {
    let ring = sys.ring();
    let (_, b) = field_matrices(sys)?;
    let n = sys.state_dim();
    let cols: Vec<Vec<Coeff>> =
        (0..sys.input_dim()).map(|j| (0..n).map(|i| b[i][j].clone()).collect()).collect();
    Subspace::from_vectors(ring, n, rref(ring, cols))
}

/// Invariant subspace algorithm: V_0 = M, V_{k+1} = M ∩ A^{-1}(V_k + im B).
/// The chain descends and stabilizes within n steps; returns the maximal
/// (A,B)-invariant subspace inside M and the stabilization index.
pub fn vstar_isa(sys: &SystemPair, m: &Subspace) -> Result<(Subspace, usize)> {
    let (a, _) = field_matrices(sys)?;
    let im_b = input_span(sys)?;
    let n = sys.state_dim();
    if m.ambient() != n {
        return Err(Error::Dimension(format!(
            "subspace lives in dimension {}, system has {n} states",
            m.ambient()
        )));
    }
    let mut current = m.clone();
    for step in 0..=n {
        let next = m.intersect(&current.sum(&im_b).preimage(&a));
        if !current.contains_subspace(&next) {
            return Err(Error::SelfCheck("invariant-subspace chain failed to descend".into()));
        }
        if next == current {
            return Ok((current, step));
        }
        current = next;
    }
    Err(Error::SelfCheck(format!(
        "invariant-subspace chain did not stabilize within {n} steps"
    )))
}

/// Reachability subspace algorithm: R_0 = 0,
/// R_{k+1} = V* ∩ (A R_k + im B). Ascends and stabilizes within n steps;
/// the limit is the maximal reachability subspace inside M.
pub fn rstar_classical(sys: &SystemPair, m: &Subspace) -> Result<(Subspace, usize)> {
    let (a, _) = field_matrices(sys)?;
    let im_b = input_span(sys)?;
    let (vstar, _) = vstar_isa(sys, m)?;
    let n = sys.state_dim();
    let mut current = Subspace::zero(sys.ring(), n)?;
    for step in 0..=n {
        let next = vstar.intersect(&current.apply(&a).sum(&im_b));
        if !next.contains_subspace(&current) {
            return Err(Error::SelfCheck("reachability-subspace chain failed to ascend".into()));
        }
        if next == current {
            return Ok((current, step));
        }
        current = next;
    }
    Err(Error::SelfCheck(format!(
        "reachability-subspace chain did not stabilize within {n} steps"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::PolyMatrix;
    use crate::polyring::{Polynomial, RingSpec};
    use crate::samples;
    use std::sync::Arc;

    fn field_sys(a: &[&[i64]], b: &[&[i64]]) -> SystemPair {
        let ring = RingSpec::rationals(&[]).unwrap();
        let build = |rows: &[&[i64]]| {
            PolyMatrix::from_rows(
                &ring,
                rows.iter()
                    .map(|r| r.iter().map(|&x| Polynomial::from_int(&ring, x)).collect())
                    .collect(),
            )
        };
        SystemPair::new(build(a), build(b)).unwrap()
    }

    fn sp(ring: &Arc<RingSpec>, vs: &[&[i64]], ambient: usize) -> Subspace {
        Subspace::from_vectors(
            ring,
            ambient,
            vs.iter().map(|v| v.iter().map(|&x| ring.c_from_int(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn vstar_of_full_space_is_full() {
        let sys = field_sys(&[&[0, 1], &[0, 0]], &[&[0], &[1]]);
        let full = Subspace::full(sys.ring(), 2).unwrap();
        let (v, steps) = vstar_isa(&sys, &full).unwrap();
        assert!(v.is_full());
        assert!(steps <= 2);
    }

    #[test]
    fn vstar_with_full_rank_b_is_m() {
        let sys = field_sys(&[&[1, 2], &[3, 4]], &[&[1, 0], &[0, 1]]);
        let ring = sys.ring().clone();
        let m = sp(&ring, &[&[1, 1]], 2);
        let (v, _) = vstar_isa(&sys, &m).unwrap();
        assert_eq!(v, m);
    }

    #[test]
    fn vstar_nilpotent_shift_hand_iteration() {
        // A = [[0,1],[0,0]], B = 0, M = <e1>: A e1 = 0 stays in M, so M is
        // already invariant.
        let sys = field_sys(&[&[0, 1], &[0, 0]], &[&[0], &[0]]);
        let ring = sys.ring().clone();
        let m = sp(&ring, &[&[1, 0]], 2);
        let (v, _) = vstar_isa(&sys, &m).unwrap();
        assert_eq!(v, m);
    }

    #[test]
    fn rstar_zero_input_is_zero() {
        let sys = field_sys(&[&[0, 1], &[0, 0]], &[&[0], &[0]]);
        let full = Subspace::full(sys.ring(), 2).unwrap();
        let (r, _) = rstar_classical(&sys, &full).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn rstar_of_full_space_is_reachable_subspace() {
        let sys = field_sys(&[&[0, 1], &[0, 0]], &[&[0], &[1]]);
        let ctx = crate::Context::default();
        let full = Subspace::full(sys.ring(), 2).unwrap();
        let (r, steps) = rstar_classical(&sys, &full).unwrap();
        assert!(steps <= 2);
        let reach = Subspace::from_state_submodule(&sys.reachable_module(), &ctx).unwrap();
        assert_eq!(r, reach);
        assert!(r.is_full());
    }

    #[test]
    fn oracle_rejects_ring_variables() {
        let (sys, _m) = samples::example_a();
        let full = Subspace::full(&RingSpec::rationals(&[]).unwrap(), 3).unwrap();
        assert!(matches!(vstar_isa(&sys, &full), Err(Error::NotAField(_))));
    }
}
