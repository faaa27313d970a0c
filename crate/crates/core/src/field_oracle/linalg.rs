//! Exact Gaussian elimination over the coefficient field.

use crate::polyring::{Coeff, RingSpec};

/// Canonical reduced row echelon form: pivots 1, pivot columns cleared,
/// zero rows dropped. The result is the subspace fingerprint.
pub fn rref(ring: &RingSpec, mut rows: Vec<Vec<Coeff>>) -> Vec<Vec<Coeff>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = ring.c_inv(&rows[pivot_row][col]);
        for c in col..ncols {
            rows[pivot_row][c] = ring.c_mul(&rows[pivot_row][c], &inv);
        }
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let sub = ring.c_mul(&rows[pivot_row][c], &factor);
                rows[r][c] = ring.c_sub(&rows[r][c], &sub);
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

pub fn rank(ring: &RingSpec, rows: Vec<Vec<Coeff>>) -> usize {
    rref(ring, rows).len()
}

/// Basis of `{x : M x = 0}` for an m x n matrix, one vector per free
/// column, in ascending free-column order.
pub fn nullspace(ring: &RingSpec, rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let r = rref(ring, rows.to_vec());
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| row.iter().position(|c| !c.is_zero()).expect("no zero rows after rref"))
        .collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ring.c_zero(); ncols];
        v[free] = ring.c_one();
        for (i, row) in r.iter().enumerate() {
            v[pivots[i]] = ring.c_neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

pub fn mat_mul(ring: &RingSpec, a: &[Vec<Coeff>], b: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let bcols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|arow| {
            (0..bcols)
                .map(|j| {
                    let mut acc = ring.c_zero();
                    for (k, ak) in arow.iter().enumerate() {
                        acc = ring.c_add(&acc, &ring.c_mul(ak, &b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(ring: &RingSpec, a: &[Vec<Coeff>], v: &[Coeff]) -> Vec<Coeff> {
    a.iter()
        .map(|row| {
            let mut acc = ring.c_zero();
            for (k, rk) in row.iter().enumerate() {
                acc = ring.c_add(&acc, &ring.c_mul(rk, &v[k]));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingSpec;

    #[test]
    fn rref_and_nullspace_over_q() {
        let ring = RingSpec::rationals(&[]).unwrap();
        let m = |vals: &[&[i64]]| -> Vec<Vec<Coeff>> {
            vals.iter().map(|r| r.iter().map(|&x| ring.c_from_int(x)).collect()).collect()
        };
        // rank-2 3x3 matrix
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&ring, a.clone()), 2);
        let ns = nullspace(&ring, &a, 3);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(mat_vec(&ring, &a, v).iter().all(Coeff::is_zero));
        }
    }

    #[test]
    fn nullspace_over_prime_field() {
        let ring = RingSpec::prime_field(32003, &[]).unwrap();
        let a = vec![
            vec![ring.c_from_int(1), ring.c_from_int(1)],
            vec![ring.c_from_int(2), ring.c_from_int(2)],
        ];
        let ns = nullspace(&ring, &a, 2);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&ring, &a, &ns[0]).iter().all(Coeff::is_zero));
    }
}
