//! Rectangular matrices of polynomials.

use std::sync::Arc;

use super::element::ModuleElement;
use crate::polyring::{same_ring, Polynomial, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<RingSpec>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn from_rows(ring: &Arc<RingSpec>, rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            for p in row {
                assert!(same_ring(ring, p.ring()), "ring mismatch in matrix");
                data.push(p);
            }
        }
        PolyMatrix { ring: Arc::clone(ring), rows: nrows, cols: ncols, data }
    }

    pub fn from_fn<F>(ring: &Arc<RingSpec>, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let p = f(r, c);
                assert!(same_ring(ring, p.ring()), "ring mismatch in matrix");
                data.push(p);
            }
        }
        PolyMatrix { ring: Arc::clone(ring), rows, cols, data }
    }

    pub fn zero(ring: &Arc<RingSpec>, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Arc<RingSpec>, n: usize) -> Self {
        Self::from_fn(ring, n, n, |r, c| {
            if r == c {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.data[r * self.cols + c]
    }

    pub fn col(&self, c: usize) -> ModuleElement {
        ModuleElement::new(
            &self.ring,
            (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        )
    }

    pub fn cols_as_elements(&self) -> Vec<ModuleElement> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_pencil_free(&self) -> bool {
        self.data.iter().all(Polynomial::is_pencil_free)
    }

    /// Matrix-vector product; `v.rank()` must equal `self.cols()`.
    pub fn mul_vec(&self, v: &ModuleElement) -> ModuleElement {
        assert_eq!(v.rank(), self.cols, "rank mismatch in matrix-vector product");
        let entries = (0..self.rows)
            .map(|r| {
                let mut acc = Polynomial::zero(&self.ring);
                for c in 0..self.cols {
                    acc = &acc + &(self.get(r, c) * v.entry(c));
                }
                acc
            })
            .collect();
        ModuleElement::new(&self.ring, entries)
    }

    pub fn mul_mat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |r, c| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * other.get(k, c));
            }
            acc
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Matrix with the generators of a list as columns.
    pub fn from_columns(ring: &Arc<RingSpec>, rank: usize, cols: &[ModuleElement]) -> Self {
        for v in cols {
            assert_eq!(v.rank(), rank, "rank mismatch in column matrix");
        }
        PolyMatrix::from_fn(ring, rank, cols.len(), |r, c| cols[c].entry(r).clone())
    }
}
