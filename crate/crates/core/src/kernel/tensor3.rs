use std::collections::BTreeMap;

use crate::error::{mismatch, Result};
use crate::scalar::Scalar;

use super::matrix::Matrix;

/// Sparse three-index array of structure constants. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3<F> {
    dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), F>,
}

impl<F: Scalar> Tensor3<F> {
    pub fn new(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            dims: (d1, d2, d3),
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> F {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: F) -> Result<()> {
        let (d1, d2, d3) = self.dims;
        if i >= d1 || j >= d2 || k >= d3 {
            return Err(mismatch(format!(
                "index ({i},{j},{k}) outside {d1}x{d2}x{d3}"
            )));
        }
        if c.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), c);
        }
        Ok(())
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, c: F) -> Result<()> {
        let v = self.get(i, j, k) + c;
        self.set(i, j, k, v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &F)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Reads `(i, j, k)` as `e_i ⊗ e_j -> c e_k`: a `d3 x (d1 d2)` matrix.
    pub fn to_product_matrix(&self) -> Matrix<F> {
        let (d1, d2, d3) = self.dims;
        let mut m = Matrix::zeros(d3, d1 * d2);
        for (&(i, j, k), c) in &self.entries {
            m.set(k, i * d2 + j, c.clone());
        }
        m
    }

    pub fn from_product_matrix(d1: usize, d2: usize, m: &Matrix<F>) -> Result<Self> {
        if m.cols() != d1 * d2 {
            return Err(mismatch("product matrix has wrong column count"));
        }
        let mut t = Self::new(d1, d2, m.rows());
        for k in 0..m.rows() {
            for col in 0..m.cols() {
                let c = m.get(k, col);
                if !c.is_zero() {
                    t.entries.insert((col / d2, col % d2, k), c.clone());
                }
            }
        }
        Ok(t)
    }

    /// Reads `(i, j, k)` as `e_i -> c e_j ⊗ e_k`: a `(d2 d3) x d1` matrix.
    pub fn to_coproduct_matrix(&self) -> Matrix<F> {
        let (d1, d2, d3) = self.dims;
        let mut m = Matrix::zeros(d2 * d3, d1);
        for (&(i, j, k), c) in &self.entries {
            m.set(j * d3 + k, i, c.clone());
        }
        m
    }

    pub fn from_coproduct_matrix(d2: usize, d3: usize, m: &Matrix<F>) -> Result<Self> {
        if m.rows() != d2 * d3 {
            return Err(mismatch("coproduct matrix has wrong row count"));
        }
        let mut t = Self::new(m.cols(), d2, d3);
        for row in 0..m.rows() {
            for i in 0..m.cols() {
                let c = m.get(row, i);
                if !c.is_zero() {
                    t.entries.insert((i, row / d3, row % d3), c.clone());
                }
            }
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn zero_entries_are_not_stored() {
        let mut t = Tensor3::<Q>::new(2, 2, 2);
        t.set(0, 1, 1, Q::from_int(3)).unwrap();
        t.set(0, 1, 1, Q::from_int(0)).unwrap();
        assert_eq!(t.nnz(), 0);
        assert!(t.set(2, 0, 0, Q::from_int(1)).is_err());
    }

    #[test]
    fn matrix_round_trips() {
        let mut t = Tensor3::<Q>::new(2, 3, 2);
        t.set(1, 2, 0, Q::ratio(1, 2)).unwrap();
        t.set(0, 1, 1, Q::from_int(-4)).unwrap();
        let m = t.to_product_matrix();
        assert_eq!(m.get(0, 5), &Q::ratio(1, 2));
        assert_eq!(Tensor3::from_product_matrix(2, 3, &m).unwrap(), t);
        let c = t.to_coproduct_matrix();
        assert_eq!(c.get(2 * 2, 1), &Q::ratio(1, 2));
        assert_eq!(Tensor3::from_coproduct_matrix(3, 2, &c).unwrap(), t);
    }
}
