use crate::error::{mismatch, Result};
use crate::scalar::Scalar;

use super::matrix::Matrix;

/// A subspace of `F^n`, stored by its unique reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

/// Projection onto a complement of a subspace, together with a section.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientProjection<F> {
    /// `q x n` surjection whose kernel is the subspace.
    pub projection: Matrix<F>,
    /// `n x q` inclusion of the complement, `projection * section = id`.
    pub section: Matrix<F>,
    /// Ambient coordinates spanning the chosen complement.
    pub complement: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = Matrix::<F>::identity(ambient).to_rows();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows of a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.dim(), self.ambient, |r, c| self.basis[r][c].clone())
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(mismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(())
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(F::is_zero)
    }

    /// Coefficients of `v` on the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> Result<bool> {
        self.check_len(&v)?;
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = F::one() / r[p].clone();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(mismatch("subspaces live in different ambient spaces"));
        }
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(mismatch("subspaces live in different ambient spaces"));
        }
        // x = sum a_i u_i lies in `other` iff its residue modulo `other` vanishes.
        let residues: Vec<Vec<F>> = self.basis.iter().map(|u| other.reduce(u)).collect();
        let system = Matrix::from_fn(self.ambient, self.dim(), |r, c| residues[c][r].clone());
        let coeffs = system.kernel();
        let mut out = Self::zero(self.ambient);
        for a in coeffs.basis() {
            let mut x = vec![F::zero(); self.ambient];
            for (ai, u) in a.iter().zip(&self.basis) {
                if ai.is_zero() {
                    continue;
                }
                for (xi, ui) in x.iter_mut().zip(u) {
                    *xi = xi.clone() + ai.clone() * ui.clone();
                }
            }
            out.insert(x)?;
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Complement spanned by the non-pivot coordinate vectors.
    pub fn quotient_projection(&self) -> QuotientProjection<F> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..self.ambient).filter(|&c| !is_pivot[c]).collect();
        let q = complement.len();
        let mut projection = Matrix::zeros(q, self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![F::zero(); self.ambient];
            e[j] = F::one();
            let r = self.reduce(&e);
            for (row, &c) in complement.iter().enumerate() {
                projection.set(row, j, r[c].clone());
            }
        }
        let mut section = Matrix::zeros(self.ambient, q);
        for (col, &c) in complement.iter().enumerate() {
            section.set(c, col, F::one());
        }
        QuotientProjection {
            projection,
            section,
            complement,
        }
    }

    /// First basis index whose image under `m` leaves the subspace.
    pub fn invariance_witness(&self, m: &Matrix<F>) -> Option<usize> {
        self.basis.iter().position(|v| !self.contains(&m.apply(v)))
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        self.invariance_witness(m).is_none()
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix<F>) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(mismatch("map domain differs from ambient space"));
        }
        Self::span(m.rows(), self.basis.iter().map(|v| m.apply(v)).collect())
    }
}
