//! Exact linear algebra: dense matrices, sparse structure constants,
//! subspaces in reduced row-echelon form.

mod matrix;
mod rational;
mod subspace;
mod tensor3;

pub use matrix::{solve_linear, Matrix, Solution};
pub use rational::{format_rational, parse_rational};
pub use subspace::{QuotientProjection, Subspace};
pub use tensor3::Tensor3;

use crate::scalar::Scalar;

/// Applies `m` to tensor slot `axis` of `x ∈ V_0 ⊗ ... ⊗ V_{n-1}`, where
/// `dims[i] = dim V_i`. Returns the new vector; `dims[axis]` becomes `m.rows()`.
pub fn apply_on_axis<F: Scalar>(m: &Matrix<F>, dims: &[usize], axis: usize, x: &[F]) -> Vec<F> {
    let outer: usize = dims[..axis].iter().product();
    let inner: usize = dims[axis + 1..].iter().product();
    let d = dims[axis];
    assert_eq!(m.cols(), d);
    assert_eq!(x.len(), outer * d * inner);
    let r = m.rows();
    let mut out = vec![F::zero(); outer * r * inner];
    for o in 0..outer {
        for j in 0..d {
            for i in 0..inner {
                let xv = &x[(o * d + j) * inner + i];
                if xv.is_zero() {
                    continue;
                }
                for a in 0..r {
                    let c = m.get(a, j);
                    if !c.is_zero() {
                        let t = &mut out[(o * r + a) * inner + i];
                        *t = t.clone() + c.clone() * xv.clone();
                    }
                }
            }
        }
    }
    out
}

/// Mixed-radix index of a multi-index.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// `(v_i)_i` tensored together, lexicographic with the first factor major.
pub fn tensor_vectors<F: Scalar>(vs: &[&[F]]) -> Vec<F> {
    let mut out = vec![F::one()];
    for v in vs {
        let mut next = Vec::with_capacity(out.len() * v.len());
        for a in &out {
            for b in v.iter() {
                next.push(a.clone() * b.clone());
            }
        }
        out = next;
    }
    out
}

pub fn basis_vector<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn add_scaled<F: Scalar>(acc: &mut [F], s: &F, v: &[F]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = a.clone() + s.clone() * b.clone();
        }
    }
}

pub fn is_zero_vector<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}
