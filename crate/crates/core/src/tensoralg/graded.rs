use std::collections::BTreeMap;
use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::kernel::{
    add_scaled, apply_on_axis, basis_vector, flat_index, is_zero_vector, multi_index, Matrix,
};
use crate::scalar::Scalar;

/// An element of `T(M)` truncated at `max_degree`; component `n` lives in
/// `M^{⊗n}` in right-comb form, degree 0 being the scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedVector<F> {
    dim: usize,
    components: Vec<Vec<F>>,
}

impl<F: Scalar> GradedVector<F> {
    pub fn zero(dim: usize, max_degree: usize) -> Self {
        let components = (0..=max_degree)
            .map(|n| vec![F::zero(); dim.pow(n as u32)])
            .collect();
        GradedVector { dim, components }
    }

    pub fn one(dim: usize, max_degree: usize) -> Self {
        let mut v = Self::zero(dim, max_degree);
        v.components[0][0] = F::one();
        v
    }

    pub fn homogeneous(dim: usize, max_degree: usize, degree: usize, x: Vec<F>) -> Result<Self> {
        if degree > max_degree {
            return Err(Error::InvalidInput(format!(
                "degree {degree} exceeds bound {max_degree}"
            )));
        }
        if x.len() != dim.pow(degree as u32) {
            return Err(mismatch(format!(
                "degree {degree} component needs {} entries",
                dim.pow(degree as u32)
            )));
        }
        let mut v = Self::zero(dim, max_degree);
        v.components[degree] = x;
        Ok(v)
    }

    /// The basis tensor `x_{i_1} ⊗ (x_{i_2} ⊗ ⋯)`.
    pub fn basis(dim: usize, max_degree: usize, indices: &[usize]) -> Result<Self> {
        let n = indices.len();
        if indices.iter().any(|&i| i >= dim) {
            return Err(Error::InvalidInput(format!(
                "basis index out of range for dimension {dim}"
            )));
        }
        let flat = flat_index(&vec![dim; n], indices);
        Self::homogeneous(dim, max_degree, n, basis_vector(dim.pow(n as u32), flat))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, n: usize) -> &[F] {
        &self.components[n]
    }

    pub fn set_component(&mut self, n: usize, x: Vec<F>) -> Result<()> {
        if n > self.max_degree() || x.len() != self.components[n].len() {
            return Err(mismatch(format!("component {n} has the wrong size")));
        }
        self.components[n] = x;
        Ok(())
    }

    pub fn components(&self) -> &[Vec<F>] {
        &self.components
    }

    /// Degrees with a nonzero component, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&n| !is_zero_vector(&self.components[n]))
            .collect()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.support().last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| is_zero_vector(c))
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.dim == other.dim && self.components.len() == other.components.len(),
            "graded vectors from different tensor algebras"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (a, b) in out.components.iter_mut().zip(&other.components) {
            add_scaled(a, &F::one(), b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        let components = self
            .components
            .iter()
            .map(|c| c.iter().map(|x| x.clone() * s.clone()).collect())
            .collect();
        GradedVector {
            dim: self.dim,
            components,
        }
    }

    /// Coordinates with the highest degree first, so that echelon pivots
    /// land on leading terms.
    pub fn to_flat(&self) -> Vec<F> {
        self.components.iter().rev().flatten().cloned().collect()
    }

    pub fn from_flat(dim: usize, max_degree: usize, flat: &[F]) -> Result<Self> {
        let total: usize = (0..=max_degree).map(|n| dim.pow(n as u32)).sum();
        if flat.len() != total {
            return Err(mismatch(format!(
                "flat vector of length {} for total dimension {total}",
                flat.len()
            )));
        }
        let mut components = vec![Vec::new(); max_degree + 1];
        let mut at = 0;
        for n in (0..=max_degree).rev() {
            let len = dim.pow(n as u32);
            components[n] = flat[at..at + len].to_vec();
            at += len;
        }
        Ok(GradedVector { dim, components })
    }
}

impl<F: Scalar> fmt::Display for GradedVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (n, c) in self.components.iter().enumerate() {
            for (flat, v) in c.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let word = if n == 0 {
                    "1".to_string()
                } else {
                    let idx = multi_index(&vec![self.dim; n], flat);
                    idx.iter()
                        .map(|i| format!("x{}", i + 1))
                        .collect::<Vec<_>>()
                        .join("⊗")
                };
                terms.push(if v.is_one() {
                    word
                } else {
                    format!("({v})·{word}")
                });
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// An element of a tensor power `T(M) ⊗̄ ⋯ ⊗̄ T(M)`, stored by multidegree.
/// Zero parts are never stored, so equality is equality of elements.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiGraded<F> {
    dim: usize,
    factors: usize,
    parts: BTreeMap<Vec<usize>, Vec<F>>,
}

impl<F: Scalar> MultiGraded<F> {
    pub fn zero(dim: usize, factors: usize) -> Self {
        MultiGraded {
            dim,
            factors,
            parts: BTreeMap::new(),
        }
    }

    pub fn from_graded(v: &GradedVector<F>) -> Self {
        let mut out = Self::zero(v.dim(), 1);
        for n in v.support() {
            out.add_part(vec![n], v.component(n));
        }
        out
    }

    /// `1 ⊗̄ ⋯ ⊗̄ 1`
    pub fn unit(dim: usize, factors: usize) -> Self {
        let mut out = Self::zero(dim, factors);
        out.add_part(vec![0; factors], &[F::one()]);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn parts(&self) -> &BTreeMap<Vec<usize>, Vec<F>> {
        &self.parts
    }

    pub fn part(&self, degrees: &[usize]) -> Option<&Vec<F>> {
        self.parts.get(degrees)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn part_len(&self, degrees: &[usize]) -> usize {
        degrees.iter().map(|&n| self.dim.pow(n as u32)).product()
    }

    pub fn add_part(&mut self, degrees: Vec<usize>, x: &[F]) {
        self.add_scaled_part(degrees, &F::one(), x);
    }

    pub fn add_scaled_part(&mut self, degrees: Vec<usize>, s: &F, x: &[F]) {
        assert_eq!(
            degrees.len(),
            self.factors,
            "multidegree has the wrong number of factors"
        );
        assert_eq!(x.len(), self.part_len(&degrees), "part has the wrong size");
        if s.is_zero() || is_zero_vector(x) {
            return;
        }
        let len = x.len();
        let entry = self
            .parts
            .entry(degrees.clone())
            .or_insert_with(|| vec![F::zero(); len]);
        add_scaled(entry, s, x);
        if is_zero_vector(entry) {
            self.parts.remove(&degrees);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, x) in &other.parts {
            out.add_part(d.clone(), x);
        }
        out
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self::zero(self.dim, self.factors);
        for (d, x) in &self.parts {
            out.add_scaled_part(d.clone(), s, x);
        }
        out
    }

    /// `a ⊗̄ b`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.factors + other.factors);
        for (d1, x) in &self.parts {
            for (d2, y) in &other.parts {
                let mut d = d1.clone();
                d.extend(d2);
                out.add_part(d, &crate::kernel::tensor_vectors(&[x, y]));
            }
        }
        out
    }

    /// Applies a linear map to factor `j`. For an input of degree `n`, `f(n)`
    /// lists the output blocks: a multidegree replacing `n` (possibly empty
    /// or of several factors) and the matrix into that block.
    pub fn map_factor(
        &self,
        j: usize,
        f: impl Fn(usize) -> Vec<(Vec<usize>, Matrix<F>)>,
        out_factors: usize,
    ) -> Self {
        let mut out = Self::zero(self.dim, self.factors - 1 + out_factors);
        for (d, x) in &self.parts {
            let dims: Vec<usize> = d.iter().map(|&n| self.dim.pow(n as u32)).collect();
            for (block, m) in f(d[j]) {
                assert_eq!(
                    block.len(),
                    out_factors,
                    "map produced a block with the wrong number of factors"
                );
                let y = apply_on_axis(&m, &dims, j, x);
                let mut nd = d[..j].to_vec();
                nd.extend(&block);
                nd.extend(&d[j + 1..]);
                out.add_part(nd, &y);
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Display for MultiGraded<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, x) in &self.parts {
            let dims: Vec<usize> = d.iter().map(|&n| self.dim.pow(n as u32)).collect();
            for (flat, v) in x.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let idx = multi_index(&dims, flat);
                let words: Vec<String> = idx
                    .iter()
                    .zip(d)
                    .map(|(&i, &n)| {
                        if n == 0 {
                            "1".to_string()
                        } else {
                            let letters = multi_index(&vec![self.dim; n], i);
                            letters
                                .iter()
                                .map(|l| format!("x{}", l + 1))
                                .collect::<Vec<_>>()
                                .join("⊗")
                        }
                    })
                    .collect();
                let word = words.join(" | ");
                terms.push(if v.is_one() {
                    word
                } else {
                    format!("({v})·{word}")
                });
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}
