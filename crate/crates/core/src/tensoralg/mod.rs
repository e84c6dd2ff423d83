//! The tensor Hom-algebra `T(M)` of a Hom-object, truncated at a maximal
//! degree, with its comultiplication, counit and antipode, Hom-ideals,
//! quotients and the enveloping algebra of a Hom-Lie algebra.
//!
//! Truncation makes the product partial: `T^p ⊗ T^r -> T^{p+r}` exists only
//! when `p + r` is within the bound, and every check quantifies over such
//! tuples only.

mod graded;
mod ideal;
mod lift;

pub use graded::{GradedVector, MultiGraded};
pub use ideal::{
    check_hom_ideal, check_hopf_ideal, enveloping, enveloping_generators, ideal_generated,
    ideal_generated_in, Enveloping, GeneratorSign, HomIdeal, IdealAmbient, QuotientTensorAlgebra,
};
pub use lift::{check_lift, universal_lift, LiftTarget, TensorLift};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::coherence::{reassociate, CoherenceMap, PTree, ShuffledWord, MAX_LEAVES};
use crate::error::{mismatch, Error, Result};
use crate::homspace::{compare_on_basis, HomObject};
use crate::kernel::{basis_vector, multi_index, tensor_vectors, Matrix};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

/// Largest admissible `dim(M)^N`.
pub const MAX_COMPONENT: usize = 100_000;

#[derive(Clone, Debug)]
pub struct TruncatedTensorHomAlgebra<F> {
    base: HomObject<F>,
    max_degree: usize,
    products: BTreeMap<(usize, usize), CoherenceMap>,
    comult_cache: Vec<OnceLock<Vec<MultiGraded<F>>>>,
    antipode_cache: Vec<OnceLock<Matrix<F>>>,
}

/// `b(t^p ∨ t^r, t^{p+r})`
pub fn product_map(p: usize, r: usize) -> Result<CoherenceMap> {
    let source = ShuffledWord::plain(PTree::node(PTree::right_comb(p)?, PTree::right_comb(r)?));
    let target = ShuffledWord::plain(PTree::right_comb(p + r)?);
    reassociate(&source, &target)
}

/// Merges per-degree-tuple comparisons into one result whose witness lists
/// the degrees followed by the basis indices.
fn merge(axiom: &str, parts: impl IntoIterator<Item = (Vec<usize>, AxiomResult)>) -> AxiomResult {
    let mut checked = 0;
    for (degrees, r) in parts {
        checked += r.checked;
        if let Some(w) = r.witness {
            let mut indices = degrees.clone();
            indices.extend(w.indices);
            return AxiomResult::fail(
                axiom,
                checked,
                indices,
                format!("degrees {degrees:?}: {}", w.detail),
            );
        }
    }
    AxiomResult::pass(axiom, checked)
}

/// All `k`-tuples of degrees with sum at most `n`.
fn degree_tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in degree_tuples(k - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl<F: Scalar> TruncatedTensorHomAlgebra<F> {
    pub fn build(base: HomObject<F>, max_degree: usize) -> Result<Self> {
        let d = base.dim();
        if max_degree > MAX_LEAVES {
            return Err(Error::ResourceLimit(format!(
                "degree bound {max_degree} exceeds {MAX_LEAVES}"
            )));
        }
        if d.checked_pow(max_degree as u32)
            .is_none_or(|s| s > MAX_COMPONENT)
        {
            return Err(Error::ResourceLimit(format!(
                "{d}^{max_degree} exceeds {MAX_COMPONENT}"
            )));
        }
        let mut products = BTreeMap::new();
        for p in 1..max_degree {
            for r in 1..=max_degree - p {
                products.insert((p, r), product_map(p, r)?);
            }
        }
        Ok(TruncatedTensorHomAlgebra {
            base,
            max_degree,
            products,
            comult_cache: (0..=max_degree).map(|_| OnceLock::new()).collect(),
            antipode_cache: (0..=max_degree).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn base(&self) -> &HomObject<F> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn component_dim(&self, n: usize) -> usize {
        self.dim().pow(n as u32)
    }

    pub fn component_dims(&self) -> Vec<usize> {
        (0..=self.max_degree)
            .map(|n| self.component_dim(n))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.component_dims().iter().sum()
    }

    /// Coherence map used for the product of degrees `p, r ≥ 1`.
    pub fn product_coherence(&self, p: usize, r: usize) -> Option<&CoherenceMap> {
        self.products.get(&(p, r))
    }

    pub fn zero(&self) -> GradedVector<F> {
        GradedVector::zero(self.dim(), self.max_degree)
    }

    pub fn one(&self) -> GradedVector<F> {
        GradedVector::one(self.dim(), self.max_degree)
    }

    pub fn basis_element(&self, indices: &[usize]) -> Result<GradedVector<F>> {
        GradedVector::basis(self.dim(), self.max_degree, indices)
    }

    pub fn homogeneous(&self, degree: usize, x: Vec<F>) -> Result<GradedVector<F>> {
        GradedVector::homogeneous(self.dim(), self.max_degree, degree, x)
    }

    /// All basis tensors of degree `n`.
    pub fn degree_basis(&self, n: usize) -> Vec<GradedVector<F>> {
        let len = self.component_dim(n);
        (0..len)
            .map(|j| {
                self.homogeneous(n, basis_vector(len, j))
                    .expect("degree in range")
            })
            .collect()
    }

    /// `μ^{⊗n}` raised to the power `k`; the identity in degree 0.
    pub fn mu_apply(&self, n: usize, k: i64, x: &[F]) -> Vec<F> {
        if n == 0 || k == 0 {
            return x.to_vec();
        }
        CoherenceMap::uniform(n, k).apply(&self.base, x)
    }

    pub fn mu_matrix(&self, n: usize, k: i64) -> Matrix<F> {
        if n == 0 {
            return Matrix::identity(1);
        }
        CoherenceMap::uniform(n, k).to_matrix(&self.base)
    }

    /// `T(μ)^k`
    pub fn t_mu(&self, u: &GradedVector<F>, k: i64) -> GradedVector<F> {
        let mut out = self.zero();
        for n in u.support() {
            out.set_component(n, self.mu_apply(n, k, u.component(n)))
                .expect("size preserved");
        }
        out
    }

    fn check_element(&self, u: &GradedVector<F>) -> Result<()> {
        if u.dim() != self.dim() || u.max_degree() != self.max_degree {
            return Err(mismatch(
                "element belongs to a different truncated tensor algebra",
            ));
        }
        Ok(())
    }

    /// Product of homogeneous components of degrees `p` and `r`.
    pub fn multiply_homogeneous(&self, p: usize, x: &[F], r: usize, y: &[F]) -> Result<Vec<F>> {
        if p + r > self.max_degree {
            return Err(Error::DegreeOverflow {
                left: p,
                right: r,
                bound: self.max_degree,
            });
        }
        let scale = |v: Vec<F>, s: &F| v.into_iter().map(|a| a * s.clone()).collect();
        Ok(match (p, r) {
            (0, _) => scale(self.mu_apply(r, 1, y), &x[0]),
            (_, 0) => scale(self.mu_apply(p, 1, x), &y[0]),
            _ => self.products[&(p, r)].apply(&self.base, &tensor_vectors(&[x, y])),
        })
    }

    pub fn multiply(&self, u: &GradedVector<F>, v: &GradedVector<F>) -> Result<GradedVector<F>> {
        self.check_element(u)?;
        self.check_element(v)?;
        let mut out = self.zero();
        for p in u.support() {
            for r in v.support() {
                let z = self.multiply_homogeneous(p, u.component(p), r, v.component(r))?;
                let mut c = out.component(p + r).to_vec();
                crate::kernel::add_scaled(&mut c, &F::one(), &z);
                out.set_component(p + r, c)?;
            }
        }
        Ok(out)
    }

    /// Product in `T(M)` modulo the degrees above the bound.
    pub fn multiply_truncated(&self, u: &GradedVector<F>, v: &GradedVector<F>) -> GradedVector<F> {
        let mut out = self.zero();
        for p in u.support() {
            for r in v
                .support()
                .into_iter()
                .filter(|&r| p + r <= self.max_degree)
            {
                let z = self
                    .multiply_homogeneous(p, u.component(p), r, v.component(r))
                    .expect("in bound");
                let mut c = out.component(p + r).to_vec();
                crate::kernel::add_scaled(&mut c, &F::one(), &z);
                out.set_component(p + r, c).expect("size preserved");
            }
        }
        out
    }

    /// Matrix of `T^p ⊗ T^r -> T^{p+r}`.
    pub fn product_matrix(&self, p: usize, r: usize) -> Result<Matrix<F>> {
        let (a, b) = (self.component_dim(p), self.component_dim(r));
        let cols: Result<Vec<Vec<F>>> = (0..a * b)
            .map(|j| {
                self.multiply_homogeneous(p, &basis_vector(a, j / b), r, &basis_vector(b, j % b))
            })
            .collect();
        Ok(Matrix::from_columns(&cols?)
            .unwrap_or_else(|_| Matrix::zeros(self.component_dim(p + r), 0)))
    }

    /// Product in `T(M) ⊗̄ T(M)`: `(a⊗b)(c⊗d) = ac ⊗ bd`, each factor within
    /// the bound.
    pub fn multiply_pair(&self, u: &MultiGraded<F>, v: &MultiGraded<F>) -> Result<MultiGraded<F>> {
        if u.factors() != 2 || v.factors() != 2 {
            return Err(mismatch("expected elements of T(M) ⊗̄ T(M)"));
        }
        let mut out = MultiGraded::zero(self.dim(), 2);
        for (du, x) in u.parts() {
            for (dv, y) in v.parts() {
                let (p, q, r, s) = (du[0], du[1], dv[0], dv[1]);
                if p + r > self.max_degree {
                    return Err(Error::DegreeOverflow {
                        left: p,
                        right: r,
                        bound: self.max_degree,
                    });
                }
                if q + s > self.max_degree {
                    return Err(Error::DegreeOverflow {
                        left: q,
                        right: s,
                        bound: self.max_degree,
                    });
                }
                let (dp, dq, dr, ds) = (
                    self.component_dim(p),
                    self.component_dim(q),
                    self.component_dim(r),
                    self.component_dim(s),
                );
                for i in 0..dp {
                    let xi = &x[i * dq..(i + 1) * dq];
                    if crate::kernel::is_zero_vector(xi) {
                        continue;
                    }
                    for k in 0..dr {
                        let yk = &y[k * ds..(k + 1) * ds];
                        if crate::kernel::is_zero_vector(yk) {
                            continue;
                        }
                        let left = self.multiply_homogeneous(
                            p,
                            &basis_vector(dp, i),
                            r,
                            &basis_vector(dr, k),
                        )?;
                        let right = self.multiply_homogeneous(q, xi, s, yk)?;
                        out.add_part(vec![p + r, q + s], &tensor_vectors(&[&left, &right]));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Δ` on the basis of degree `n`, extended multiplicatively from
    /// `Δ(x) = 1 ⊗̄ μ⁻¹(x) + μ⁻¹(x) ⊗̄ 1`.
    fn comult_basis(&self, n: usize) -> &Vec<MultiGraded<F>> {
        self.comult_cache[n].get_or_init(|| {
            let d = self.dim();
            match n {
                0 => vec![MultiGraded::unit(d, 2)],
                1 => (0..d)
                    .map(|i| {
                        let x = self.base.mu_inv().column(i);
                        let mut m = MultiGraded::zero(d, 2);
                        m.add_part(vec![0, 1], &x);
                        m.add_part(vec![1, 0], &x);
                        m
                    })
                    .collect(),
                _ => {
                    let first = self.comult_basis(1);
                    let rest = self.comult_basis(n - 1);
                    let tail = self.component_dim(n - 1);
                    (0..self.component_dim(n))
                        .map(|j| {
                            self.multiply_pair(&first[j / tail], &rest[j % tail])
                                .expect("total degree stays within the bound")
                        })
                        .collect()
                }
            }
        })
    }

    pub fn comultiply(&self, u: &GradedVector<F>) -> MultiGraded<F> {
        let mut out = MultiGraded::zero(self.dim(), 2);
        for n in u.support() {
            let basis = self.comult_basis(n);
            for (c, image) in u.component(n).iter().zip(basis) {
                if !c.is_zero() {
                    out = out.add(&image.scale(c));
                }
            }
        }
        out
    }

    /// Blocks of `Δ` restricted to degree `n`, for [`MultiGraded::map_factor`].
    pub fn comult_blocks(&self, n: usize) -> Vec<(Vec<usize>, Matrix<F>)> {
        let basis = self.comult_basis(n);
        (0..=n)
            .map(|p| {
                let rows = self.component_dim(p) * self.component_dim(n - p);
                let m = Matrix::from_fn(rows, basis.len(), |r, c| {
                    basis[c]
                        .part(&[p, n - p])
                        .map_or_else(F::zero, |x| x[r].clone())
                });
                (vec![p, n - p], m)
            })
            .collect()
    }

    pub fn counit(&self, u: &GradedVector<F>) -> F {
        u.component(0)[0].clone()
    }

    /// Antipode on degree `n`: `S(x) = −x`, `S(x ⊗ w) = S(w) S(x)`.
    pub fn antipode_matrix(&self, n: usize) -> &Matrix<F> {
        self.antipode_cache[n].get_or_init(|| match n {
            0 => Matrix::identity(1),
            1 => Matrix::identity(self.dim()).scale(&-F::one()),
            _ => {
                let d = self.dim();
                let tail = self.component_dim(n - 1);
                let s_rest = self.antipode_matrix(n - 1).clone();
                let cols: Vec<Vec<F>> = (0..self.component_dim(n))
                    .map(|j| {
                        let x = basis_vector::<F>(d, j / tail)
                            .into_iter()
                            .map(|v| -v)
                            .collect::<Vec<_>>();
                        let w = s_rest.column(j % tail);
                        self.multiply_homogeneous(n - 1, &w, 1, &x)
                            .expect("degree within the bound")
                    })
                    .collect();
                Matrix::from_columns(&cols).expect("columns have equal length")
            }
        })
    }

    pub fn antipode(&self, u: &GradedVector<F>) -> GradedVector<F> {
        let mut out = self.zero();
        for n in u.support() {
            out.set_component(n, self.antipode_matrix(n).apply(u.component(n)))
                .expect("size preserved");
        }
        out
    }

    /// `m ∘ (f ⊗ g) ∘ Δ` for degree-preserving `f, g` given per degree.
    pub fn convolve(
        &self,
        f: impl Fn(usize) -> Matrix<F>,
        g: impl Fn(usize) -> Matrix<F>,
        u: &GradedVector<F>,
    ) -> GradedVector<F> {
        let delta = self.comultiply(u);
        let mapped = delta
            .map_factor(0, |n| vec![(vec![n], f(n))], 1)
            .map_factor(1, |n| vec![(vec![n], g(n))], 1);
        let mut out = self.zero();
        for (d, x) in mapped.parts() {
            let (p, q) = (d[0], d[1]);
            let m = self
                .product_matrix(p, q)
                .expect("total degree within the bound");
            let y = m.apply(x);
            let mut c = out.component(p + q).to_vec();
            crate::kernel::add_scaled(&mut c, &F::one(), &y);
            out.set_component(p + q, c).expect("size preserved");
        }
        out
    }

    fn compare_degrees(
        &self,
        axiom: &str,
        arity: usize,
        bound: usize,
        maps: impl Fn(&[usize]) -> (Matrix<F>, Matrix<F>),
    ) -> AxiomResult {
        merge(
            axiom,
            degree_tuples(arity, bound).into_iter().map(|ds| {
                let (l, r) = maps(&ds);
                let dims: Vec<usize> = ds.iter().map(|&n| self.component_dim(n)).collect();
                (ds, compare_on_basis(axiom, &l, &r, &dims))
            }),
        )
    }

    /// Hom-algebra axioms on all in-bound degree tuples, plus classical
    /// associativity of the untwisted product `T(μ)⁻¹ ∘ m`.
    pub fn check_algebra(&self) -> Report {
        let n = self.max_degree;
        let pm = |p, r| self.product_matrix(p, r).expect("in bound");
        let mu = |k: usize| self.mu_matrix(k, 1);
        let mu_inv = |k: usize| self.mu_matrix(k, -1);
        let mut r = Report::new("truncated tensor hom-algebra");
        r.push(self.compare_degrees("multiplicativity", 2, n, |ds| {
            let (p, q) = (ds[0], ds[1]);
            (&mu(p + q) * &pm(p, q), &pm(p, q) * &mu(p).kron(&mu(q)))
        }));
        r.push(self.compare_degrees("hom_associativity", 3, n, |ds| {
            let (a, b, c) = (ds[0], ds[1], ds[2]);
            (
                &pm(a, b + c) * &mu(a).kron(&pm(b, c)),
                &pm(a + b, c) * &pm(a, b).kron(&mu(c)),
            )
        }));
        r.push(self.compare_degrees("hom_unitality", 1, n, |ds| (pm(0, ds[0]), mu(ds[0]))));
        r.push(self.compare_degrees("hom_unitality_right", 1, n, |ds| (pm(ds[0], 0), mu(ds[0]))));
        r.push(self.compare_degrees("untwisted_associativity", 3, n, |ds| {
            let (a, b, c) = (ds[0], ds[1], ds[2]);
            let un = |p: usize, q: usize| &mu_inv(p + q) * &pm(p, q);
            let id = |k: usize| Matrix::identity(self.component_dim(k));
            (
                &un(a, b + c) * &id(a).kron(&un(b, c)),
                &un(a + b, c) * &un(a, b).kron(&id(c)),
            )
        }));
        r
    }

    pub(crate) fn scan_basis(
        &self,
        axiom: &str,
        bound: usize,
        mut check: impl FnMut(&GradedVector<F>) -> Option<String>,
    ) -> AxiomResult {
        let mut checked = 0;
        for n in 0..=bound {
            for (j, u) in self.degree_basis(n).iter().enumerate() {
                checked += 1;
                if let Some(detail) = check(u) {
                    let mut indices = vec![n];
                    indices.extend(multi_index(&vec![self.dim(); n], j));
                    return AxiomResult::fail(axiom, checked, indices, detail);
                }
            }
        }
        AxiomResult::pass(axiom, checked)
    }

    pub(crate) fn scan_pairs(
        &self,
        axiom: &str,
        mut check: impl FnMut(&GradedVector<F>, &GradedVector<F>) -> Option<String>,
    ) -> AxiomResult {
        let mut checked = 0;
        for ds in degree_tuples(2, self.max_degree) {
            let (bp, bq) = (self.degree_basis(ds[0]), self.degree_basis(ds[1]));
            for (i, u) in bp.iter().enumerate() {
                for (j, v) in bq.iter().enumerate() {
                    checked += 1;
                    if let Some(detail) = check(u, v) {
                        return AxiomResult::fail(axiom, checked, vec![ds[0], ds[1], i, j], detail);
                    }
                }
            }
        }
        AxiomResult::pass(axiom, checked)
    }

    fn mu_blocks(&self, k: i64) -> impl Fn(usize) -> Vec<(Vec<usize>, Matrix<F>)> + '_ {
        move |n| vec![(vec![n], self.mu_matrix(n, k))]
    }

    fn counit_blocks(n: usize) -> Vec<(Vec<usize>, Matrix<F>)> {
        if n == 0 {
            vec![(vec![], Matrix::identity(1))]
        } else {
            Vec::new()
        }
    }

    /// Hom-coalgebra axioms on every basis tensor.
    pub fn check_coalgebra(&self) -> Report {
        let n = self.max_degree;
        let mut r = Report::new("truncated tensor hom-coalgebra");
        let differs =
            |a: &MultiGraded<F>, b: &MultiGraded<F>| (a != b).then(|| format!("{a} ≠ {b}"));
        r.push(self.scan_basis("comultiplicativity", n, |u| {
            let lhs = self.comultiply(&self.t_mu(u, 1));
            let rhs = self
                .comultiply(u)
                .map_factor(0, self.mu_blocks(1), 1)
                .map_factor(1, self.mu_blocks(1), 1);
            differs(&lhs, &rhs)
        }));
        r.push(self.scan_basis("counit_invariance", n, |u| {
            (self.counit(&self.t_mu(u, 1)) != self.counit(u)).then(|| "ε∘T(μ) ≠ ε".to_string())
        }));
        r.push(self.scan_basis("hom_coassociativity", n, |u| {
            let d = self.comultiply(u);
            let lhs =
                d.map_factor(0, self.mu_blocks(-1), 1)
                    .map_factor(1, |k| self.comult_blocks(k), 2);
            let rhs =
                d.map_factor(0, |k| self.comult_blocks(k), 2)
                    .map_factor(2, self.mu_blocks(-1), 1);
            differs(&lhs, &rhs)
        }));
        r.push(self.scan_basis("counit_right", n, |u| {
            let lhs = self.comultiply(u).map_factor(1, Self::counit_blocks, 0);
            differs(&lhs, &MultiGraded::from_graded(&self.t_mu(u, -1)))
        }));
        r.push(self.scan_basis("counit_left", n, |u| {
            let lhs = self.comultiply(u).map_factor(0, Self::counit_blocks, 0);
            differs(&lhs, &MultiGraded::from_graded(&self.t_mu(u, -1)))
        }));
        r
    }

    /// Compatibility of `Δ, ε` with the product on basis pairs within the bound.
    pub fn check_bialgebra(&self) -> Report {
        let mut r = Report::new("truncated tensor hom-bialgebra");
        r.push(self.scan_pairs("comult_multiplicative", |u, v| {
            let lhs = self.comultiply(&self.multiply(u, v).expect("in bound"));
            let rhs = self
                .multiply_pair(&self.comultiply(u), &self.comultiply(v))
                .expect("in bound");
            (lhs != rhs).then(|| format!("{lhs} ≠ {rhs}"))
        }));
        let unit_ok = self.comultiply(&self.one()) == MultiGraded::unit(self.dim(), 2);
        r.push(if unit_ok {
            AxiomResult::pass("comult_unit", 1)
        } else {
            AxiomResult::fail("comult_unit", 1, vec![], "Δ(1) ≠ 1⊗1")
        });
        r.push(self.scan_pairs("counit_multiplicative", |u, v| {
            let lhs = self.counit(&self.multiply(u, v).expect("in bound"));
            (lhs != self.counit(u) * self.counit(v)).then(|| "ε(uv) ≠ ε(u)ε(v)".to_string())
        }));
        r
    }

    /// Convolution identities and the structural properties of `S`, on
    /// degrees up to `bound`.
    pub fn check_antipode(&self, bound: usize) -> Report {
        let bound = bound.min(self.max_degree);
        let mut r = Report::new("truncated tensor antipode");
        let s = |n: usize| self.antipode_matrix(n).clone();
        let id = |n: usize| Matrix::identity(self.component_dim(n));
        let unit_counit = |u: &GradedVector<F>| self.one().scale(&self.counit(u));
        r.push(self.scan_basis("left", bound, |u| {
            let lhs = self.convolve(s, id, u);
            (lhs != unit_counit(u)).then(|| format!("S∗id gives {lhs}"))
        }));
        r.push(self.scan_basis("right", bound, |u| {
            let lhs = self.convolve(id, s, u);
            (lhs != unit_counit(u)).then(|| format!("id∗S gives {lhs}"))
        }));
        r.push(self.scan_basis("commutes_with_alpha", bound, |u| {
            let (lhs, rhs) = (
                self.antipode(&self.t_mu(u, 1)),
                self.t_mu(&self.antipode(u), 1),
            );
            (lhs != rhs).then(|| format!("{lhs} ≠ {rhs}"))
        }));
        r.push(self.scan_pairs("anti_multiplicative", |u, v| {
            let lhs = self.antipode(&self.multiply(u, v).expect("in bound"));
            let rhs = self
                .multiply(&self.antipode(v), &self.antipode(u))
                .expect("in bound");
            (lhs != rhs).then(|| format!("{lhs} ≠ {rhs}"))
        }));
        r
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new(format!(
            "T(M), dim {} truncated at {}",
            self.dim(),
            self.max_degree
        ));
        r.absorb("algebra", self.check_algebra());
        r.absorb("coalgebra", self.check_coalgebra());
        r.absorb("bialgebra", self.check_bialgebra());
        r.absorb("antipode", self.check_antipode(self.max_degree));
        r
    }
}
