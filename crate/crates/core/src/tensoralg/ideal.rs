use super::{GradedVector, LiftTarget, TruncatedTensorHomAlgebra};
use crate::error::{mismatch, Error, Result};
use crate::homalgebra::HomAlgebra;
use crate::homlie::HomLieAlgebra;
use crate::kernel::{basis_vector, Matrix, QuotientProjection, Subspace};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

/// A Hom-algebra in coordinates whose product may be partial.
pub trait IdealAmbient<F> {
    fn ambient_dim(&self) -> usize;
    fn alpha_power(&self, x: &[F], k: i64) -> Vec<F>;
    /// `None` when the product is undefined, as above a degree bound.
    fn try_multiply(&self, a: &[F], b: &[F]) -> Option<Vec<F>>;
}

impl<F: Scalar> IdealAmbient<F> for HomAlgebra<F> {
    fn ambient_dim(&self) -> usize {
        self.dim()
    }

    fn alpha_power(&self, x: &[F], k: i64) -> Vec<F> {
        self.object().mu_pow(k).apply(x)
    }

    fn try_multiply(&self, a: &[F], b: &[F]) -> Option<Vec<F>> {
        Some(self.multiply(a, b))
    }
}

impl<F: Scalar> IdealAmbient<F> for TruncatedTensorHomAlgebra<F> {
    fn ambient_dim(&self) -> usize {
        self.total_dim()
    }

    fn alpha_power(&self, x: &[F], k: i64) -> Vec<F> {
        let u = GradedVector::from_flat(self.dim(), self.max_degree(), x).expect("length");
        self.t_mu(&u, k).to_flat()
    }

    fn try_multiply(&self, a: &[F], b: &[F]) -> Option<Vec<F>> {
        let (d, n) = (self.dim(), self.max_degree());
        let u = GradedVector::from_flat(d, n, a).expect("length");
        let v = GradedVector::from_flat(d, n, b).expect("length");
        self.multiply(&u, &v).ok().map(|w| w.to_flat())
    }
}

/// An `α`-stable subspace absorbing every defined product with the ambient
/// algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HomIdeal<F> {
    space: Subspace<F>,
}

impl<F: Scalar> HomIdeal<F> {
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &[F]) -> bool {
        self.space.contains(x)
    }
}

/// Least subspace containing `generators`, closed under the automorphism and
/// under multiplication on either side by basis elements, wherever defined.
/// The generators must span an `α`-stable subspace.
pub fn ideal_generated_in<F: Scalar, A: IdealAmbient<F>>(
    a: &A,
    generators: &[Vec<F>],
) -> Result<HomIdeal<F>> {
    let n = a.ambient_dim();
    let span = Subspace::span(n, generators.to_vec())?;
    for (i, x) in generators.iter().enumerate() {
        for k in [1, -1] {
            if !span.contains(&a.alpha_power(x, k)) {
                return Err(Error::InvalidInput(format!(
                    "generator {i} leaves the span under the automorphism to the power {k}"
                )));
            }
        }
    }
    // Rows of the echelon basis with pivot in a given degree carry nothing
    // above it, so they are exactly the elements whose partial products exist.
    let mut space = span;
    let basis: Vec<Vec<F>> = (0..n).map(|j| basis_vector(n, j)).collect();
    let mut done: Vec<Vec<F>> = Vec::new();
    loop {
        let fresh: Vec<Vec<F>> = space
            .basis()
            .iter()
            .filter(|v| !done.contains(v))
            .cloned()
            .collect();
        if fresh.is_empty() {
            break;
        }
        for v in fresh {
            for e in &basis {
                for w in [a.try_multiply(e, &v), a.try_multiply(&v, e)]
                    .into_iter()
                    .flatten()
                {
                    space.insert(w)?;
                }
            }
            done.push(v);
        }
    }
    Ok(HomIdeal { space })
}

pub fn ideal_generated<F: Scalar>(
    t: &TruncatedTensorHomAlgebra<F>,
    generators: &[GradedVector<F>],
) -> Result<HomIdeal<F>> {
    for g in generators {
        if g.dim() != t.dim() || g.max_degree() != t.max_degree() {
            return Err(mismatch("generator belongs to a different tensor algebra"));
        }
    }
    let flat: Vec<Vec<F>> = generators.iter().map(GradedVector::to_flat).collect();
    ideal_generated_in(t, &flat)
}

pub fn check_hom_ideal<F: Scalar, A: IdealAmbient<F>>(a: &A, ideal: &HomIdeal<F>) -> Report {
    let n = a.ambient_dim();
    let basis = ideal.space.basis();
    let mut r = Report::new("hom-ideal");
    for (name, k) in [("alpha_stable", 1), ("alpha_inverse_stable", -1)] {
        r.push(AxiomResult::scan(
            name,
            (0..basis.len()).map(|i| vec![i]),
            |idx| {
                (!ideal.contains(&a.alpha_power(&basis[idx[0]], k)))
                    .then(|| "image leaves the ideal".to_string())
            },
        ));
    }
    for (name, left) in [("left_absorbing", true), ("right_absorbing", false)] {
        let pairs = (0..basis.len()).flat_map(|i| (0..n).map(move |j| vec![i, j]));
        r.push(AxiomResult::scan(name, pairs, |idx| {
            let e = basis_vector(n, idx[1]);
            let v = &basis[idx[0]];
            let w = if left {
                a.try_multiply(&e, v)
            } else {
                a.try_multiply(v, &e)
            };
            match w {
                Some(w) if !ideal.contains(&w) => Some("product leaves the ideal".to_string()),
                _ => None,
            }
        }));
    }
    r
}

/// Offset of degree `n` in the flat layout of `T(M)`.
fn flat_offset<F: Scalar>(t: &TruncatedTensorHomAlgebra<F>, n: usize) -> usize {
    (n + 1..=t.max_degree()).map(|k| t.component_dim(k)).sum()
}

/// `ε(I) = 0`, `Δ(I) ⊂ I ⊗̄ T + T ⊗̄ I` and `S(I) ⊂ I`, on a basis of `I`.
pub fn check_hopf_ideal<F: Scalar>(
    t: &TruncatedTensorHomAlgebra<F>,
    ideal: &HomIdeal<F>,
) -> Report {
    let (d, top) = (t.dim(), t.max_degree());
    let basis: Vec<GradedVector<F>> = ideal
        .space
        .basis()
        .iter()
        .map(|x| GradedVector::from_flat(d, top, x).expect("ideal lives in T(M)"))
        .collect();
    let proj = ideal.space.quotient_projection().projection;
    let total = t.total_dim();
    let indices = || (0..basis.len()).map(|i| vec![i]);
    let mut r = Report::new("hopf ideal");
    r.push(AxiomResult::scan("counit_vanishes", indices(), |i| {
        let e = t.counit(&basis[i[0]]);
        (!e.is_zero()).then(|| format!("ε = {e}"))
    }));
    r.push(AxiomResult::scan("coideal", indices(), |i| {
        let delta = t.comultiply(&basis[i[0]]);
        let mut u = Matrix::zeros(total, total);
        for (deg, x) in delta.parts() {
            let (p, q) = (deg[0], deg[1]);
            let (op, oq, dq) = (flat_offset(t, p), flat_offset(t, q), t.component_dim(q));
            for (k, v) in x.iter().enumerate() {
                if !v.is_zero() {
                    u.set(op + k / dq, oq + k % dq, v.clone());
                }
            }
        }
        let image = &(&proj * &u) * &proj.transpose();
        (!image.is_zero()).then(|| format!("Δ has a component outside I⊗T + T⊗I: {delta}"))
    }));
    r.push(AxiomResult::scan("antipode_stable", indices(), |i| {
        let s = t.antipode(&basis[i[0]]);
        (!ideal.contains(&s.to_flat())).then(|| format!("S gives {s}"))
    }));
    r
}

/// `T(M)/I` with the structure maps induced through a chosen section.
#[derive(Clone, Debug)]
pub struct QuotientTensorAlgebra<F> {
    tensor: TruncatedTensorHomAlgebra<F>,
    ideal: HomIdeal<F>,
    proj: QuotientProjection<F>,
}

impl<F: Scalar> QuotientTensorAlgebra<F> {
    pub fn new(tensor: TruncatedTensorHomAlgebra<F>, ideal: HomIdeal<F>) -> Result<Self> {
        if ideal.space.ambient_dim() != tensor.total_dim() {
            return Err(mismatch("ideal lives in a different space"));
        }
        let proj = ideal.space.quotient_projection();
        Ok(QuotientTensorAlgebra {
            tensor,
            ideal,
            proj,
        })
    }

    pub fn tensor(&self) -> &TruncatedTensorHomAlgebra<F> {
        &self.tensor
    }

    pub fn ideal(&self) -> &HomIdeal<F> {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.proj.complement.len()
    }

    /// Surviving basis tensors per degree, lowest degree first.
    pub fn degree_dims(&self) -> Vec<usize> {
        let top = self.tensor.max_degree();
        (0..=top)
            .map(|n| {
                let start = flat_offset(&self.tensor, n);
                let end = start + self.tensor.component_dim(n);
                self.proj
                    .complement
                    .iter()
                    .filter(|&&c| c >= start && c < end)
                    .count()
            })
            .collect()
    }

    pub fn project(&self, u: &GradedVector<F>) -> Vec<F> {
        self.proj.projection.apply(&u.to_flat())
    }

    pub fn lift(&self, a: &[F]) -> GradedVector<F> {
        GradedVector::from_flat(
            self.tensor.dim(),
            self.tensor.max_degree(),
            &self.proj.section.apply(a),
        )
        .expect("section lands in T(M)")
    }

    pub fn alpha(&self) -> Matrix<F> {
        &(&self.proj.projection * &self.tensor.target_alpha()) * &self.proj.section
    }

    /// Fails with `DegreeOverflow` when the lifted product leaves the bound.
    pub fn multiply(&self, a: &[F], b: &[F]) -> Result<Vec<F>> {
        Ok(self.project(&self.tensor.multiply(&self.lift(a), &self.lift(b))?))
    }

    pub fn unit(&self) -> Vec<F> {
        self.project(&self.tensor.one())
    }

    pub fn counit(&self, a: &[F]) -> F {
        self.tensor.counit(&self.lift(a))
    }

    pub fn antipode(&self, a: &[F]) -> Vec<F> {
        self.project(&self.tensor.antipode(&self.lift(a)))
    }

    /// `Δ(a)` as a `dim x dim` coefficient matrix over the quotient basis.
    pub fn comultiply(&self, a: &[F]) -> Matrix<F> {
        let t = &self.tensor;
        let total = t.total_dim();
        let delta = t.comultiply(&self.lift(a));
        let mut u = Matrix::zeros(total, total);
        for (deg, x) in delta.parts() {
            let (op, oq, dq) = (
                flat_offset(t, deg[0]),
                flat_offset(t, deg[1]),
                t.component_dim(deg[1]),
            );
            for (k, v) in x.iter().enumerate() {
                if !v.is_zero() {
                    u.set(op + k / dq, oq + k % dq, v.clone());
                }
            }
        }
        &(&self.proj.projection * &u) * &self.proj.projection.transpose()
    }
}

/// Sign convention of the enveloping relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSign {
    /// `x⊗y − y⊗x − [x,y]`, which recovers the classical enveloping algebra
    /// when `α` is the identity.
    Commutator,
    /// `[x,y] − x⊗y − y⊗x`
    Symmetric,
}

pub fn enveloping_generators<F: Scalar>(
    t: &TruncatedTensorHomAlgebra<F>,
    lie: &HomLieAlgebra<F>,
    sign: GeneratorSign,
) -> Result<Vec<GradedVector<F>>> {
    let d = lie.dim();
    if t.dim() != d || t.base() != lie.object() {
        return Err(mismatch("tensor algebra is not built on the Lie algebra"));
    }
    if t.max_degree() < 2 {
        return Err(Error::InvalidInput(
            "the relations need degree bound at least 2".into(),
        ));
    }
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let xy = t.basis_element(&[i, j])?;
            let yx = t.basis_element(&[j, i])?;
            let br = t.homogeneous(1, lie.apply(&basis_vector(d, i), &basis_vector(d, j)))?;
            let g = match sign {
                GeneratorSign::Commutator => xy.sub(&yx).sub(&br),
                GeneratorSign::Symmetric => br.sub(&xy).sub(&yx),
            };
            if !g.is_zero() {
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Enveloping<F> {
    pub generators: Vec<GradedVector<F>>,
    pub hopf_report: Report,
    pub quotient: QuotientTensorAlgebra<F>,
}

/// `T(L)/I` with `I` generated by the enveloping relations; fails unless
/// `I` is a Hopf ideal.
pub fn enveloping<F: Scalar>(
    lie: &HomLieAlgebra<F>,
    max_degree: usize,
    sign: GeneratorSign,
) -> Result<Enveloping<F>> {
    let lie_report = lie.check();
    if let Some(f) = lie_report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "not a Hom-Lie algebra: {} fails",
            f.axiom
        )));
    }
    let t = TruncatedTensorHomAlgebra::build(lie.object().clone(), max_degree)?;
    let generators = enveloping_generators(&t, lie, sign)?;
    let ideal = ideal_generated(&t, &generators)?;
    let hopf_report = check_hopf_ideal(&t, &ideal);
    if let Some(f) = hopf_report.first_failure() {
        let w = f.witness.as_ref().expect("failed results carry a witness");
        return Err(Error::ConstructionFailed(format!(
            "ideal is not a Hopf ideal: {} fails at {:?} ({})",
            f.axiom, w.indices, w.detail
        )));
    }
    let quotient = QuotientTensorAlgebra::new(t, ideal)?;
    Ok(Enveloping {
        generators,
        hopf_report,
        quotient,
    })
}
