use super::{GradedVector, TruncatedTensorHomAlgebra};
use crate::error::{mismatch, Error, Result};
use crate::homalgebra::HomAlgebra;
use crate::homspace::HomMorphism;
use crate::kernel::{add_scaled, basis_vector, Matrix};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

/// A Hom-algebra given by coordinates, as seen by the universal property.
pub trait LiftTarget<F> {
    fn target_dim(&self) -> usize;
    fn target_alpha(&self) -> Matrix<F>;
    fn target_unit(&self) -> Vec<F>;
    fn target_multiply(&self, a: &[F], b: &[F]) -> Vec<F>;
}

impl<F: Scalar> LiftTarget<F> for HomAlgebra<F> {
    fn target_dim(&self) -> usize {
        self.dim()
    }

    fn target_alpha(&self) -> Matrix<F> {
        self.alpha().clone()
    }

    fn target_unit(&self) -> Vec<F> {
        self.unit().to_vec()
    }

    fn target_multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.multiply(a, b)
    }
}

/// `T(M)` in flat coordinates, with the product taken modulo degrees above
/// the bound.
impl<F: Scalar> LiftTarget<F> for TruncatedTensorHomAlgebra<F> {
    fn target_dim(&self) -> usize {
        self.total_dim()
    }

    fn target_alpha(&self) -> Matrix<F> {
        let n = self.total_dim();
        let cols: Vec<Vec<F>> = (0..n)
            .map(|j| {
                let e = GradedVector::from_flat(self.dim(), self.max_degree(), &basis_vector(n, j))
                    .expect("length");
                self.t_mu(&e, 1).to_flat()
            })
            .collect();
        Matrix::from_columns(&cols).expect("columns have equal length")
    }

    fn target_unit(&self) -> Vec<F> {
        self.one().to_flat()
    }

    fn target_multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        let (d, n) = (self.dim(), self.max_degree());
        let u = GradedVector::from_flat(d, n, a).expect("length");
        let v = GradedVector::from_flat(d, n, b).expect("length");
        self.multiply_truncated(&u, &v).to_flat()
    }
}

/// The algebra map `f̄ : T(M) -> A`, one matrix per degree.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorLift<F> {
    maps: Vec<Matrix<F>>,
}

impl<F: Scalar> TensorLift<F> {
    pub fn degree_map(&self, n: usize) -> &Matrix<F> {
        &self.maps[n]
    }

    pub fn apply(&self, u: &GradedVector<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.maps[0].rows()];
        for n in u.support() {
            add_scaled(&mut out, &F::one(), &self.maps[n].apply(u.component(n)));
        }
        out
    }
}

/// `f̄(x_1 ⊗ (x_2 ⊗ ⋯)) = f(x_1)(f(x_2)(⋯))` and `f̄(1) = 1_A`.
pub fn universal_lift<F: Scalar, A: LiftTarget<F>>(
    t: &TruncatedTensorHomAlgebra<F>,
    f: &HomMorphism<F>,
    target: &A,
) -> Result<TensorLift<F>> {
    if f.source() != t.base() {
        return Err(Error::InvalidInput(
            "the map must start at the generating object".into(),
        ));
    }
    if f.target().dim() != target.target_dim() {
        return Err(mismatch("the map lands outside the target algebra"));
    }
    if *f.target().mu() != target.target_alpha() {
        return Err(Error::InvalidInput(
            "the map's target automorphism differs from the algebra's".into(),
        ));
    }
    let d = t.dim();
    let mut maps = vec![Matrix::column_vector(&target.target_unit())];
    if t.max_degree() >= 1 {
        maps.push(f.map().clone());
    }
    for n in 2..=t.max_degree() {
        let tail = t.component_dim(n - 1);
        let cols: Vec<Vec<F>> = (0..t.component_dim(n))
            .map(|j| {
                target.target_multiply(&f.map().column(j / tail), &maps[n - 1].column(j % tail))
            })
            .collect();
        maps.push(Matrix::from_columns(&cols).expect("columns have equal length"));
        debug_assert_eq!(maps[n].cols(), d.pow(n as u32));
    }
    Ok(TensorLift { maps })
}

pub fn check_lift<F: Scalar, A: LiftTarget<F>>(
    t: &TruncatedTensorHomAlgebra<F>,
    f: &HomMorphism<F>,
    target: &A,
    lift: &TensorLift<F>,
) -> Report {
    let mut r = Report::new("universal lift");
    let restricted = t.max_degree() == 0 || lift.degree_map(1) == f.map();
    r.push(if restricted {
        AxiomResult::pass("extends_map", 1)
    } else {
        AxiomResult::fail("extends_map", 1, vec![], "f̄∘i ≠ f")
    });
    let unit_ok = lift.apply(&t.one()) == target.target_unit();
    r.push(if unit_ok {
        AxiomResult::pass("unit", 1)
    } else {
        AxiomResult::fail("unit", 1, vec![], "f̄(1) ≠ 1")
    });
    r.push(t.scan_pairs("multiplicative", |u, v| {
        let lhs = lift.apply(&t.multiply(u, v).expect("in bound"));
        let rhs = target.target_multiply(&lift.apply(u), &lift.apply(v));
        (lhs != rhs).then(|| "f̄(uv) ≠ f̄(u)f̄(v)".to_string())
    }));
    let alpha = target.target_alpha();
    r.push(t.scan_basis("commutes_with_alpha", t.max_degree(), |u| {
        (lift.apply(&t.t_mu(u, 1)) != alpha.apply(&lift.apply(u)))
            .then(|| "f̄∘T(μ) ≠ α∘f̄".to_string())
    }));
    r
}
