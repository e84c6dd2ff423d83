//! Monoidal Hom-Lie algebras: antisymmetry, multiplicativity of `α`, and the
//! Hom-Jacobi identity both elementwise and through coherence maps.

use crate::coherence::{cyclic_words, reassociate};
use crate::error::{mismatch, Error, Result};
use crate::homalgebra::HomAlgebra;
use crate::homspace::{compare_on_basis, flip_matrix, HomObject};
use crate::kernel::{Matrix, Tensor3};
use crate::report::Report;
use crate::scalar::Scalar;

/// A bracket `l : L⊗L -> L` stored as a `d x d²` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct HomLieAlgebra<F> {
    object: HomObject<F>,
    bracket: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalLie<F> {
    bracket: Matrix<F>,
}

fn check_shape<F: Scalar>(d: usize, bracket: &Matrix<F>) -> Result<()> {
    if bracket.rows() != d || bracket.cols() != d * d {
        return Err(mismatch(format!(
            "bracket is {}x{}, expected {d}x{}",
            bracket.rows(),
            bracket.cols(),
            d * d
        )));
    }
    Ok(())
}

/// `x⊗y⊗z ↦ y⊗z⊗x`
fn cycle<F: Scalar>(d: usize) -> Matrix<F> {
    flip_matrix(d, d * d)
}

impl<F: Scalar> ClassicalLie<F> {
    pub fn new(bracket: Matrix<F>) -> Result<Self> {
        check_shape(bracket.rows(), &bracket)?;
        Ok(ClassicalLie { bracket })
    }

    pub fn from_constants(t: &Tensor3<F>) -> Result<Self> {
        Self::new(t.to_product_matrix())
    }

    pub fn dim(&self) -> usize {
        self.bracket.rows()
    }

    pub fn bracket(&self) -> &Matrix<F> {
        &self.bracket
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let l = &self.bracket;
        let id = Matrix::identity(d);
        let p = cycle::<F>(d);
        let mut r = Report::new("lie algebra");
        r.push(compare_on_basis(
            "antisymmetry",
            &(l * &(&id.kron(&id) + &flip_matrix(d, d))),
            &Matrix::zeros(d, d * d),
            &[d, d],
        ));
        let ll = l * &id.kron(l);
        let jac = &ll * &(&(&Matrix::identity(d * d * d) + &p) + &(&p * &p));
        r.push(compare_on_basis(
            "jacobi",
            &jac,
            &Matrix::zeros(d, d * d * d),
            &[d, d, d],
        ));
        r
    }
}

impl<F: Scalar> HomLieAlgebra<F> {
    pub fn new(object: HomObject<F>, bracket: Matrix<F>) -> Result<Self> {
        check_shape(object.dim(), &bracket)?;
        Ok(HomLieAlgebra { object, bracket })
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn object(&self) -> &HomObject<F> {
        &self.object
    }

    pub fn alpha(&self) -> &Matrix<F> {
        self.object.mu()
    }

    pub fn bracket(&self) -> &Matrix<F> {
        &self.bracket
    }

    pub fn constants(&self) -> Tensor3<F> {
        let d = self.dim();
        Tensor3::from_product_matrix(d, d, &self.bracket).expect("shape checked at construction")
    }

    pub fn apply(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.bracket.apply(&crate::kernel::tensor_vectors(&[x, y]))
    }

    /// `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]]` as a map `L⊗L⊗L -> L`.
    pub fn jacobiator(&self) -> Matrix<F> {
        let d = self.dim();
        let p = cycle::<F>(d);
        let l2a = &self.bracket * &self.alpha().kron(&self.bracket);
        &l2a * &(&(&Matrix::identity(d * d * d) + &p) + &(&p * &p))
    }

    /// `l ∘ (L⊗l) ∘ (id + b(t³,t³s) + b(t³,t³s²))` with the shuffles computed by
    /// the coherence engine.
    pub fn categorical_jacobiator(&self) -> Matrix<F> {
        let d = self.dim();
        let (t3, t3s, t3s2) = cyclic_words();
        let b1 = reassociate(&t3, &t3s)
            .expect("three leaves")
            .to_matrix(&self.object);
        let b2 = reassociate(&t3, &t3s2)
            .expect("three leaves")
            .to_matrix(&self.object);
        let l2 = &self.bracket * &Matrix::identity(d).kron(&self.bracket);
        &l2 * &(&(&Matrix::identity(d * d * d) + &b1) + &b2)
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let l = &self.bracket;
        let a = self.alpha();
        let id = Matrix::identity(d);
        let zero3 = Matrix::zeros(d, d * d * d);
        let elementwise = self.jacobiator();
        let categorical = self.categorical_jacobiator();
        let mut r = Report::new("hom-lie algebra");
        r.push(compare_on_basis(
            "antisymmetry",
            &(l * &(&id.kron(&id) + &flip_matrix(d, d))),
            &Matrix::zeros(d, d * d),
            &[d, d],
        ));
        r.push(compare_on_basis(
            "multiplicativity",
            &(a * l),
            &(l * &a.kron(a)),
            &[d, d],
        ));
        r.push(compare_on_basis(
            "hom_jacobi",
            &elementwise,
            &zero3,
            &[d, d, d],
        ));
        r.push(compare_on_basis(
            "hom_jacobi_categorical",
            &categorical,
            &zero3,
            &[d, d, d],
        ));
        r.push(compare_on_basis(
            "jacobi_forms_agree",
            &(&categorical * &a.kron(&id).kron(&id)),
            &elementwise,
            &[d, d, d],
        ));
        r
    }
}

/// Bracket `α∘[−,−]`; `α` must be an automorphism of the classical bracket.
pub fn twist_lie<F: Scalar>(g: &ClassicalLie<F>, alpha: &Matrix<F>) -> Result<HomLieAlgebra<F>> {
    let d = g.dim();
    if alpha.rows() != d || alpha.cols() != d {
        return Err(mismatch(format!("automorphism must be {d}x{d}")));
    }
    let obj = HomObject::new(alpha.clone())?;
    let check = compare_on_basis(
        "multiplicativity",
        &(alpha * g.bracket()),
        &(g.bracket() * &alpha.kron(alpha)),
        &[d, d],
    );
    if let Some(w) = check.witness {
        return Err(Error::NotAutomorphism(format!(
            "α[x,y] ≠ [αx,αy] at {:?} ({})",
            w.indices, w.detail
        )));
    }
    HomLieAlgebra::new(obj, alpha * g.bracket())
}

/// `[a,b] = ab − ba`, validated by the Hom-Lie checker.
pub fn commutator_hom_lie<F: Scalar>(a: &HomAlgebra<F>) -> Result<HomLieAlgebra<F>> {
    let d = a.dim();
    let bracket = a.mult() - &(a.mult() * &flip_matrix(d, d));
    let lie = HomLieAlgebra::new(a.object().clone(), bracket)?;
    let r = lie.check();
    if let Some(f) = r.first_failure() {
        let w = f.witness.as_ref().expect("failed results carry a witness");
        return Err(Error::ConstructionFailed(format!(
            "commutator violates {} at {:?}",
            f.axiom, w.indices
        )));
    }
    Ok(lie)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homalgebra::twist_algebra;
    use crate::homgroup::{automorphism_from_exponent, cyclic_group, hom_group};
    use crate::Q;

    #[test]
    fn twisted_sl2_passes() {
        let l = twist_lie(&catalog::sl2::<Q>(), &catalog::sl2_automorphism::<Q>()).unwrap();
        let r = l.check();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get("hom_jacobi").unwrap().checked, 27);
    }

    #[test]
    fn untwisted_sl2_with_alpha_fails_jacobi() {
        let sl2 = catalog::sl2::<Q>();
        let l = HomLieAlgebra::new(
            HomObject::new(catalog::sl2_automorphism::<Q>()).unwrap(),
            sl2.bracket().clone(),
        )
        .unwrap();
        let r = l.check();
        let j = r.get("hom_jacobi").unwrap();
        assert!(!j.passed);
        assert!(r.get("jacobi_forms_agree").unwrap().passed);
    }

    #[test]
    fn abelian_and_heisenberg() {
        let ab = catalog::abelian_lie::<Q>(3);
        let any = Matrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert!(twist_lie(&ab, &any).unwrap().check().passed());
        let h = twist_lie(
            &catalog::heisenberg::<Q>(),
            &catalog::heisenberg_automorphism::<Q>(),
        )
        .unwrap();
        assert!(h.check().passed());
        assert!(twist_lie(&catalog::sl2::<Q>(), &Matrix::identity(3))
            .unwrap()
            .check()
            .passed());
    }

    #[test]
    fn rejects_non_automorphism() {
        let bad = Matrix::diagonal(&[Q::from_int(2), Q::from_int(2), Q::from_int(1)]);
        assert!(matches!(
            twist_lie(&catalog::sl2::<Q>(), &bad),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn commutators() {
        let (m2, conj) = (
            catalog::matrix_algebra::<Q>(),
            catalog::conjugation_automorphism::<Q>(),
        );
        let a = twist_algebra(&m2, &conj).unwrap();
        let l = commutator_hom_lie(&a).unwrap();
        assert_eq!(l.dim(), 4);
        let g = cyclic_group(3).unwrap();
        let h = hom_group(&g, &automorphism_from_exponent(&g, 2).unwrap()).linearize::<Q>();
        assert!(commutator_hom_lie(h.algebra()).unwrap().bracket().is_zero());
    }
}
