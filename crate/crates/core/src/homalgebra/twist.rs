use super::{
    ClassicalAlgebra, ClassicalBialgebra, ClassicalCoalgebra, HomAlgebra, HomBialgebra,
    HomCoalgebra, HomHopfAlgebra,
};
use crate::error::{Error, Result};
use crate::homspace::{compare_on_basis, HomObject};
use crate::kernel::Matrix;
use crate::report::AxiomResult;
use crate::scalar::Scalar;

fn require(result: AxiomResult, what: &str) -> Result<()> {
    if result.passed {
        return Ok(());
    }
    let w = result.witness.expect("failed results carry a witness");
    Err(Error::NotAutomorphism(format!(
        "{what}: {} fails at {:?} ({})",
        result.axiom, w.indices, w.detail
    )))
}

fn require_algebra_map<F: Scalar>(a: &ClassicalAlgebra<F>, alpha: &Matrix<F>) -> Result<()> {
    let d = a.dim();
    let u = Matrix::column_vector(a.unit());
    require(
        compare_on_basis(
            "multiplicativity",
            &(alpha * a.mult()),
            &(a.mult() * &alpha.kron(alpha)),
            &[d, d],
        ),
        "not an algebra map",
    )?;
    require(
        compare_on_basis("unit_fixed", &(alpha * &u), &u, &[1]),
        "not an algebra map",
    )
}

fn require_coalgebra_map<F: Scalar>(c: &ClassicalCoalgebra<F>, gamma: &Matrix<F>) -> Result<()> {
    let d = c.dim();
    let e = Matrix::row_vector(c.counit());
    require(
        compare_on_basis(
            "comultiplicativity",
            &(c.comult() * gamma),
            &(&gamma.kron(gamma) * c.comult()),
            &[d],
        ),
        "not a coalgebra map",
    )?;
    require(
        compare_on_basis("counit_invariance", &(&e * gamma), &e, &[d]),
        "not a coalgebra map",
    )
}

fn object<F: Scalar>(dim: usize, alpha: &Matrix<F>) -> Result<HomObject<F>> {
    if alpha.rows() != dim || alpha.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "automorphism must be {dim}x{dim}"
        )));
    }
    HomObject::new(alpha.clone())
}

/// `m̃ = α ∘ m` with the same unit.
pub fn twist_algebra<F: Scalar>(
    a: &ClassicalAlgebra<F>,
    alpha: &Matrix<F>,
) -> Result<HomAlgebra<F>> {
    let obj = object(a.dim(), alpha)?;
    require_algebra_map(a, alpha)?;
    HomAlgebra::new(obj, alpha * a.mult(), a.unit().to_vec())
}

/// `m = α⁻¹ ∘ m̃`; fails unless the result is associative and unital.
pub fn untwist_algebra<F: Scalar>(a: &HomAlgebra<F>) -> Result<(ClassicalAlgebra<F>, Matrix<F>)> {
    let m = a.object().mu_inv() * a.mult();
    let c = ClassicalAlgebra::new(m, a.unit().to_vec())?;
    let r = c.check();
    if let Some(f) = r.first_failure() {
        return Err(Error::ConstructionFailed(format!(
            "untwisted product violates {}",
            f.axiom
        )));
    }
    Ok((c, a.alpha().clone()))
}

/// `Δ̃ = Δ ∘ γ⁻¹ = (γ⁻¹⊗γ⁻¹) ∘ Δ` with the same counit.
pub fn twist_coalgebra<F: Scalar>(
    c: &ClassicalCoalgebra<F>,
    gamma: &Matrix<F>,
) -> Result<HomCoalgebra<F>> {
    let obj = object(c.dim(), gamma)?;
    require_coalgebra_map(c, gamma)?;
    let gi = obj.mu_inv();
    let right = c.comult() * gi;
    let left = &gi.kron(gi) * c.comult();
    if right != left {
        return Err(Error::Internal(
            "the two expressions for the twisted comultiplication differ".into(),
        ));
    }
    HomCoalgebra::new(obj.clone(), right, c.counit().to_vec())
}

/// `Δ = Δ̃ ∘ γ`; fails unless the result is coassociative and counital.
pub fn untwist_coalgebra<F: Scalar>(
    c: &HomCoalgebra<F>,
) -> Result<(ClassicalCoalgebra<F>, Matrix<F>)> {
    let delta = c.comult() * c.gamma();
    let cc = ClassicalCoalgebra::new(delta, c.counit().to_vec())?;
    let r = cc.check();
    if let Some(f) = r.first_failure() {
        return Err(Error::ConstructionFailed(format!(
            "untwisted comultiplication violates {}",
            f.axiom
        )));
    }
    Ok((cc, c.gamma().clone()))
}

pub fn twist_bialgebra<F: Scalar>(
    b: &ClassicalBialgebra<F>,
    alpha: &Matrix<F>,
) -> Result<HomBialgebra<F>> {
    HomBialgebra::new(
        twist_algebra(b.algebra(), alpha)?,
        twist_coalgebra(b.coalgebra(), alpha)?,
    )
}

pub fn untwist_bialgebra<F: Scalar>(
    b: &HomBialgebra<F>,
) -> Result<(ClassicalBialgebra<F>, Matrix<F>)> {
    let (a, alpha) = untwist_algebra(b.algebra())?;
    let (c, _) = untwist_coalgebra(b.coalgebra())?;
    let cb = ClassicalBialgebra::new(a, c)?;
    let r = cb.check();
    if let Some(f) = r.first_failure() {
        return Err(Error::ConstructionFailed(format!(
            "untwisted bialgebra violates {}",
            f.axiom
        )));
    }
    Ok((cb, alpha))
}

/// Twists a classical Hopf algebra; the antipode is kept.
pub fn twist_hopf<F: Scalar>(
    b: &ClassicalBialgebra<F>,
    antipode: &Matrix<F>,
    alpha: &Matrix<F>,
) -> Result<HomHopfAlgebra<F>> {
    HomHopfAlgebra::new(twist_bialgebra(b, alpha)?, antipode.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homgroup::{automorphism_from_exponent, cyclic_group};
    use crate::kernel::basis_vector;
    use crate::Q;

    #[test]
    fn twisted_cyclic_product() {
        let g = cyclic_group(3).unwrap();
        let b = catalog::group_bialgebra::<Q>(&g);
        let phi = automorphism_from_exponent(&g, 2).unwrap().matrix();
        let a = twist_algebra(b.algebra(), &phi).unwrap();
        let e1 = basis_vector::<Q>(3, 1);
        // g·g = φ(g²) = g⁴ = g
        assert_eq!(a.multiply(&e1, &e1), e1);
        assert!(a.check().passed());
        let (back, alpha) = untwist_algebra(&a).unwrap();
        assert_eq!(&back, b.algebra());
        assert_eq!(twist_algebra(&back, &alpha).unwrap(), a);
    }

    #[test]
    fn twisted_coproduct_is_inverse_diagonal() {
        let g = cyclic_group(3).unwrap();
        let b = catalog::group_bialgebra::<Q>(&g);
        let phi = automorphism_from_exponent(&g, 2).unwrap();
        let c = twist_coalgebra(b.coalgebra(), &phi.matrix()).unwrap();
        for x in 0..3 {
            let y = phi.inverse().apply(x);
            let col = c.comult().column(x);
            for (idx, v) in col.iter().enumerate() {
                let expected = if idx == y * 3 + y {
                    Q::from_int(1)
                } else {
                    Q::from_int(0)
                };
                assert_eq!(v, &expected);
            }
        }
        assert!(c.check().passed());
    }

    #[test]
    fn identity_twist_changes_nothing() {
        let b = catalog::group_bialgebra::<Q>(&cyclic_group(4).unwrap());
        let h = twist_bialgebra(&b, &Matrix::identity(4)).unwrap();
        assert_eq!(h, b.as_hom());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let b = catalog::group_bialgebra::<Q>(&cyclic_group(3).unwrap());
        let singular = Matrix::<Q>::zeros(3, 3);
        assert_eq!(
            twist_algebra(b.algebra(), &singular),
            Err(Error::NotInvertible)
        );
        let scale = Matrix::diagonal(&[Q::from_int(1), Q::from_int(2), Q::from_int(1)]);
        assert!(matches!(
            twist_algebra(b.algebra(), &scale),
            Err(Error::NotAutomorphism(_))
        ));
        // g ↦ −g is an algebra automorphism of Q[C₂] but not a coalgebra map.
        let b2 = catalog::group_bialgebra::<Q>(&cyclic_group(2).unwrap());
        let neg = Matrix::diagonal(&[Q::from_int(1), Q::from_int(-1)]);
        assert!(twist_algebra(b2.algebra(), &neg).is_ok());
        assert!(matches!(
            twist_bialgebra(&b2, &neg),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn sweedler_twist() {
        let (b, s) = catalog::sweedler::<Q>();
        let alpha = catalog::sweedler_automorphism::<Q>();
        let h = twist_hopf(&b, &s, &alpha).unwrap();
        assert!(h.check().passed(), "{}", h.check());
        let (back, a) = untwist_bialgebra(h.bialgebra()).unwrap();
        assert_eq!(back, b);
        assert_eq!(a, alpha);
    }
}
