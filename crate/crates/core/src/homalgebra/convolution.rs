use super::{HomAlgebra, HomCoalgebra};
use crate::error::{mismatch, Result};
use crate::homspace::HomObject;
use crate::kernel::{Matrix, Subspace};
use crate::report::{tuples, AxiomResult, Report};
use crate::scalar::Scalar;

/// `f ∗ g = m_A ∘ (f⊗g) ∘ Δ_C`
pub fn convolution<F: Scalar>(
    f: &Matrix<F>,
    g: &Matrix<F>,
    c: &HomCoalgebra<F>,
    a: &HomAlgebra<F>,
) -> Result<Matrix<F>> {
    for (name, x) in [("f", f), ("g", g)] {
        if x.rows() != a.dim() || x.cols() != c.dim() {
            return Err(mismatch(format!(
                "{name} is {}x{}, expected {}x{}",
                x.rows(),
                x.cols(),
                a.dim(),
                c.dim()
            )));
        }
    }
    Ok(&(a.mult() * &f.kron(g)) * c.comult())
}

fn unvec<F: Scalar>(v: &[F], rows: usize, cols: usize) -> Matrix<F> {
    Matrix::from_vec(rows, cols, v.to_vec()).expect("vector has rows*cols entries")
}

/// `Hom(C, A)` with the convolution product, automorphism `f ↦ α∘f∘γ⁻¹` and
/// unit `η∘ε`. Maps are vectorized row-major.
pub fn convolution_hom_algebra<F: Scalar>(
    c: &HomCoalgebra<F>,
    a: &HomAlgebra<F>,
) -> Result<HomAlgebra<F>> {
    let (p, q) = (a.dim(), c.dim());
    let n = p * q;
    let mut mult = Matrix::zeros(n, n * n);
    let basis: Vec<Matrix<F>> = (0..n)
        .map(|i| unvec(&crate::kernel::basis_vector(n, i), p, q))
        .collect();
    for (i, f) in basis.iter().enumerate() {
        for (j, g) in basis.iter().enumerate() {
            let h = convolution(f, g, c, a)?;
            for (k, x) in h.entries().iter().enumerate() {
                if !x.is_zero() {
                    mult.set(k, i * n + j, x.clone());
                }
            }
        }
    }
    let auto = a.alpha().kron(&c.object().mu_inv().transpose());
    let unit = (&Matrix::column_vector(a.unit()) * &Matrix::row_vector(c.counit()))
        .entries()
        .to_vec();
    HomAlgebra::new(HomObject::new(auto)?, mult, unit)
}

/// Maps `f` with `α∘f = f∘γ`, vectorized row-major.
pub fn invariant_maps<F: Scalar>(c: &HomCoalgebra<F>, a: &HomAlgebra<F>) -> Subspace<F> {
    let conv = convolution_hom_algebra(c, a).expect("shapes come from valid structures");
    let n = conv.dim();
    (conv.alpha() - &Matrix::identity(n)).kernel()
}

/// On `Hom^H(C, A)` the convolution is closed, strictly associative, and has
/// two-sided unit `η∘ε`.
pub fn check_strict_convolution<F: Scalar>(
    c: &HomCoalgebra<F>,
    a: &HomAlgebra<F>,
) -> Result<Report> {
    let (p, q) = (a.dim(), c.dim());
    let sub = invariant_maps(c, a);
    let basis: Vec<Matrix<F>> = sub.basis().iter().map(|v| unvec(v, p, q)).collect();
    let k = basis.len();
    let conv = |f: &Matrix<F>, g: &Matrix<F>| convolution(f, g, c, a).expect("shapes checked");
    let unit = &Matrix::column_vector(a.unit()) * &Matrix::row_vector(c.counit());
    let mut r = Report::new("invariant convolution algebra");
    r.push(AxiomResult::scan("closure", tuples(k, 2), |t| {
        let h = conv(&basis[t[0]], &basis[t[1]]);
        (!sub.contains(h.entries())).then(|| "product leaves the invariant maps".to_string())
    }));
    r.push(AxiomResult::scan("associativity", tuples(k, 3), |t| {
        let (f, g, h) = (&basis[t[0]], &basis[t[1]], &basis[t[2]]);
        let lhs = conv(&conv(f, g), h);
        let rhs = conv(f, &conv(g, h));
        (lhs != rhs).then(|| "(f∗g)∗h ≠ f∗(g∗h)".to_string())
    }));
    r.push(AxiomResult::scan("unit", tuples(k, 1), |t| {
        let f = &basis[t[0]];
        (conv(&unit, f) != *f || conv(f, &unit) != *f)
            .then(|| "η∘ε is not a two-sided unit".to_string())
    }));
    r.push(if sub.contains(unit.entries()) {
        AxiomResult::pass("unit_invariant", 1)
    } else {
        AxiomResult::fail(
            "unit_invariant",
            1,
            vec![],
            "η∘ε does not commute with the automorphisms",
        )
    });
    Ok(r)
}
