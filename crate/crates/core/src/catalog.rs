//! Small classical structures used as inputs throughout: group bialgebras,
//! the idempotent monoid, the 2x2 matrix algebra, Sweedler's algebra and a
//! few Lie algebras, each with a distinguished automorphism.

use crate::homalgebra::{
    twist_algebra, twist_bialgebra, untwist_algebra, untwist_bialgebra, ClassicalAlgebra,
    ClassicalBialgebra, ClassicalCoalgebra,
};
use crate::homgroup::{
    automorphism_from_exponent, cyclic_group, inner_automorphism, symmetric_group, FiniteGroup,
};
use crate::homlie::ClassicalLie;
use crate::kernel::{Matrix, Tensor3};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

pub fn group_bialgebra<F: Scalar>(g: &FiniteGroup) -> ClassicalBialgebra<F> {
    let n = g.order();
    let mut mult = Matrix::zeros(n, n * n);
    let mut comult = Matrix::zeros(n * n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(g.mul(a, b), a * n + b, F::one());
        }
        comult.set(a * n + a, a, F::one());
    }
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    ClassicalBialgebra::new(
        ClassicalAlgebra::new(mult, unit).expect("shapes agree"),
        ClassicalCoalgebra::new(comult, vec![F::one(); n]).expect("shapes agree"),
    )
    .expect("same dimension")
}

pub fn group_antipode<F: Scalar>(g: &FiniteGroup) -> Matrix<F> {
    let image: Vec<usize> = (0..g.order()).map(|x| g.inverse(x)).collect();
    Matrix::permutation(&image)
}

/// The monoid `{1, e}` with `e² = e`, group-like comultiplication.
pub fn idempotent_monoid<F: Scalar>() -> ClassicalBialgebra<F> {
    let mut mult = Matrix::zeros(2, 4);
    mult.set(0, 0, F::one());
    mult.set(1, 1, F::one());
    mult.set(1, 2, F::one());
    mult.set(1, 3, F::one());
    let mut comult = Matrix::zeros(4, 2);
    comult.set(0, 0, F::one());
    comult.set(3, 1, F::one());
    ClassicalBialgebra::new(
        ClassicalAlgebra::new(mult, vec![F::one(), F::zero()]).expect("shapes agree"),
        ClassicalCoalgebra::new(comult, vec![F::one(), F::one()]).expect("shapes agree"),
    )
    .expect("same dimension")
}

/// `M₂(Q)` on matrix units `E₁₁, E₁₂, E₂₁, E₂₂`.
pub fn matrix_algebra<F: Scalar>() -> ClassicalAlgebra<F> {
    let mut mult = Matrix::zeros(4, 16);
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                // E_ij E_jl = E_il
                mult.set(2 * i + l, (2 * i + j) * 4 + 2 * j + l, F::one());
            }
        }
    }
    ClassicalAlgebra::new(mult, vec![F::one(), F::zero(), F::zero(), F::one()])
        .expect("shapes agree")
}

/// `X ↦ P X P⁻¹` with `P = [[1,1],[0,1]]`, on row-major coordinates.
pub fn conjugation_automorphism<F: Scalar>() -> Matrix<F> {
    let p = Matrix::<F>::from_ints(&[&[1, 1], &[0, 1]]);
    let p_inv = Matrix::<F>::from_ints(&[&[1, -1], &[0, 1]]);
    p.kron(&p_inv.transpose())
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with its antipode.
pub fn sweedler<F: Scalar>() -> (ClassicalBialgebra<F>, Matrix<F>) {
    let one = F::one();
    let neg = -F::one();
    // products of basis elements (row · column) as (target, coefficient)
    let table: [[Option<(usize, F)>; 4]; 4] = [
        [
            Some((0, one.clone())),
            Some((1, one.clone())),
            Some((2, one.clone())),
            Some((3, one.clone())),
        ],
        [
            Some((1, one.clone())),
            Some((0, one.clone())),
            Some((3, one.clone())),
            Some((2, one.clone())),
        ],
        [Some((2, one.clone())), Some((3, neg.clone())), None, None],
        [Some((3, one.clone())), Some((2, neg.clone())), None, None],
    ];
    let mut mult = Matrix::zeros(4, 16);
    for (a, row) in table.iter().enumerate() {
        for (b, entry) in row.iter().enumerate() {
            if let Some((k, c)) = entry {
                mult.set(*k, a * 4 + b, c.clone());
            }
        }
    }
    let mut comult = Matrix::zeros(16, 4);
    comult.set(0, 0, one.clone());
    comult.set(4 + 1, 1, one.clone());
    comult.set(2 * 4, 2, one.clone());
    comult.set(4 + 2, 2, one.clone());
    comult.set(3 * 4 + 1, 3, one.clone());
    comult.set(3, 3, one.clone());
    let mut s = Matrix::zeros(4, 4);
    s.set(0, 0, one.clone());
    s.set(1, 1, one.clone());
    s.set(3, 2, neg);
    s.set(2, 3, one.clone());
    let b = ClassicalBialgebra::new(
        ClassicalAlgebra::new(mult, vec![one.clone(), F::zero(), F::zero(), F::zero()])
            .expect("shapes agree"),
        ClassicalCoalgebra::new(comult, vec![one.clone(), one, F::zero(), F::zero()])
            .expect("shapes agree"),
    )
    .expect("same dimension");
    (b, s)
}

/// `g ↦ g`, `x ↦ 2x`, `gx ↦ 2gx`.
pub fn sweedler_automorphism<F: Scalar>() -> Matrix<F> {
    Matrix::diagonal(&[F::one(), F::one(), F::from_int(2), F::from_int(2)])
}

fn lie<F: Scalar>(d: usize, entries: &[(usize, usize, usize, i64)]) -> ClassicalLie<F> {
    let mut t = Tensor3::new(d, d, d);
    for &(i, j, k, c) in entries {
        t.set(i, j, k, F::from_int(c)).expect("indices in range");
        t.set(j, i, k, F::from_int(-c)).expect("indices in range");
    }
    ClassicalLie::from_constants(&t).expect("square constants")
}

/// `sl₂` on `e, h, f`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2<F: Scalar>() -> ClassicalLie<F> {
    lie(3, &[(0, 2, 1, 1), (1, 0, 0, 2), (1, 2, 2, -2)])
}

/// `diag(2, 1, 1/2)`
pub fn sl2_automorphism<F: Scalar>() -> Matrix<F> {
    Matrix::diagonal(&[F::from_int(2), F::one(), F::ratio(1, 2)])
}

/// Heisenberg algebra on `x, y, z`: `[x,y] = z`.
pub fn heisenberg<F: Scalar>() -> ClassicalLie<F> {
    lie(3, &[(0, 1, 2, 1)])
}

/// `diag(2, 1, 2)`, scaling the center.
pub fn heisenberg_automorphism<F: Scalar>() -> Matrix<F> {
    Matrix::diagonal(&[F::from_int(2), F::one(), F::from_int(2)])
}

pub fn abelian_lie<F: Scalar>(d: usize) -> ClassicalLie<F> {
    lie(d, &[])
}

pub enum Structure<F> {
    Algebra(ClassicalAlgebra<F>),
    Bialgebra(ClassicalBialgebra<F>),
}

/// A classical structure together with an automorphism to twist by.
pub struct CatalogEntry<F> {
    pub name: &'static str,
    pub structure: Structure<F>,
    pub automorphism: Matrix<F>,
}

impl<F: Scalar> CatalogEntry<F> {
    pub fn check_classical(&self) -> Report {
        match &self.structure {
            Structure::Algebra(a) => a.check(),
            Structure::Bialgebra(b) => b.check(),
        }
    }

    /// Twists, checks the Hom axioms, untwists and twists again; every stage
    /// is recorded.
    pub fn round_trip(&self) -> Report {
        let mut r = Report::new(format!("structure round trip for {}", self.name));
        let stage = |name: &str, ok: bool, detail: String| {
            if ok {
                AxiomResult::pass(name, 1)
            } else {
                AxiomResult::fail(name, 1, vec![], detail)
            }
        };
        match &self.structure {
            Structure::Algebra(a) => match twist_algebra(a, &self.automorphism) {
                Err(e) => r.push(stage("twist", false, e.to_string())),
                Ok(h) => {
                    r.push(stage("twist", true, String::new()));
                    r.absorb("twisted", h.check());
                    match untwist_algebra(&h) {
                        Err(e) => r.push(stage("untwist", false, e.to_string())),
                        Ok((back, alpha)) => {
                            r.push(stage(
                                "untwist",
                                back == *a && alpha == self.automorphism,
                                "untwist differs".into(),
                            ));
                            let again = twist_algebra(&back, &alpha)
                                .map(|x| x == h)
                                .unwrap_or(false);
                            r.push(stage("retwist", again, "retwist differs".into()));
                        }
                    }
                }
            },
            Structure::Bialgebra(b) => match twist_bialgebra(b, &self.automorphism) {
                Err(e) => r.push(stage("twist", false, e.to_string())),
                Ok(h) => {
                    r.push(stage("twist", true, String::new()));
                    r.absorb("twisted", h.check());
                    match untwist_bialgebra(&h) {
                        Err(e) => r.push(stage("untwist", false, e.to_string())),
                        Ok((back, alpha)) => {
                            r.push(stage(
                                "untwist",
                                back == *b && alpha == self.automorphism,
                                "untwist differs".into(),
                            ));
                            let again = twist_bialgebra(&back, &alpha)
                                .map(|x| x == h)
                                .unwrap_or(false);
                            r.push(stage("retwist", again, "retwist differs".into()));
                        }
                    }
                }
            },
        }
        r
    }
}

/// The classical catalog: group bialgebras of `C₂, C₃, C₆, S₃`, `M₂(Q)` with
/// conjugation, Sweedler's algebra with `x ↦ 2x`, and `Q[C₂]` as an algebra
/// with `g ↦ −g`.
pub fn structures<F: Scalar>() -> Vec<CatalogEntry<F>> {
    let c2 = cyclic_group(2).expect("order 2");
    let c3 = cyclic_group(3).expect("order 3");
    let c6 = cyclic_group(6).expect("order 6");
    let s3 = symmetric_group(3).expect("three points");
    // the transposition swapping the first two points
    let t = crate::homgroup::permutations(3)
        .iter()
        .position(|p| p == &[1, 0, 2])
        .expect("present");
    vec![
        CatalogEntry {
            name: "Q[C2]",
            structure: Structure::Bialgebra(group_bialgebra(&c2)),
            automorphism: Matrix::identity(2),
        },
        CatalogEntry {
            name: "Q[C2] as algebra, g -> -g",
            structure: Structure::Algebra(group_bialgebra::<F>(&c2).algebra().clone()),
            automorphism: Matrix::diagonal(&[F::one(), -F::one()]),
        },
        CatalogEntry {
            name: "Q[C3]",
            structure: Structure::Bialgebra(group_bialgebra(&c3)),
            automorphism: automorphism_from_exponent(&c3, 2)
                .expect("unit exponent")
                .matrix(),
        },
        CatalogEntry {
            name: "Q[C6]",
            structure: Structure::Bialgebra(group_bialgebra(&c6)),
            automorphism: automorphism_from_exponent(&c6, 5)
                .expect("unit exponent")
                .matrix(),
        },
        CatalogEntry {
            name: "Q[S3]",
            structure: Structure::Bialgebra(group_bialgebra(&s3)),
            automorphism: inner_automorphism(&s3, t).matrix(),
        },
        CatalogEntry {
            name: "M2(Q)",
            structure: Structure::Algebra(matrix_algebra()),
            automorphism: conjugation_automorphism(),
        },
        CatalogEntry {
            name: "Sweedler H4",
            structure: Structure::Bialgebra(sweedler().0),
            automorphism: sweedler_automorphism(),
        },
    ]
}
