//! Monoidal Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf
//! algebras given by structure constants, together with their classical
//! counterparts.
//!
//! Multiplications are `d x d²` matrices, comultiplications `d² x d`, with
//! the tensor basis ordered lexicographically.

mod antipode;
mod convolution;
mod twist;

pub use antipode::{
    antipode_kernel_dim, check_antipode_properties, solve_antipode, AntipodeSolution,
};
pub use convolution::{
    check_strict_convolution, convolution, convolution_hom_algebra, invariant_maps,
};
pub use twist::{
    twist_algebra, twist_bialgebra, twist_coalgebra, twist_hopf, untwist_algebra,
    untwist_bialgebra, untwist_coalgebra,
};

use crate::error::{mismatch, Error, Result};
use crate::homspace::{compare_on_basis, flip_matrix, HomObject};
use crate::kernel::{Matrix, Tensor3};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct HomAlgebra<F> {
    object: HomObject<F>,
    mult: Matrix<F>,
    unit: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomCoalgebra<F> {
    object: HomObject<F>,
    comult: Matrix<F>,
    counit: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomBialgebra<F> {
    algebra: HomAlgebra<F>,
    coalgebra: HomCoalgebra<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomHopfAlgebra<F> {
    bialgebra: HomBialgebra<F>,
    antipode: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalAlgebra<F> {
    mult: Matrix<F>,
    unit: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalCoalgebra<F> {
    comult: Matrix<F>,
    counit: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalBialgebra<F> {
    algebra: ClassicalAlgebra<F>,
    coalgebra: ClassicalCoalgebra<F>,
}

fn check_mult_shape<F: Scalar>(d: usize, mult: &Matrix<F>, unit: &[F]) -> Result<()> {
    if mult.rows() != d || mult.cols() != d * d {
        return Err(mismatch(format!(
            "multiplication is {}x{}, expected {d}x{}",
            mult.rows(),
            mult.cols(),
            d * d
        )));
    }
    if unit.len() != d {
        return Err(mismatch(format!(
            "unit has length {}, expected {d}",
            unit.len()
        )));
    }
    Ok(())
}

fn check_comult_shape<F: Scalar>(d: usize, comult: &Matrix<F>, counit: &[F]) -> Result<()> {
    if comult.rows() != d * d || comult.cols() != d {
        return Err(mismatch(format!(
            "comultiplication is {}x{}, expected {}x{d}",
            comult.rows(),
            comult.cols(),
            d * d
        )));
    }
    if counit.len() != d {
        return Err(mismatch(format!(
            "counit has length {}, expected {d}",
            counit.len()
        )));
    }
    Ok(())
}

fn column<F: Scalar>(v: &[F]) -> Matrix<F> {
    Matrix::column_vector(v)
}

fn row<F: Scalar>(v: &[F]) -> Matrix<F> {
    Matrix::row_vector(v)
}

/// `(a⊗b)⊗(a'⊗b') ↦ (a⊗a')⊗(b⊗b')` on `F^p ⊗ F^q ⊗ F^p ⊗ F^q`.
pub fn interchange<F: Scalar>(p: usize, q: usize) -> Matrix<F> {
    Matrix::identity(p)
        .kron(&flip_matrix(q, p))
        .kron(&Matrix::identity(q))
}

impl<F: Scalar> HomAlgebra<F> {
    pub fn new(object: HomObject<F>, mult: Matrix<F>, unit: Vec<F>) -> Result<Self> {
        check_mult_shape(object.dim(), &mult, &unit)?;
        Ok(HomAlgebra { object, mult, unit })
    }

    pub fn from_constants(object: HomObject<F>, mult: &Tensor3<F>, unit: Vec<F>) -> Result<Self> {
        let d = object.dim();
        if mult.dims() != (d, d, d) {
            return Err(mismatch(
                "structure constants do not match the object dimension",
            ));
        }
        Self::new(object, mult.to_product_matrix(), unit)
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

    pub fn mult(&self) -> &Matrix<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn constants(&self) -> Tensor3<F> {
        let d = self.dim();
        Tensor3::from_product_matrix(d, d, &self.mult).expect("shape checked at construction")
    }

    pub fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.mult.apply(&crate::kernel::tensor_vectors(&[a, b]))
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let alpha = self.alpha();
        let id = Matrix::identity(d);
        let u = column(&self.unit);
        let mut r = Report::new("hom-algebra");
        r.push(compare_on_basis(
            "multiplicativity",
            &(alpha * &self.mult),
            &(&self.mult * &alpha.kron(alpha)),
            &[d, d],
        ));
        r.push(compare_on_basis("unit_fixed", &(alpha * &u), &u, &[1]));
        r.push(compare_on_basis(
            "hom_associativity",
            &(&self.mult * &alpha.kron(&self.mult)),
            &(&self.mult * &self.mult.kron(alpha)),
            &[d, d, d],
        ));
        r.push(compare_on_basis(
            "hom_unitality_right",
            &(&self.mult * &id.kron(&u)),
            alpha,
            &[d],
        ));
        r.push(compare_on_basis(
            "hom_unitality_left",
            &(&self.mult * &u.kron(&id)),
            alpha,
            &[d],
        ));
        r
    }

    /// `m^op = m ∘ flip` with the same automorphism and unit.
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        HomAlgebra {
            object: self.object.clone(),
            mult: &self.mult * &flip_matrix(d, d),
            unit: self.unit.clone(),
        }
    }
}

impl<F: Scalar> HomCoalgebra<F> {
    pub fn new(object: HomObject<F>, comult: Matrix<F>, counit: Vec<F>) -> Result<Self> {
        check_comult_shape(object.dim(), &comult, &counit)?;
        Ok(HomCoalgebra {
            object,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn object(&self) -> &HomObject<F> {
        &self.object
    }

    pub fn gamma(&self) -> &Matrix<F> {
        self.object.mu()
    }

    pub fn comult(&self) -> &Matrix<F> {
        &self.comult
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn constants(&self) -> Tensor3<F> {
        let d = self.dim();
        Tensor3::from_coproduct_matrix(d, d, &self.comult).expect("shape checked at construction")
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let g = self.gamma();
        let gi = self.object.mu_inv();
        let id = Matrix::identity(d);
        let e = row(&self.counit);
        let delta = &self.comult;
        let mut r = Report::new("hom-coalgebra");
        r.push(compare_on_basis(
            "comultiplicativity",
            &(delta * g),
            &(&g.kron(g) * delta),
            &[d],
        ));
        r.push(compare_on_basis("counit_invariance", &(&e * g), &e, &[d]));
        r.push(compare_on_basis(
            "hom_coassociativity",
            &(&gi.kron(delta) * delta),
            &(&delta.kron(gi) * delta),
            &[d],
        ));
        r.push(compare_on_basis(
            "counit_right",
            &(&id.kron(&e) * delta),
            gi,
            &[d],
        ));
        r.push(compare_on_basis(
            "counit_left",
            &(&e.kron(&id) * delta),
            gi,
            &[d],
        ));
        r
    }
}

/// Checks shared by Hom- and classical bialgebras: `Δ` and `ε` are unital
/// algebra maps, with the componentwise product on `H⊗H`.
fn compatibility<F: Scalar>(
    mult: &Matrix<F>,
    unit: &[F],
    comult: &Matrix<F>,
    counit: &[F],
    report: &mut Report,
) {
    let d = unit.len();
    let u = column(unit);
    let e = row(counit);
    let mult2 = &mult.kron(mult) * &interchange(d, d);
    report.push(compare_on_basis(
        "comult_multiplicative",
        &(comult * mult),
        &(&mult2 * &comult.kron(comult)),
        &[d, d],
    ));
    report.push(compare_on_basis(
        "comult_unit",
        &(comult * &u),
        &u.kron(&u),
        &[1],
    ));
    report.push(compare_on_basis(
        "counit_multiplicative",
        &(&e * mult),
        &e.kron(&e),
        &[d, d],
    ));
    report.push(compare_on_basis(
        "counit_unit",
        &(&e * &u),
        &Matrix::identity(1),
        &[1],
    ));
}

impl<F: Scalar> HomBialgebra<F> {
    pub fn new(algebra: HomAlgebra<F>, coalgebra: HomCoalgebra<F>) -> Result<Self> {
        if algebra.object != coalgebra.object {
            return Err(Error::InvalidInput(
                "algebra and coalgebra must share the same object".into(),
            ));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn object(&self) -> &HomObject<F> {
        &self.algebra.object
    }

    pub fn alpha(&self) -> &Matrix<F> {
        self.algebra.alpha()
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("hom-bialgebra");
        r.absorb("algebra", self.algebra.check());
        r.absorb("coalgebra", self.coalgebra.check());
        let mut c = Report::new("");
        compatibility(
            &self.algebra.mult,
            &self.algebra.unit,
            &self.coalgebra.comult,
            &self.coalgebra.counit,
            &mut c,
        );
        r.absorb("bialgebra", c);
        r
    }

    /// `η ∘ ε`
    pub fn unit_counit(&self) -> Matrix<F> {
        &column(&self.algebra.unit) * &row(&self.coalgebra.counit)
    }
}

impl<F: Scalar> HomHopfAlgebra<F> {
    pub fn new(bialgebra: HomBialgebra<F>, antipode: Matrix<F>) -> Result<Self> {
        let d = bialgebra.dim();
        if antipode.rows() != d || antipode.cols() != d {
            return Err(mismatch(format!("antipode must be {d}x{d}")));
        }
        Ok(HomHopfAlgebra {
            bialgebra,
            antipode,
        })
    }

    pub fn bialgebra(&self) -> &HomBialgebra<F> {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.bialgebra.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.bialgebra.coalgebra
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn object(&self) -> &HomObject<F> {
        self.bialgebra.object()
    }

    pub fn alpha(&self) -> &Matrix<F> {
        self.bialgebra.alpha()
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let mut r = self.bialgebra.check();
        r.subject = "hom-hopf algebra".into();
        let s = &self.antipode;
        let a = self.alpha();
        let c = self.coalgebra();
        let alg = self.algebra();
        let ee = self.bialgebra.unit_counit();
        let id = Matrix::identity(d);
        r.push(compare_on_basis(
            "antipode.commutes_with_alpha",
            &(s * a),
            &(a * s),
            &[d],
        ));
        let left = convolution(s, &id, c, alg).expect("antipode shape checked at construction");
        let right = convolution(&id, s, c, alg).expect("antipode shape checked at construction");
        r.push(compare_on_basis("antipode.left", &left, &ee, &[d]));
        r.push(compare_on_basis("antipode.right", &right, &ee, &[d]));
        r
    }
}

impl<F: Scalar> ClassicalAlgebra<F> {
    pub fn new(mult: Matrix<F>, unit: Vec<F>) -> Result<Self> {
        check_mult_shape(unit.len(), &mult, &unit)?;
        Ok(ClassicalAlgebra { mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Matrix<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.mult.apply(&crate::kernel::tensor_vectors(&[a, b]))
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let id = Matrix::identity(d);
        let u = column(&self.unit);
        let mut r = Report::new("algebra");
        r.push(compare_on_basis(
            "associativity",
            &(&self.mult * &id.kron(&self.mult)),
            &(&self.mult * &self.mult.kron(&id)),
            &[d, d, d],
        ));
        r.push(compare_on_basis(
            "unitality_right",
            &(&self.mult * &id.kron(&u)),
            &id,
            &[d],
        ));
        r.push(compare_on_basis(
            "unitality_left",
            &(&self.mult * &u.kron(&id)),
            &id,
            &[d],
        ));
        r
    }
}

impl<F: Scalar> ClassicalCoalgebra<F> {
    pub fn new(comult: Matrix<F>, counit: Vec<F>) -> Result<Self> {
        check_comult_shape(counit.len(), &comult, &counit)?;
        Ok(ClassicalCoalgebra { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult(&self) -> &Matrix<F> {
        &self.comult
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn check(&self) -> Report {
        let d = self.dim();
        let id = Matrix::identity(d);
        let e = row(&self.counit);
        let delta = &self.comult;
        let mut r = Report::new("coalgebra");
        r.push(compare_on_basis(
            "coassociativity",
            &(&id.kron(delta) * delta),
            &(&delta.kron(&id) * delta),
            &[d],
        ));
        r.push(compare_on_basis(
            "counit_right",
            &(&id.kron(&e) * delta),
            &id,
            &[d],
        ));
        r.push(compare_on_basis(
            "counit_left",
            &(&e.kron(&id) * delta),
            &id,
            &[d],
        ));
        r
    }
}

impl<F: Scalar> ClassicalBialgebra<F> {
    pub fn new(algebra: ClassicalAlgebra<F>, coalgebra: ClassicalCoalgebra<F>) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(mismatch("algebra and coalgebra dimensions differ"));
        }
        Ok(ClassicalBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &ClassicalAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &ClassicalCoalgebra<F> {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("bialgebra");
        r.absorb("algebra", self.algebra.check());
        r.absorb("coalgebra", self.coalgebra.check());
        let mut c = Report::new("");
        compatibility(
            &self.algebra.mult,
            &self.algebra.unit,
            &self.coalgebra.comult,
            &self.coalgebra.counit,
            &mut c,
        );
        r.absorb("bialgebra", c);
        r
    }

    /// The same data viewed as a Hom-bialgebra with identity automorphism.
    pub fn as_hom(&self) -> HomBialgebra<F> {
        let obj = HomObject::trivial(self.dim());
        HomBialgebra {
            algebra: HomAlgebra {
                object: obj.clone(),
                mult: self.algebra.mult.clone(),
                unit: self.algebra.unit.clone(),
            },
            coalgebra: HomCoalgebra {
                object: obj,
                comult: self.coalgebra.comult.clone(),
                counit: self.coalgebra.counit.clone(),
            },
        }
    }
}
