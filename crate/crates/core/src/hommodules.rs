//! Hom-modules, Hom-comodules and Hom-Hopf modules, their tensor products,
//! coinvariants, the free Hopf module functor `F = − ⊗ H` and the maps
//! realising `M ≅ M^{coH} ⊗ H`.
//!
//! Actions are `dim M x (dim A · dim M)` matrices on `a ⊗ m` (left) or
//! `m ⊗ a` (right); coactions are `(dim M · dim C) x dim M` matrices into
//! `M ⊗ C`. Hopf modules are right modules and right comodules.

use crate::error::{mismatch, Result};
use crate::homalgebra::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra};
use crate::homspace::{compare_on_basis, flip_matrix, HomMorphism, HomObject};
use crate::kernel::{Matrix, Subspace};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomModule<F> {
    object: HomObject<F>,
    algebra: HomAlgebra<F>,
    action: Matrix<F>,
    side: Side,
}

/// A right Hom-comodule.
#[derive(Clone, Debug, PartialEq)]
pub struct HomComodule<F> {
    object: HomObject<F>,
    coalgebra: HomCoalgebra<F>,
    coaction: Matrix<F>,
}

/// A right Hom-module and right Hom-comodule over the same Hom-Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HomHopfModule<F> {
    hopf: HomHopfAlgebra<F>,
    module: HomModule<F>,
    comodule: HomComodule<F>,
}

/// `a⊗b⊗c⊗d ↦ a⊗c⊗b⊗d` for factors of the given dimensions.
pub fn middle_swap<F: Scalar>(a: usize, b: usize, c: usize, d: usize) -> Matrix<F> {
    Matrix::identity(a)
        .kron(&flip_matrix(b, c))
        .kron(&Matrix::identity(d))
}

fn column<F: Scalar>(v: &[F]) -> Matrix<F> {
    Matrix::column_vector(v)
}

fn row<F: Scalar>(v: &[F]) -> Matrix<F> {
    Matrix::row_vector(v)
}

impl<F: Scalar> HomModule<F> {
    pub fn new(
        object: HomObject<F>,
        algebra: HomAlgebra<F>,
        action: Matrix<F>,
        side: Side,
    ) -> Result<Self> {
        let (m, a) = (object.dim(), algebra.dim());
        if action.rows() != m || action.cols() != m * a {
            return Err(mismatch(format!("action must be {m}x{}", m * a)));
        }
        Ok(HomModule {
            object,
            algebra,
            action,
            side,
        })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(algebra: &HomAlgebra<F>, side: Side) -> Self {
        HomModule {
            object: algebra.object().clone(),
            algebra: algebra.clone(),
            action: algebra.mult().clone(),
            side,
        }
    }

    /// `h·x = ε(h)x` on `(k, id)`.
    pub fn trivial(h: &HomBialgebra<F>, side: Side) -> Self {
        HomModule {
            object: HomObject::unit(),
            algebra: h.algebra().clone(),
            action: row(h.coalgebra().counit()),
            side,
        }
    }

    pub fn object(&self) -> &HomObject<F> {
        &self.object
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn action(&self) -> &Matrix<F> {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn act(&self, a: &[F], m: &[F]) -> Vec<F> {
        let x = match self.side {
            Side::Left => crate::kernel::tensor_vectors(&[a, m]),
            Side::Right => crate::kernel::tensor_vectors(&[m, a]),
        };
        self.action.apply(&x)
    }

    pub fn check(&self) -> Report {
        let (m, a) = (self.dim(), self.algebra.dim());
        let psi = &self.action;
        let mu = self.object.mu();
        let alpha = self.algebra.alpha();
        let mult = self.algebra.mult();
        let u = column(self.algebra.unit());
        let id_m = Matrix::identity(m);
        let mut r = Report::new(match self.side {
            Side::Left => "left hom-module",
            Side::Right => "right hom-module",
        });
        match self.side {
            Side::Left => {
                r.push(compare_on_basis(
                    "hom_associativity",
                    &(psi * &alpha.kron(psi)),
                    &(psi * &mult.kron(mu)),
                    &[a, a, m],
                ));
                r.push(compare_on_basis("unit", &(psi * &u.kron(&id_m)), mu, &[m]));
                r.push(compare_on_basis(
                    "morphism",
                    &(mu * psi),
                    &(psi * &alpha.kron(mu)),
                    &[a, m],
                ));
            }
            Side::Right => {
                r.push(compare_on_basis(
                    "hom_associativity",
                    &(psi * &psi.kron(alpha)),
                    &(psi * &mu.kron(mult)),
                    &[m, a, a],
                ));
                r.push(compare_on_basis("unit", &(psi * &id_m.kron(&u)), mu, &[m]));
                r.push(compare_on_basis(
                    "morphism",
                    &(mu * psi),
                    &(psi * &mu.kron(alpha)),
                    &[m, a],
                ));
            }
        }
        r
    }
}

impl<F: Scalar> HomComodule<F> {
    pub fn new(
        object: HomObject<F>,
        coalgebra: HomCoalgebra<F>,
        coaction: Matrix<F>,
    ) -> Result<Self> {
        let (m, c) = (object.dim(), coalgebra.dim());
        if coaction.rows() != m * c || coaction.cols() != m {
            return Err(mismatch(format!("coaction must be {}x{m}", m * c)));
        }
        Ok(HomComodule {
            object,
            coalgebra,
            coaction,
        })
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(coalgebra: &HomCoalgebra<F>) -> Self {
        HomComodule {
            object: coalgebra.object().clone(),
            coalgebra: coalgebra.clone(),
            coaction: coalgebra.comult().clone(),
        }
    }

    /// `x ↦ x ⊗ 1` on `(k, id)`.
    pub fn trivial(h: &HomBialgebra<F>) -> Self {
        HomComodule {
            object: HomObject::unit(),
            coalgebra: h.coalgebra().clone(),
            coaction: column(h.algebra().unit()),
        }
    }

    pub fn object(&self) -> &HomObject<F> {
        &self.object
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn coaction(&self) -> &Matrix<F> {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn check(&self) -> Report {
        let m = self.dim();
        let rho = &self.coaction;
        let mu = self.object.mu();
        let mu_inv = self.object.mu_inv();
        let gamma = self.coalgebra.gamma();
        let gamma_inv = self.coalgebra.object().mu_inv();
        let delta = self.coalgebra.comult();
        let mut r = Report::new("right hom-comodule");
        r.push(compare_on_basis(
            "hom_coassociativity",
            &(&mu_inv.kron(delta) * rho),
            &(&rho.kron(gamma_inv) * rho),
            &[m],
        ));
        let eps = row(self.coalgebra.counit());
        r.push(compare_on_basis(
            "counit",
            &(&Matrix::identity(m).kron(&eps) * rho),
            mu_inv,
            &[m],
        ));
        r.push(compare_on_basis(
            "morphism",
            &(rho * mu),
            &(&mu.kron(gamma) * rho),
            &[m],
        ));
        r
    }
}

impl<F: Scalar> HomHopfModule<F> {
    pub fn new(
        hopf: HomHopfAlgebra<F>,
        object: HomObject<F>,
        action: Matrix<F>,
        coaction: Matrix<F>,
    ) -> Result<Self> {
        let module = HomModule::new(object.clone(), hopf.algebra().clone(), action, Side::Right)?;
        let comodule = HomComodule::new(object, hopf.coalgebra().clone(), coaction)?;
        Ok(HomHopfModule {
            hopf,
            module,
            comodule,
        })
    }

    /// `H` with right multiplication and `Δ`.
    pub fn regular(hopf: &HomHopfAlgebra<F>) -> Self {
        HomHopfModule {
            hopf: hopf.clone(),
            module: HomModule::regular(hopf.algebra(), Side::Right),
            comodule: HomComodule::regular(hopf.coalgebra()),
        }
    }

    pub fn hopf(&self) -> &HomHopfAlgebra<F> {
        &self.hopf
    }

    pub fn object(&self) -> &HomObject<F> {
        self.module.object()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn action(&self) -> &Matrix<F> {
        self.module.action()
    }

    pub fn coaction(&self) -> &Matrix<F> {
        self.comodule.coaction()
    }

    pub fn module(&self) -> &HomModule<F> {
        &self.module
    }

    pub fn comodule(&self) -> &HomComodule<F> {
        &self.comodule
    }

    /// `ρ(mh) = m₍₀₎h₍₁₎ ⊗ m₍₁₎h₍₂₎`
    pub fn compatibility(&self) -> AxiomResult {
        let (m, h) = (self.dim(), self.hopf.dim());
        let psi = self.action();
        let rho = self.coaction();
        let lhs = rho * psi;
        let rhs = &(&psi.kron(self.hopf.algebra().mult()) * &middle_swap(m, h, h, h))
            * &rho.kron(self.hopf.coalgebra().comult());
        compare_on_basis("compatibility", &lhs, &rhs, &[m, h])
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("right hom-hopf module");
        r.absorb("module", self.module.check());
        r.absorb("comodule", self.comodule.check());
        r.push(self.compatibility());
        r
    }
}

/// `h·(m⊗n) = h₍₁₎m ⊗ h₍₂₎n` on left modules.
pub fn tensor_modules<F: Scalar>(
    m: &HomModule<F>,
    n: &HomModule<F>,
    h: &HomBialgebra<F>,
) -> Result<HomModule<F>> {
    if m.side != Side::Left || n.side != Side::Left {
        return Err(crate::Error::InvalidInput(
            "tensor products are formed for left modules".into(),
        ));
    }
    if m.algebra != *h.algebra() || n.algebra != *h.algebra() {
        return Err(crate::Error::InvalidInput(
            "modules are over a different algebra".into(),
        ));
    }
    let (dh, dm, dn) = (h.dim(), m.dim(), n.dim());
    let action = &(&m.action.kron(&n.action) * &middle_swap(dh, dh, dm, dn))
        * &h.coalgebra().comult().kron(&Matrix::identity(dm * dn));
    HomModule::new(
        m.object.tensor(&n.object),
        h.algebra().clone(),
        action,
        Side::Left,
    )
}

/// `ρ(m⊗n) = m₍₀₎ ⊗ n₍₀₎ ⊗ m₍₁₎n₍₁₎`
pub fn tensor_comodules<F: Scalar>(
    m: &HomComodule<F>,
    n: &HomComodule<F>,
    h: &HomBialgebra<F>,
) -> Result<HomComodule<F>> {
    if m.coalgebra != *h.coalgebra() || n.coalgebra != *h.coalgebra() {
        return Err(crate::Error::InvalidInput(
            "comodules are over a different coalgebra".into(),
        ));
    }
    let (dh, dm, dn) = (h.dim(), m.dim(), n.dim());
    let coaction = &(&Matrix::identity(dm * dn).kron(h.algebra().mult())
        * &middle_swap(dm, dh, dn, dh))
        * &m.coaction.kron(&n.coaction);
    HomComodule::new(m.object.tensor(&n.object), h.coalgebra().clone(), coaction)
}

/// Whether `f` commutes with the actions of two modules over the same algebra.
pub fn is_module_map<F: Scalar>(f: &Matrix<F>, m: &HomModule<F>, n: &HomModule<F>) -> AxiomResult {
    let a = m.algebra.dim();
    let ia = Matrix::identity(a);
    let (lifted, dims) = match m.side {
        Side::Left => (ia.kron(f), [a, m.dim()]),
        Side::Right => (f.kron(&ia), [m.dim(), a]),
    };
    compare_on_basis("linear", &(f * &m.action), &(&n.action * &lifted), &dims)
}

pub fn is_comodule_map<F: Scalar>(
    f: &Matrix<F>,
    m: &HomComodule<F>,
    n: &HomComodule<F>,
) -> AxiomResult {
    let c = m.coalgebra.dim();
    compare_on_basis(
        "colinear",
        &(&f.kron(&Matrix::identity(c)) * &m.coaction),
        &(&n.coaction * f),
        &[m.dim()],
    )
}

/// `F(N) = N ⊗ H` with `ψ((n⊗h)⊗g) = ν(n) ⊗ hα⁻¹(g)` and
/// `ρ(n⊗h) = (ν⁻¹(n) ⊗ h₍₁₎) ⊗ α(h₍₂₎)`.
pub fn functor_f<F: Scalar>(n: &HomObject<F>, h: &HomHopfAlgebra<F>) -> HomHopfModule<F> {
    let alpha_inv = h.object().mu_inv();
    let dh = h.dim();
    let action = n
        .mu()
        .kron(&(h.algebra().mult() * &Matrix::identity(dh).kron(alpha_inv)));
    let coaction = n
        .mu_inv()
        .kron(&(&Matrix::identity(dh).kron(h.alpha()) * h.coalgebra().comult()));
    HomHopfModule::new(h.clone(), n.tensor(h.object()), action, coaction).expect("shapes agree")
}

/// `F(f) = f ⊗ id_H`
pub fn functor_f_map<F: Scalar>(f: &HomMorphism<F>, h: &HomHopfAlgebra<F>) -> Matrix<F> {
    f.map().kron(&Matrix::identity(h.dim()))
}

/// `M^{coH} = {m | ρ(m) = μ⁻¹(m) ⊗ 1}`, computed as a kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct Coinvariants<F> {
    pub space: Subspace<F>,
    pub mu_stable: bool,
}

pub fn coinvariants<F: Scalar>(m: &HomHopfModule<F>) -> Coinvariants<F> {
    let condition = m.coaction() - &m.object().mu_inv().kron(&column(m.hopf.algebra().unit()));
    let space = condition.kernel();
    let mu_stable =
        space.is_invariant_under(m.object().mu()) && space.is_invariant_under(m.object().mu_inv());
    Coinvariants { space, mu_stable }
}

/// The maps `ε_M : M^{coH} ⊗ H -> M` and its inverse `α̂`, in coordinates
/// over the echelon basis of `M^{coH}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalMaps<F> {
    /// `dim M x c`, columns spanning `M^{coH}`.
    pub basis: Matrix<F>,
    /// `c x dim M`, a left inverse of `basis`.
    pub coordinates: Matrix<F>,
    /// `ε_M(v⊗h) = vh`
    pub epsilon: Matrix<F>,
    /// `α̂(m) = m₍₀₎₍₀₎S(m₍₀₎₍₁₎) ⊗ m₍₁₎`, before passing to coordinates.
    pub alpha_raw: Matrix<F>,
    pub alpha_hat: Matrix<F>,
}

fn coordinate_maps<F: Scalar>(space: &Subspace<F>) -> (Matrix<F>, Matrix<F>) {
    let basis = space.basis_matrix().transpose();
    let n = space.ambient_dim();
    let coordinates = Matrix::from_fn(space.dim(), n, |r, c| {
        if space.pivots()[r] == c {
            F::one()
        } else {
            F::zero()
        }
    });
    (basis, coordinates)
}

pub fn fundamental_maps<F: Scalar>(m: &HomHopfModule<F>) -> FundamentalMaps<F> {
    let dh = m.hopf.dim();
    let ih = Matrix::identity(dh);
    let (basis, coordinates) = coordinate_maps(&coinvariants(m).space);
    let psi = m.action();
    let rho = m.coaction();
    let epsilon = psi * &basis.kron(&ih);
    let with_s = psi * &Matrix::identity(m.dim()).kron(m.hopf.antipode());
    let alpha_raw = &(&with_s.kron(&ih) * &rho.kron(&ih)) * rho;
    let alpha_hat = &coordinates.kron(&ih) * &alpha_raw;
    FundamentalMaps {
        basis,
        coordinates,
        epsilon,
        alpha_raw,
        alpha_hat,
    }
}

/// `M ≅ M^{coH} ⊗ H`: both composites, the coinvariance of `m₍₀₎S(m₍₁₎)`,
/// and the triangle identity on `M^{coH}`.
pub fn check_fundamental<F: Scalar>(m: &HomHopfModule<F>) -> Report {
    let dh = m.hopf.dim();
    let ih = Matrix::identity(dh);
    let co = coinvariants(m);
    let maps = fundamental_maps(m);
    let c = co.space.dim();
    let condition = m.coaction() - &m.object().mu_inv().kron(&column(m.hopf.algebra().unit()));
    let projector = &maps.basis * &maps.coordinates;
    let mut r = Report::new("fundamental theorem, counit side");
    r.push(if co.mu_stable {
        AxiomResult::pass("coinvariants_mu_stable", c)
    } else {
        AxiomResult::fail(
            "coinvariants_mu_stable",
            c,
            vec![],
            "μ does not preserve the coinvariants",
        )
    });
    r.push(compare_on_basis(
        "alpha_hat_lands_in_coinvariants",
        &(&projector.kron(&ih) * &maps.alpha_raw),
        &maps.alpha_raw,
        &[m.dim()],
    ));
    r.push(compare_on_basis(
        "epsilon_after_alpha_hat",
        &(&maps.epsilon * &maps.alpha_hat),
        &Matrix::identity(m.dim()),
        &[m.dim()],
    ));
    r.push(compare_on_basis(
        "alpha_hat_after_epsilon",
        &(&maps.alpha_hat * &maps.epsilon),
        &Matrix::identity(c * dh),
        &[c, dh],
    ));
    let with_s = m.action() * &Matrix::identity(m.dim()).kron(m.hopf.antipode());
    let key = &with_s * m.coaction();
    r.push(compare_on_basis(
        "m0_s_m1_coinvariant",
        &(&condition * &key),
        &Matrix::zeros(condition.rows(), m.dim()),
        &[m.dim()],
    ));
    let eta_g = m.object().mu_inv().kron(&column(m.hopf.algebra().unit()));
    r.push(compare_on_basis(
        "triangle_g",
        &(&(m.action() * &eta_g) * &maps.basis),
        &maps.basis,
        &[c],
    ));
    r
}

/// `η_N(n) = ν⁻¹(n) ⊗ 1` and `β(n⊗h) = ν(n)ε(h)` between `N` and
/// `F(N)^{coH}`, and the triangle identity on `F(N)`.
pub fn check_fundamental_unit<F: Scalar>(n: &HomObject<F>, h: &HomHopfAlgebra<F>) -> Report {
    let fnh = functor_f(n, h);
    let co = coinvariants(&fnh);
    let (basis, coordinates) = coordinate_maps(&co.space);
    let unit = column(h.algebra().unit());
    let eta = n.mu_inv().kron(&unit);
    let beta = n.mu().kron(&row(h.coalgebra().counit()));
    let (dn, c) = (n.dim(), co.space.dim());
    let eta_coords = &coordinates * &eta;
    let beta_restricted = &beta * &basis;
    let mut r = Report::new("fundamental theorem, unit side");
    r.push(compare_on_basis(
        "eta_lands_in_coinvariants",
        &(&basis * &eta_coords),
        &eta,
        &[dn],
    ));
    r.push(compare_on_basis(
        "beta_after_eta",
        &(&beta_restricted * &eta_coords),
        &Matrix::identity(dn),
        &[dn],
    ));
    r.push(compare_on_basis(
        "eta_after_beta",
        &(&eta_coords * &beta_restricted),
        &Matrix::identity(c),
        &[c],
    ));
    let dh = h.dim();
    r.push(compare_on_basis(
        "triangle_f",
        &(fnh.action() * &eta.kron(&Matrix::identity(dh))),
        &Matrix::identity(dn * dh),
        &[dn, dh],
    ));
    r
}
