//! Objects with an automorphism, morphisms commuting with it, and the
//! twisted monoidal structure: associator, unitors, braiding and left duals.

use crate::error::{mismatch, Error, Result};
use crate::kernel::{multi_index, Matrix};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

/// A finite-dimensional space `M` with an invertible `μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomObject<F> {
    mu: Matrix<F>,
    mu_inv: Matrix<F>,
}

/// A linear map `f` with `ν ∘ f = f ∘ μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomMorphism<F> {
    source: HomObject<F>,
    target: HomObject<F>,
    map: Matrix<F>,
}

/// Left dual `(M*, (μ*)⁻¹)` with twisted evaluation and coevaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftDual<F> {
    pub dual: HomObject<F>,
    /// `M* ⊗ M -> I`
    pub eval: HomMorphism<F>,
    /// `I -> M ⊗ M*`
    pub coeval: HomMorphism<F>,
}

impl<F: Scalar> HomObject<F> {
    pub fn new(mu: Matrix<F>) -> Result<Self> {
        if !mu.is_square() {
            return Err(mismatch(format!(
                "automorphism must be square, got {}x{}",
                mu.rows(),
                mu.cols()
            )));
        }
        let mu_inv = mu.invert()?;
        Ok(HomObject { mu, mu_inv })
    }

    pub fn trivial(dim: usize) -> Self {
        HomObject {
            mu: Matrix::identity(dim),
            mu_inv: Matrix::identity(dim),
        }
    }

    /// The unit object `(Q¹, [1])`.
    pub fn unit() -> Self {
        Self::trivial(1)
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn mu(&self) -> &Matrix<F> {
        &self.mu
    }

    pub fn mu_inv(&self) -> &Matrix<F> {
        &self.mu_inv
    }

    /// `μ^k` for any integer `k`.
    pub fn mu_pow(&self, k: i64) -> Matrix<F> {
        if k >= 0 {
            self.mu.pow(k as u32)
        } else {
            self.mu_inv.pow(k.unsigned_abs() as u32)
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        HomObject {
            mu: self.mu.kron(&other.mu),
            mu_inv: self.mu_inv.kron(&other.mu_inv),
        }
    }

    /// Tensor product of several objects; the unit for an empty list.
    pub fn tensor_all(objs: &[&Self]) -> Self {
        match objs.split_first() {
            None => Self::unit(),
            Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, o| acc.tensor(o)),
        }
    }

    pub fn identity_morphism(&self) -> HomMorphism<F> {
        HomMorphism {
            source: self.clone(),
            target: self.clone(),
            map: Matrix::identity(self.dim()),
        }
    }

    pub fn left_dual(&self) -> LeftDual<F> {
        let n = self.dim();
        let mu_t = self.mu.transpose();
        let mu_t_inv = self.mu_inv.transpose();
        let dual = HomObject {
            mu: mu_t_inv.clone(),
            mu_inv: mu_t.clone(),
        };
        let mut d = Matrix::zeros(1, n * n);
        let mut b = Matrix::zeros(n * n, 1);
        for i in 0..n {
            d.set(0, i * n + i, F::one());
            b.set(i * n + i, 0, F::one());
        }
        let eval = &d * &mu_t.kron(&self.mu);
        let coeval = &self.mu_inv.kron(&mu_t_inv) * &b;
        LeftDual {
            eval: HomMorphism {
                source: dual.tensor(self),
                target: Self::unit(),
                map: eval,
            },
            coeval: HomMorphism {
                source: Self::unit(),
                target: self.tensor(&dual),
                map: coeval,
            },
            dual,
        }
    }
}

impl<F: Scalar> HomMorphism<F> {
    pub fn new(source: HomObject<F>, target: HomObject<F>, map: Matrix<F>) -> Result<Self> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(mismatch(format!(
                "map is {}x{} but objects have dims {} -> {}",
                map.rows(),
                map.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let lhs = target.mu() * &map;
        let rhs = &map * source.mu();
        if let Some((r, c)) = lhs.first_difference(&rhs) {
            return Err(Error::NotHomMorphism(format!(
                "(ν f)[{r},{c}] = {} but (f μ)[{r},{c}] = {}",
                lhs.get(r, c),
                rhs.get(r, c)
            )));
        }
        Ok(HomMorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &HomObject<F> {
        &self.source
    }

    pub fn target(&self) -> &HomObject<F> {
        &self.target
    }

    pub fn map(&self) -> &Matrix<F> {
        &self.map
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if first.target != self.source {
            return Err(mismatch("composable morphisms must share an object"));
        }
        Ok(HomMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            map: &self.map * &first.map,
        })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        HomMorphism {
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            map: self.map.kron(&other.map),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(HomMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: self.map.invert()?,
        })
    }
}

/// `ã_{M,N,P} : (M⊗N)⊗P -> M⊗(N⊗P)`, `(m⊗n)⊗p ↦ μ(m)⊗(n⊗π⁻¹(p))`.
pub fn associator<F: Scalar>(
    m: &HomObject<F>,
    n: &HomObject<F>,
    p: &HomObject<F>,
) -> HomMorphism<F> {
    let map = m.mu().kron(&Matrix::identity(n.dim())).kron(p.mu_inv());
    let source = m.tensor(n).tensor(p);
    let target = m.tensor(&n.tensor(p));
    HomMorphism {
        source,
        target,
        map,
    }
}

/// `l̃_M : I⊗M -> M`, `x⊗m ↦ x μ(m)`.
pub fn left_unitor<F: Scalar>(m: &HomObject<F>) -> HomMorphism<F> {
    HomMorphism {
        source: HomObject::unit().tensor(m),
        target: m.clone(),
        map: m.mu().clone(),
    }
}

/// `r̃_M : M⊗I -> M`, `m⊗x ↦ x μ(m)`.
pub fn right_unitor<F: Scalar>(m: &HomObject<F>) -> HomMorphism<F> {
    HomMorphism {
        source: m.tensor(&HomObject::unit()),
        target: m.clone(),
        map: m.mu().clone(),
    }
}

/// Flip permutation of `F^a ⊗ F^b` onto `F^b ⊗ F^a`.
pub fn flip_matrix<F: Scalar>(a: usize, b: usize) -> Matrix<F> {
    let image: Vec<usize> = (0..a * b).map(|x| (x % b) * a + x / b).collect();
    Matrix::permutation(&image)
}

/// `c_{M,N} : M⊗N -> N⊗M`, the underlying flip.
pub fn braiding<F: Scalar>(m: &HomObject<F>, n: &HomObject<F>) -> HomMorphism<F> {
    HomMorphism {
        source: m.tensor(n),
        target: n.tensor(m),
        map: flip_matrix(m.dim(), n.dim()),
    }
}

/// Basis of all HomMorphisms `source -> target`.
pub fn morphism_space<F: Scalar>(source: &HomObject<F>, target: &HomObject<F>) -> Vec<Matrix<F>> {
    let (m, n) = (source.dim(), target.dim());
    // row-major vec(f): vec(ν f) = (ν ⊗ I) vec f, vec(f μ) = (I ⊗ μᵀ) vec f
    let system = &target.mu().kron(&Matrix::identity(m))
        - &Matrix::identity(n).kron(&source.mu().transpose());
    system
        .kernel()
        .basis()
        .iter()
        .map(|v| Matrix::from_vec(n, m, v.clone()).expect("kernel vector has n*m entries"))
        .collect()
}

/// Compares two equally shaped matrices column by column; the witness is the
/// first basis vector on which they disagree.
pub fn compare_maps<F: Scalar>(axiom: &str, lhs: &Matrix<F>, rhs: &Matrix<F>) -> AxiomResult {
    compare_on_basis(axiom, lhs, rhs, &[lhs.cols()])
}

/// Like [`compare_maps`] for a domain that is a tensor product with factor
/// dimensions `dims`; the witness names the failing basis tuple.
pub fn compare_on_basis<F: Scalar>(
    axiom: &str,
    lhs: &Matrix<F>,
    rhs: &Matrix<F>,
    dims: &[usize],
) -> AxiomResult {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return AxiomResult::fail(
            axiom,
            0,
            vec![],
            format!(
                "shapes differ: {}x{} vs {}x{}",
                lhs.rows(),
                lhs.cols(),
                rhs.rows(),
                rhs.cols()
            ),
        );
    }
    // Column-major scan so the witness is the lexicographically first tuple.
    for c in 0..lhs.cols() {
        for r in 0..lhs.rows() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return AxiomResult::fail(
                    axiom,
                    c + 1,
                    multi_index(dims, c),
                    format!("component {r}: {} vs {}", lhs.get(r, c), rhs.get(r, c)),
                );
            }
        }
    }
    AxiomResult::pass(axiom, lhs.cols())
}

fn id<F: Scalar>(o: &HomObject<F>) -> Matrix<F> {
    Matrix::identity(o.dim())
}

fn inv<F: Scalar>(m: &Matrix<F>) -> Matrix<F> {
    m.invert().expect("structural isomorphism")
}

pub fn pentagon<F: Scalar>(
    m: &HomObject<F>,
    n: &HomObject<F>,
    p: &HomObject<F>,
    q: &HomObject<F>,
) -> AxiomResult {
    let lhs = &(&id(m).kron(associator(n, p, q).map()) * associator(m, &n.tensor(p), q).map())
        * &associator(m, n, p).map().kron(&id(q));
    let rhs = associator(m, n, &p.tensor(q)).map() * associator(&m.tensor(n), p, q).map();
    compare_maps("pentagon", &lhs, &rhs)
}

pub fn triangle<F: Scalar>(m: &HomObject<F>, n: &HomObject<F>) -> AxiomResult {
    let i = HomObject::unit();
    let lhs = &id(m).kron(left_unitor(n).map()) * associator(m, &i, n).map();
    let rhs = right_unitor(m).map().kron(&id(n));
    compare_maps("triangle", &lhs, &rhs)
}

pub fn hexagon_h1<F: Scalar>(u: &HomObject<F>, v: &HomObject<F>, w: &HomObject<F>) -> AxiomResult {
    let lhs =
        &(associator(v, w, u).map() * braiding(u, &v.tensor(w)).map()) * associator(u, v, w).map();
    let rhs = &(&id(v).kron(braiding(u, w).map()) * associator(v, u, w).map())
        * &braiding(u, v).map().kron(&id(w));
    compare_maps("hexagon_h1", &lhs, &rhs)
}

pub fn hexagon_h2<F: Scalar>(u: &HomObject<F>, v: &HomObject<F>, w: &HomObject<F>) -> AxiomResult {
    let lhs = &(&inv(associator(w, u, v).map()) * braiding(&u.tensor(v), w).map())
        * &inv(associator(u, v, w).map());
    let rhs = &(&braiding(u, w).map().kron(&id(v)) * &inv(associator(u, w, v).map()))
        * &id(u).kron(braiding(v, w).map());
    compare_maps("hexagon_h2", &lhs, &rhs)
}

/// `r̃ ∘ (M⊗d̃) ∘ ã ∘ (b̃⊗M) ∘ l̃⁻¹ = M` and
/// `l̃ ∘ (d̃⊗M*) ∘ ã⁻¹ ∘ (M*⊗b̃) ∘ r̃⁻¹ = M*`.
pub fn zigzags<F: Scalar>(m: &HomObject<F>) -> (AxiomResult, AxiomResult) {
    let LeftDual { dual, eval, coeval } = m.left_dual();
    let first = &(&(&(right_unitor(m).map() * &id(m).kron(eval.map()))
        * associator(m, &dual, m).map())
        * &coeval.map().kron(&id(m)))
        * &inv(left_unitor(m).map());
    let second = &(&(&(left_unitor(&dual).map() * &eval.map().kron(&id(&dual)))
        * &inv(associator(&dual, m, &dual).map()))
        * &id(&dual).kron(coeval.map()))
        * &inv(right_unitor(&dual).map());
    (
        compare_maps("zigzag_left", &first, &id(m)),
        compare_maps("zigzag_right", &second, &id(&dual)),
    )
}

/// `ã ∘ ((f⊗g)⊗h) = (f⊗(g⊗h)) ∘ ã`
pub fn associator_naturality<F: Scalar>(
    f: &HomMorphism<F>,
    g: &HomMorphism<F>,
    h: &HomMorphism<F>,
) -> AxiomResult {
    let lhs =
        associator(f.target(), g.target(), h.target()).map() * &f.map().kron(g.map()).kron(h.map());
    let rhs =
        &f.map().kron(g.map()).kron(h.map()) * associator(f.source(), g.source(), h.source()).map();
    compare_maps("associator_naturality", &lhs, &rhs)
}

/// Every structural morphism is a HomMorphism.
fn structural_maps_commute<F: Scalar>(objs: &[HomObject<F>]) -> AxiomResult {
    let k = objs.len();
    let mut checked = 0;
    for i in 0..k {
        let (a, b, c) = (&objs[i], &objs[(i + 1) % k], &objs[(i + 2) % k]);
        let LeftDual { eval, coeval, .. } = a.left_dual();
        let maps = [
            associator(a, b, c),
            left_unitor(a),
            right_unitor(a),
            braiding(a, b),
            eval,
            coeval,
        ];
        for (j, m) in maps.into_iter().enumerate() {
            checked += 1;
            if HomMorphism::new(m.source.clone(), m.target.clone(), m.map.clone()).is_err() {
                return AxiomResult::fail(
                    "structural_morphisms",
                    checked,
                    vec![i, j],
                    "map does not commute with μ",
                );
            }
        }
    }
    AxiomResult::pass("structural_morphisms", checked)
}

/// Pentagon, triangle, both hexagons and both zigzags on the given objects,
/// taken cyclically where an axiom needs more objects than supplied.
pub fn verify_constraints<F: Scalar>(objs: &[HomObject<F>]) -> Report {
    let mut report = Report::new("monoidal constraints");
    if objs.is_empty() {
        return report;
    }
    let at = |i: usize| &objs[i % objs.len()];
    report.push(pentagon(at(0), at(1), at(2), at(3)));
    report.push(triangle(at(0), at(1)));
    report.push(hexagon_h1(at(0), at(1), at(2)));
    report.push(hexagon_h2(at(0), at(1), at(2)));
    for (i, o) in objs.iter().enumerate() {
        let (l, r) = zigzags(o);
        for mut z in [l, r] {
            z.axiom = format!("{}[{i}]", z.axiom);
            report.push(z);
        }
    }
    report.push(structural_maps_commute(objs));
    report
}
