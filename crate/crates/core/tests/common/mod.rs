#![allow(dead_code)]

use homcas::catalog;
use homcas::homalgebra::{twist_hopf, HomHopfAlgebra};
use homcas::homgroup::{automorphism_from_exponent, cyclic_group};
use homcas::homspace::HomObject;
use homcas::{QMatrix, Scalar, Q};
use rand::rngs::StdRng;
use rand::Rng;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn qr(p: i64, d: i64) -> Q {
    Q::ratio(p, d)
}

pub fn ints(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_ints(rows)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Q {
    Q::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

/// Lower unitriangular times upper triangular with nonzero diagonal, then a
/// row permutation: always invertible, often dense.
pub fn random_invertible(rng: &mut StdRng, n: usize) -> QMatrix {
    let l = QMatrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Greater => small_rational(rng),
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Less => q(0),
    });
    let u = QMatrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Less => small_rational(rng),
        std::cmp::Ordering::Equal => {
            let k = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                q(k)
            } else {
                qr(-1, k)
            }
        }
        std::cmp::Ordering::Greater => q(0),
    });
    let mut image: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        image.swap(i, rng.gen_range(0..=i));
    }
    &QMatrix::permutation(&image) * &(&l * &u)
}

pub fn random_object(rng: &mut StdRng, max_dim: usize) -> HomObject<Q> {
    let n = rng.gen_range(1..=max_dim);
    HomObject::new(random_invertible(rng, n)).unwrap()
}

/// Q[C₃] with φ(g) = g², twisted and with its classical antipode.
pub fn c3_twisted() -> HomHopfAlgebra<Q> {
    let g = cyclic_group(3).unwrap();
    let phi = automorphism_from_exponent(&g, 2).unwrap().matrix();
    twist_hopf(
        &catalog::group_bialgebra(&g),
        &catalog::group_antipode(&g),
        &phi,
    )
    .unwrap()
}

/// Naive Kronecker product straight from the index formula.
pub fn kron_oracle(a: &QMatrix, b: &QMatrix) -> QMatrix {
    QMatrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |r, c| {
        a.get(r / b.rows(), c / b.cols()).clone() * b.get(r % b.rows(), c % b.cols()).clone()
    })
}

pub fn e(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()
}

/// `x₁ ⊗ … ⊗ x_k` as a flat vector, i-major.
pub fn tensor(vs: &[Vec<Q>]) -> Vec<Q> {
    vs.iter().fold(vec![q(1)], |acc, v| {
        let mut out = Vec::with_capacity(acc.len() * v.len());
        for a in &acc {
            for b in v {
                out.push(a.clone() * b.clone());
            }
        }
        out
    })
}
