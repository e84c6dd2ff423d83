mod common;

use common::*;
use homcas::homspace::{
    associator, associator_naturality, braiding, compare_maps, flip_matrix, hexagon_h1, hexagon_h2,
    left_unitor, morphism_space, pentagon, right_unitor, triangle, verify_constraints, zigzags,
    HomMorphism, HomObject,
};
use homcas::{QMatrix, Q};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `(m⊗n)⊗p ↦ μ(m)⊗(n⊗π⁻¹(p))`, evaluated on basis tensors.
fn associator_oracle(m: &HomObject<Q>, n: &HomObject<Q>, p: &HomObject<Q>) -> QMatrix {
    let (a, b, c) = (m.dim(), n.dim(), p.dim());
    let mut cols = Vec::new();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                cols.push(tensor(&[
                    m.mu().apply(&e(a, i)),
                    e(b, j),
                    p.mu_inv().apply(&e(c, k)),
                ]));
            }
        }
    }
    QMatrix::from_columns(&cols).unwrap()
}

fn random_endomorphism(rng: &mut StdRng, o: &HomObject<Q>) -> HomMorphism<Q> {
    let basis = morphism_space(o, o);
    let mut f = QMatrix::zeros(o.dim(), o.dim());
    for b in &basis {
        f = &f + &b.scale(&small_rational(rng));
    }
    HomMorphism::new(o.clone(), o.clone(), f).unwrap()
}

#[test]
fn associator_examples() {
    let two = HomObject::new(QMatrix::diagonal(&[q(2)])).unwrap();
    assert!(associator(&two, &two, &two).map().is_identity());

    let mu = ints(&[&[1, 1], &[0, 1]]);
    let m = HomObject::new(mu.clone()).unwrap();
    let triv = HomObject::trivial(1);
    assert_eq!(associator(&m, &triv, &triv).map(), &mu);
}

#[test]
fn unitor_example() {
    let m = HomObject::new(QMatrix::diagonal(&[q(2), q(3)])).unwrap();
    assert_eq!(left_unitor(&m).map().apply(&e(2, 0)), vec![q(2), q(0)]);
    assert_eq!(right_unitor(&m).map().apply(&e(2, 1)), vec![q(0), q(3)]);
}

#[test]
fn one_dimensional_dual_evaluation() {
    let m = HomObject::new(QMatrix::diagonal(&[q(2)])).unwrap();
    let d = m.left_dual();
    assert_eq!(d.dual.mu(), &QMatrix::diagonal(&[qr(1, 2)]));
    // d̃(f⊗m) = f(μ(m)) after μ* on the dual slot: 2·2
    assert_eq!(d.eval.map(), &ints(&[&[4]]));
    let (l, r) = zigzags(&m);
    assert!(l.passed && r.passed);
}

#[test]
fn block_permutation_tensor() {
    let m = HomObject::new(ints(&[&[0, 1], &[1, 0]])).unwrap();
    let n = HomObject::<Q>::trivial(2);
    let t = m.tensor(&n);
    let expected = ints(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    assert_eq!(t.mu(), &expected);
}

#[test]
fn flip_is_the_swap_of_factors() {
    let x = vec![q(1), q(2)];
    let y = vec![q(3), q(5), q(7)];
    assert_eq!(
        flip_matrix::<Q>(2, 3).apply(&tensor(&[x.clone(), y.clone()])),
        tensor(&[y, x])
    );
}

#[test]
fn untwisted_unitors_break_the_triangle() {
    let m = HomObject::new(QMatrix::diagonal(&[q(2), q(3)])).unwrap();
    let n = HomObject::new(QMatrix::diagonal(&[q(5)])).unwrap();
    let lhs = &QMatrix::identity(2).kron(&QMatrix::identity(n.dim()))
        * associator(&m, &HomObject::unit(), &n).map();
    let r = compare_maps("triangle_untwisted", &lhs, &QMatrix::identity(2 * n.dim()));
    assert!(!r.passed);
    assert_eq!(r.witness.unwrap().indices, vec![0]);
    assert!(triangle(&m, &n).passed);
}

#[test]
fn braiding_is_natural_flip() {
    let mut rng = StdRng::seed_from_u64(9);
    let (m, n) = (random_object(&mut rng, 3), random_object(&mut rng, 3));
    let c = braiding(&m, &n);
    let x: Vec<Q> = (0..m.dim()).map(|_| small_rational(&mut rng)).collect();
    let y: Vec<Q> = (0..n.dim()).map(|_| small_rational(&mut rng)).collect();
    assert_eq!(
        c.map().apply(&tensor(&[x.clone(), y.clone()])),
        tensor(&[y, x])
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn associator_matches_oracle(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n, p) = (random_object(&mut rng, 3), random_object(&mut rng, 2), random_object(&mut rng, 3));
        let a = associator(&m, &n, &p);
        prop_assert_eq!(a.map(), &associator_oracle(&m, &n, &p));
    }

    #[test]
    fn constraints_hold(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let objs: Vec<_> = (0..4).map(|_| random_object(&mut rng, 3)).collect();
        prop_assert!(pentagon(&objs[0], &objs[1], &objs[2], &objs[3]).passed);
        prop_assert!(triangle(&objs[0], &objs[1]).passed);
        prop_assert!(hexagon_h1(&objs[0], &objs[1], &objs[2]).passed);
        prop_assert!(hexagon_h2(&objs[0], &objs[1], &objs[2]).passed);
        let (l, r) = zigzags(&objs[3]);
        prop_assert!(l.passed && r.passed);
        let report = verify_constraints(&objs);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn associator_is_natural(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let objs: Vec<_> = (0..3).map(|_| random_object(&mut rng, 3)).collect();
        let fs: Vec<_> = objs.iter().map(|o| random_endomorphism(&mut rng, o)).collect();
        prop_assert!(associator_naturality(&fs[0], &fs[1], &fs[2]).passed);
    }

    #[test]
    fn morphism_space_commutes(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_object(&mut rng, 3);
        let k = rng.gen_range(0..3);
        let n = if k == 0 { m.clone() } else { random_object(&mut rng, 3) };
        for f in morphism_space(&m, &n) {
            prop_assert_eq!(n.mu() * &f, &f * m.mu());
        }
        // μ itself is always an endomorphism in the category.
        prop_assert!(HomMorphism::new(m.clone(), m.clone(), m.mu().clone()).is_ok());
    }
}
