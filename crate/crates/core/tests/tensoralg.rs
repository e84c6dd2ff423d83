mod common;

use common::*;
use homcas::homlie::twist_lie;
use homcas::homspace::{HomMorphism, HomObject};
use homcas::tensoralg::*;
use homcas::{catalog, Error, QMatrix, Q};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn mu() -> QMatrix {
    ints(&[&[1, 1], &[0, 2]])
}

fn mu_inv() -> QMatrix {
    QMatrix::from_rows(vec![vec![q(1), qr(-1, 2)], vec![q(0), qr(1, 2)]]).unwrap()
}

fn tensor_alg(n: usize) -> TruncatedTensorHomAlgebra<Q> {
    TruncatedTensorHomAlgebra::build(HomObject::new(mu()).unwrap(), n).unwrap()
}

fn m() -> Vec<Q> {
    vec![q(1), q(2)]
}

fn n_() -> Vec<Q> {
    vec![q(-1), q(3)]
}

fn p() -> Vec<Q> {
    vec![qr(2, 3), q(1)]
}

fn random_element(
    t: &TruncatedTensorHomAlgebra<Q>,
    rng: &mut StdRng,
    top: usize,
) -> GradedVector<Q> {
    let mut u = t.zero();
    for k in 0..=top {
        let x: Vec<Q> = (0..t.component_dim(k))
            .map(|_| small_rational(rng))
            .collect();
        u.set_component(k, x).unwrap();
    }
    u
}

#[test]
fn mu_inverse_fixture() {
    assert_eq!(&mu() * &mu_inv(), QMatrix::identity(2));
}

#[test]
fn product_closed_forms() {
    let t = tensor_alg(4);
    let (m, n, p) = (m(), n_(), p());
    let (a, ai) = (mu(), mu_inv());
    assert_eq!(
        t.multiply_homogeneous(1, &m, 1, &n).unwrap(),
        tensor(&[m.clone(), n.clone()])
    );
    assert_eq!(
        t.multiply_homogeneous(2, &tensor(&[m.clone(), n.clone()]), 1, &p)
            .unwrap(),
        tensor(&[a.apply(&m), n.clone(), ai.apply(&p)])
    );
    assert_eq!(
        t.multiply_homogeneous(1, &m, 2, &tensor(&[n.clone(), p.clone()]))
            .unwrap(),
        tensor(&[m.clone(), n.clone(), p.clone()])
    );
    assert_eq!(
        t.multiply_homogeneous(
            2,
            &tensor(&[m.clone(), n.clone()]),
            2,
            &tensor(&[p.clone(), m.clone()])
        )
        .unwrap(),
        tensor(&[a.apply(&m), n.clone(), ai.apply(&p), ai.apply(&m)])
    );
}

#[test]
fn unit_acts_by_t_mu() {
    let t = tensor_alg(3);
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..5 {
        let u = random_element(&t, &mut rng, 3);
        assert_eq!(t.multiply(&t.one(), &u).unwrap(), t.t_mu(&u, 1));
        assert_eq!(t.multiply(&u, &t.one()).unwrap(), t.t_mu(&u, 1));
    }
    let x = t.homogeneous(2, tensor(&[m(), n_()])).unwrap();
    assert_eq!(
        t.t_mu(&x, 1).component(2),
        tensor(&[mu().apply(&m()), mu().apply(&n_())]).as_slice()
    );
}

#[test]
fn degree_overflow() {
    let t = tensor_alg(3);
    let x = t.homogeneous(2, tensor(&[m(), n_()])).unwrap();
    assert!(matches!(
        t.multiply(&x, &x),
        Err(Error::DegreeOverflow {
            left: 2,
            right: 2,
            bound: 3
        })
    ));
    let trunc = t.multiply_truncated(&x, &x);
    assert!(trunc.is_zero());
}

#[test]
fn comultiplication_of_generator() {
    let t = tensor_alg(3);
    let x = t.homogeneous(1, m()).unwrap();
    let d = t.comultiply(&x);
    let expected_factor = mu_inv().apply(&m());
    let mut expected = MultiGraded::zero(2, 2);
    expected.add_part(vec![0, 1], &expected_factor);
    expected.add_part(vec![1, 0], &expected_factor);
    assert_eq!(d, expected);
    assert_eq!(t.comultiply(&t.one()), MultiGraded::unit(2, 2));
    assert_eq!(t.counit(&x), q(0));
    assert_eq!(t.counit(&t.one().scale(&q(7))), q(7));
}

#[test]
fn hom_coassociativity_on_generator() {
    let t = tensor_alg(3);
    let x = t.homogeneous(1, m()).unwrap();
    let d = t.comultiply(&x);
    let inv = |k: usize| vec![(vec![k], t.mu_matrix(k, -1))];
    let lhs = d
        .map_factor(0, inv, 1)
        .map_factor(1, |k| t.comult_blocks(k), 2);
    let rhs = d
        .map_factor(0, |k| t.comult_blocks(k), 2)
        .map_factor(2, inv, 1);
    let mm = (&mu_inv() * &mu_inv()).apply(&m());
    let mut expected = MultiGraded::zero(2, 3);
    for parts in [vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]] {
        expected.add_part(parts, &mm);
    }
    assert_eq!(lhs, expected);
    assert_eq!(rhs, expected);
}

#[test]
fn antipode_closed_forms() {
    let t = tensor_alg(3);
    let (m, n, p) = (m(), n_(), p());
    let s = |deg: usize, x: Vec<Q>| {
        t.antipode(&t.homogeneous(deg, x).unwrap())
            .component(deg)
            .to_vec()
    };
    assert_eq!(
        s(1, m.clone()),
        m.iter().map(|v| -v.clone()).collect::<Vec<_>>()
    );
    assert_eq!(
        s(2, tensor(&[m.clone(), n.clone()])),
        tensor(&[n.clone(), m.clone()])
    );
    let expected: Vec<Q> = tensor(&[mu().apply(&p), n.clone(), mu_inv().apply(&m)])
        .into_iter()
        .map(|v| -v)
        .collect();
    assert_eq!(s(3, tensor(&[m.clone(), n.clone(), p.clone()])), expected);
    assert_eq!(t.antipode(&t.one()), t.one());
}

#[test]
fn antipode_is_convolution_inverse_up_to_degree_four() {
    let t = tensor_alg(5);
    let s = |k: usize| t.antipode_matrix(k).clone();
    let id = |k: usize| QMatrix::identity(t.component_dim(k));
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..4 {
        let u = random_element(&t, &mut rng, 4);
        let ee = t.one().scale(&t.counit(&u));
        assert_eq!(t.convolve(s, id, &u), ee);
        assert_eq!(t.convolve(id, s, &u), ee);
    }
    let r = t.check_antipode(4);
    assert!(r.passed(), "{r}");
    assert_eq!(r.get("left").unwrap().checked, 1 + 2 + 4 + 8 + 16);
}

#[test]
fn untwisted_product_is_associative() {
    let t = tensor_alg(4);
    let untwisted =
        |u: &GradedVector<Q>, v: &GradedVector<Q>| t.t_mu(&t.multiply(u, v).unwrap(), -1);
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..5 {
        let a = random_element(&t, &mut rng, 1);
        let b = random_element(&t, &mut rng, 1);
        let c = random_element(&t, &mut rng, 2);
        assert_eq!(
            untwisted(&untwisted(&a, &b), &c),
            untwisted(&a, &untwisted(&b, &c))
        );
    }
}

#[test]
fn full_check_dimension_two_degree_five() {
    let t = tensor_alg(5);
    assert_eq!(t.component_dims(), vec![1, 2, 4, 8, 16, 32]);
    assert_eq!(t.total_dim(), 63);
    let r = t.check();
    assert!(r.passed(), "{r}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn random_bases_pass_all_axioms(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let obj = random_object(&mut rng, 2);
        let t = TruncatedTensorHomAlgebra::build(obj, 3).unwrap();
        let r = t.check();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn hom_associativity_on_random_elements(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = tensor_alg(4);
        let a = random_element(&t, &mut rng, 1);
        let b = random_element(&t, &mut rng, 1);
        let c = random_element(&t, &mut rng, 2);
        let lhs = t.multiply(&t.t_mu(&a, 1), &t.multiply(&b, &c).unwrap()).unwrap();
        let rhs = t.multiply(&t.multiply(&a, &b).unwrap(), &t.t_mu(&c, 1)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn twisted_sl2() -> homcas::homlie::HomLieAlgebra<Q> {
    twist_lie(&catalog::sl2::<Q>(), &catalog::sl2_automorphism()).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn enveloping_sl2_matches_pbw_counts() {
    for bound in [2, 4] {
        let u = enveloping(&twisted_sl2(), bound, GeneratorSign::Commutator).unwrap();
        let pbw: Vec<usize> = (0..=bound).map(|k| binomial(k + 2, 2)).collect();
        assert_eq!(u.quotient.degree_dims(), pbw);
        assert_eq!(u.quotient.dim(), pbw.iter().sum::<usize>());
        assert!(u.hopf_report.passed(), "{}", u.hopf_report);
    }
    assert_eq!(
        enveloping(&twisted_sl2(), 2, GeneratorSign::Commutator)
            .unwrap()
            .quotient
            .dim(),
        10
    );
}

#[test]
fn enveloping_ideal_is_alpha_stable_and_deterministic() {
    let a = enveloping(&twisted_sl2(), 3, GeneratorSign::Commutator).unwrap();
    let b = enveloping(&twisted_sl2(), 3, GeneratorSign::Commutator).unwrap();
    assert_eq!(a.quotient.ideal().space(), b.quotient.ideal().space());
    assert_eq!(a.generators, b.generators);
    let t = a.quotient.tensor();
    for v in a.quotient.ideal().space().basis() {
        let g = GradedVector::from_flat(3, 3, v).unwrap();
        for k in [1, -1] {
            assert!(a.quotient.ideal().contains(&t.t_mu(&g, k).to_flat()));
        }
    }
    assert_eq!(a.generators.len(), 6);
}

#[test]
fn ideal_closure_is_idempotent() {
    let u = enveloping(&twisted_sl2(), 3, GeneratorSign::Commutator).unwrap();
    let t = u.quotient.tensor();
    let basis: Vec<GradedVector<Q>> = u
        .quotient
        .ideal()
        .space()
        .basis()
        .iter()
        .map(|v| GradedVector::from_flat(3, 3, v).unwrap())
        .collect();
    let again = ideal_generated(t, &basis).unwrap();
    assert_eq!(again.space(), u.quotient.ideal().space());
    assert!(check_hom_ideal(t, &again).passed());
}

#[test]
fn primitive_generates_hopf_ideal_but_its_square_does_not() {
    let t = tensor_alg(3);
    let x = t.basis_element(&[0]).unwrap();
    assert_eq!(t.t_mu(&x, 1), x);
    let i = ideal_generated(&t, std::slice::from_ref(&x)).unwrap();
    assert!(check_hopf_ideal(&t, &i).passed());
    let sq = t.multiply(&x, &x).unwrap();
    let j = ideal_generated(&t, &[sq]).unwrap();
    let r = check_hopf_ideal(&t, &j);
    let co = r.get("coideal").unwrap();
    assert!(!co.passed);
    assert!(co.witness.is_some());
    assert!(check_hom_ideal(&t, &j).passed());
}

#[test]
fn non_stable_generator_rejected() {
    let t = tensor_alg(2);
    let y = t.basis_element(&[1]).unwrap();
    assert!(matches!(
        ideal_generated(&t, &[y]),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn lift_into_twisted_group_algebra() {
    let h = c3_twisted();
    let a = h.algebra();
    let obj = a.object().clone();
    let t = TruncatedTensorHomAlgebra::build(obj.clone(), 3).unwrap();
    let f = HomMorphism::new(obj.clone(), obj, QMatrix::identity(3)).unwrap();
    let lift = universal_lift(&t, &f, a).unwrap();
    let r = check_lift(&t, &f, a, &lift);
    assert!(r.passed(), "{r}");
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let u = t.basis_element(&[i, j, k]).unwrap();
                let oracle = a.multiply(&e(3, i), &a.multiply(&e(3, j), &e(3, k)));
                assert_eq!(lift.apply(&u), oracle);
            }
        }
    }
}

#[test]
fn lift_of_inclusion_is_identity() {
    let t = tensor_alg(3);
    let target = HomObject::new(t.target_alpha()).unwrap();
    let incl = QMatrix::from_fn(t.total_dim(), 2, |r, c| {
        let flat = t.homogeneous(1, e(2, c)).unwrap().to_flat();
        flat[r].clone()
    });
    let f = HomMorphism::new(t.base().clone(), target, incl).unwrap();
    let lift = universal_lift(&t, &f, &t).unwrap();
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..5 {
        let u = random_element(&t, &mut rng, 3);
        assert_eq!(lift.apply(&u), u.to_flat());
    }
    assert!(check_lift(&t, &f, &t, &lift).passed());
}

#[test]
fn lift_rejects_wrong_target_automorphism() {
    let h = c3_twisted();
    let a = h.algebra();
    let t = tensor_alg(2);
    let f = HomMorphism::new(
        t.base().clone(),
        HomObject::trivial(3),
        QMatrix::zeros(3, 2),
    )
    .unwrap();
    assert!(matches!(
        universal_lift(&t, &f, a),
        Err(Error::InvalidInput(_))
    ));
}
