mod common;

use std::collections::BTreeSet;

use common::*;
use homcas::coherence::{
    canonical_path, catalan, cyclic_words, enumerate_trees, follow_path, left_comb_path, path_via,
    random_detour_path, reassociate, verify_path_independence, CoherenceMap, PTree, ShuffledWord,
    MAX_LEAVES,
};
use homcas::homspace::HomObject;
use homcas::tensoralg::product_map;
use homcas::{Error, QMatrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn leaf_depths(t: &PTree) -> Vec<i64> {
    fn go(t: &PTree, d: i64, out: &mut Vec<i64>) {
        match t {
            PTree::Leaf => out.push(d),
            PTree::Node(l, r) => {
                go(l, d + 1, out);
                go(r, d + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    go(t, 0, &mut out);
    out
}

/// Each associativity move moves its left block up and its right block down
/// one level while twisting them by μ and μ⁻¹; flips keep depths. So the
/// exponent on a variable is its depth drop.
fn depth_oracle(u: &ShuffledWord, v: &ShuffledWord) -> CoherenceMap {
    let (du, dv) = (leaf_depths(&u.tree), leaf_depths(&v.tree));
    let n = u.perm.len();
    let mut source = vec![0; n];
    let mut exps = vec![0; n];
    for j in 0..n {
        source[v.perm[j]] = u.perm[j];
        exps[v.perm[j]] = du[u.perm[j]] - dv[v.perm[j]];
    }
    CoherenceMap::new(source, exps).unwrap()
}

fn leaf() -> PTree {
    PTree::Leaf
}

#[test]
fn catalan_counts() {
    for (n, c) in [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)] {
        assert_eq!(catalan(n), c);
        let trees = enumerate_trees(n).unwrap();
        assert_eq!(trees.len() as u64, c);
        assert_eq!(trees.iter().collect::<BTreeSet<_>>().len() as u64, c);
    }
    assert!(matches!(
        enumerate_trees(MAX_LEAVES + 1),
        Err(Error::ResourceLimit(_))
    ));
}

#[test]
fn right_comb_shape() {
    assert_eq!(
        PTree::right_comb(3).unwrap(),
        PTree::node(leaf(), PTree::node(leaf(), leaf()))
    );
}

#[test]
fn associator_step() {
    let u = ShuffledWord::plain(PTree::node(PTree::node(leaf(), leaf()), leaf()));
    let v = ShuffledWord::plain(PTree::right_comb(3).unwrap());
    let b = reassociate(&u, &v).unwrap();
    assert_eq!(b.source(), &[0, 1, 2]);
    assert_eq!(b.exponents(), &[1, 0, -1]);

    let obj = HomObject::new(QMatrix::diagonal(&[q(2), q(1)])).unwrap();
    let x = tensor(&[e(2, 0), e(2, 0), e(2, 0)]);
    assert_eq!(b.apply(&obj, &x), x);
}

#[test]
fn cyclic_closed_forms() {
    let (t3, t3s, t3s2) = cyclic_words();
    let b1 = reassociate(&t3, &t3s).unwrap();
    let b2 = reassociate(&t3, &t3s2).unwrap();
    assert_eq!(b1.to_string(), "μ(x3) ⊗ μ^-1(x1) ⊗ x2");
    assert_eq!(b2.to_string(), "μ(x2) ⊗ x3 ⊗ μ^-1(x1)");

    let mut rng = StdRng::seed_from_u64(17);
    let obj = random_object(&mut rng, 3);
    let d = obj.dim();
    let (mu, mi) = (obj.mu(), obj.mu_inv());
    for _ in 0..5 {
        let v: Vec<Vec<_>> = (0..3)
            .map(|_| (0..d).map(|_| small_rational(&mut rng)).collect())
            .collect();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let input = tensor(&[x.clone(), y.clone(), z.clone()]);
        assert_eq!(
            b1.apply(&obj, &input),
            tensor(&[mu.apply(z), mi.apply(x), y.clone()])
        );
        assert_eq!(
            b2.apply(&obj, &input),
            tensor(&[mu.apply(y), z.clone(), mi.apply(x)])
        );
    }
}

#[test]
fn product_maps() {
    assert_eq!(product_map(2, 1).unwrap().exponents(), &[1, 0, -1]);
    assert_eq!(product_map(2, 2).unwrap().exponents(), &[1, 0, -1, -1]);
    assert_eq!(product_map(1, 1).unwrap(), CoherenceMap::identity(2));
    for r in 1..5 {
        assert_eq!(product_map(1, r).unwrap(), CoherenceMap::identity(r + 1));
    }
}

#[test]
fn path_independence_reports() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in 2..=5 {
        let r = verify_path_independence(n, &mut rng).unwrap();
        assert!(r.passed(), "{r}");
        let expected = 2 * (catalan(n) as usize).pow(2);
        assert_eq!(r.get("path_independence").unwrap().checked, expected);
    }
}

#[test]
fn mismatched_words_are_rejected() {
    let u = ShuffledWord::plain(PTree::right_comb(3).unwrap());
    let v = ShuffledWord::plain(PTree::right_comb(4).unwrap());
    assert!(reassociate(&u, &v).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn all_paths_agree_with_depth_oracle(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let u = ShuffledWord::random(n, &mut rng);
        let v = ShuffledWord::random(n, &mut rng);
        let expected = depth_oracle(&u, &v);
        prop_assert_eq!(reassociate(&u, &v).unwrap(), expected.clone());
        let paths = [
            path_via(&u, &v, canonical_path),
            path_via(&u, &v, left_comb_path),
            random_detour_path(&u, &v, 3 * n, &mut rng),
            random_detour_path(&u, &v, 5 * n, &mut rng),
        ];
        for p in &paths {
            let (m, end) = follow_path(&u, p).unwrap();
            prop_assert_eq!(&end, &v);
            prop_assert_eq!(&m, &expected);
        }
    }

    #[test]
    fn composition_and_inverse(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (u, v, w) = (ShuffledWord::random(n, &mut rng), ShuffledWord::random(n, &mut rng), ShuffledWord::random(n, &mut rng));
        let uv = reassociate(&u, &v).unwrap();
        let vw = reassociate(&v, &w).unwrap();
        prop_assert_eq!(vw.after(&uv), reassociate(&u, &w).unwrap());
        prop_assert_eq!(reassociate(&v, &u).unwrap(), uv.inverse());
        prop_assert_eq!(uv.after(&uv.inverse()), CoherenceMap::identity(n));
    }

    #[test]
    fn matrices_compose_like_maps(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let obj = random_object(&mut rng, 2);
        let (u, v, w) = (ShuffledWord::random(n, &mut rng), ShuffledWord::random(n, &mut rng), ShuffledWord::random(n, &mut rng));
        let uv = reassociate(&u, &v).unwrap();
        let vw = reassociate(&v, &w).unwrap();
        prop_assert_eq!(&vw.to_matrix(&obj) * &uv.to_matrix(&obj), vw.after(&uv).to_matrix(&obj));
        let k = rng.gen_range(-2..=2);
        let twist = CoherenceMap::uniform(n, k).to_matrix(&obj);
        let mut expected = QMatrix::identity(1);
        for _ in 0..n {
            expected = expected.kron(&obj.mu_pow(k));
        }
        prop_assert_eq!(twist, expected);
    }
}
