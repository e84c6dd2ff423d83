mod common;

use common::*;
use homcas::catalog;
use homcas::homalgebra::{
    antipode_kernel_dim, check_antipode_properties, solve_antipode, twist_bialgebra,
    AntipodeSolution, HomHopfAlgebra,
};
use homcas::homgroup::{
    automorphism_from_exponent, automorphisms, cyclic_group, direct_product, hom_group,
    permutations, symmetric_group, FiniteGroup,
};
use homcas::{QMatrix, Q};

fn groups_up_to_six() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=6)
        .map(|n| (format!("C{n}"), cyclic_group(n).unwrap()))
        .collect();
    let c2 = cyclic_group(2).unwrap();
    out.push(("C2xC2".into(), direct_product(&c2, &c2)));
    out.push(("S3".into(), symmetric_group(3).unwrap()));
    out
}

fn is_automorphism(t: &[Vec<usize>], p: &[usize]) -> bool {
    (0..t.len()).all(|a| (0..t.len()).all(|b| p[t[a][b]] == t[p[a]][p[b]]))
}

fn inversion_oracle(t: &[Vec<usize>]) -> QMatrix {
    let n = t.len();
    let id = (0..n).find(|&e| (0..n).all(|x| t[e][x] == x)).unwrap();
    let image: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&h| t[g][h] == id).unwrap())
        .collect();
    QMatrix::from_fn(n, n, |r, c| if image[c] == r { q(1) } else { q(0) })
}

#[test]
fn automorphism_counts_match_brute_force() {
    let expected = [
        ("C1", 1),
        ("C2", 1),
        ("C3", 2),
        ("C4", 2),
        ("C5", 4),
        ("C6", 2),
        ("C2xC2", 6),
        ("S3", 6),
    ];
    for ((name, g), (ename, count)) in groups_up_to_six().iter().zip(expected) {
        assert_eq!(name, ename);
        let brute = permutations(g.order())
            .into_iter()
            .filter(|p| is_automorphism(g.table(), p))
            .count();
        assert_eq!(brute, count, "{name}");
        let auts = automorphisms(g);
        assert_eq!(auts.len(), count, "{name}");
        for a in &auts {
            assert!(is_automorphism(g.table(), a.perm()));
        }
    }
}

#[test]
fn exponent_automorphisms() {
    let c3 = cyclic_group(3).unwrap();
    assert_eq!(
        automorphism_from_exponent(&c3, 2).unwrap().perm(),
        &[0, 2, 1]
    );
    let c6 = cyclic_group(6).unwrap();
    assert!(automorphism_from_exponent(&c6, 2).is_err());
    assert_eq!(
        automorphism_from_exponent(&c6, 5).unwrap().perm(),
        &[0, 5, 4, 3, 2, 1]
    );
}

#[test]
fn antipode_is_inversion_for_every_twist() {
    let mut cases = 0;
    for (name, g) in groups_up_to_six() {
        let b = catalog::group_bialgebra::<Q>(&g);
        let oracle = inversion_oracle(g.table());
        for phi in automorphisms(&g) {
            let h = twist_bialgebra(&b, &phi.matrix()).unwrap();
            assert_eq!(antipode_kernel_dim(&h), 0, "{name}");
            let s = solve_antipode(&h)
                .unique()
                .unwrap_or_else(|| panic!("{name}: no unique antipode"));
            assert_eq!(s, oracle, "{name} {:?}", phi.perm());
            let hopf = HomHopfAlgebra::new(h, s).unwrap();
            assert!(hopf.check().passed());
            let props = check_antipode_properties(&hopf);
            assert_eq!(props.results.len(), 4);
            assert!(props.passed(), "{props}");

            let hg = hom_group(&g, &phi);
            assert!(hg.check().passed());
            assert_eq!(hg.linearize::<Q>().antipode(), &oracle);
            cases += 1;
        }
    }
    assert_eq!(cases, 1 + 1 + 2 + 2 + 4 + 2 + 6 + 6);
}

#[test]
fn idempotent_monoid_has_no_antipode() {
    let b = catalog::idempotent_monoid::<Q>();
    assert!(b.check().passed());
    match solve_antipode(&b.as_hom()) {
        AntipodeSolution::NoSolution { .. } => {}
        other => panic!("expected no antipode, got {other:?}"),
    }
}

#[test]
fn sweedler_antipode_survives_twisting() {
    let (b, s) = catalog::sweedler::<Q>();
    let h = twist_bialgebra(&b, &catalog::sweedler_automorphism()).unwrap();
    assert_eq!(solve_antipode(&h).unique().unwrap(), s);
    assert_eq!(solve_antipode(&b.as_hom()).unique().unwrap(), s);
    let hopf = HomHopfAlgebra::new(h, s.clone()).unwrap();
    assert!(check_antipode_properties(&hopf).passed());
    assert_eq!(&(&s * hopf.alpha()), &(hopf.alpha() * &s));
}

#[test]
fn hom_group_products() {
    let c3 = cyclic_group(3).unwrap();
    let hg = hom_group(&c3, &automorphism_from_exponent(&c3, 2).unwrap());
    assert_eq!(hg.product(1, 1), 1);
    assert_eq!(hg.coproduct(1), (2, 2));
    assert_eq!(hg.antipode(1), 2);
    assert_eq!(hg.unit(), 0);
}

#[test]
fn wrong_antipode_is_caught() {
    let g = cyclic_group(3).unwrap();
    let h = twist_bialgebra(
        &catalog::group_bialgebra::<Q>(&g),
        &automorphism_from_exponent(&g, 2).unwrap().matrix(),
    )
    .unwrap();
    let hopf = HomHopfAlgebra::new(h, QMatrix::identity(3)).unwrap();
    let r = hopf.check();
    let f = r.first_failure().unwrap();
    assert!(f.axiom.starts_with("antipode."), "{}", f.axiom);
    assert_eq!(f.witness.as_ref().unwrap().indices, vec![1]);
}
