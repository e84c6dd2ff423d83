mod common;

use common::*;
use homcas::catalog::{self, Structure};
use homcas::homalgebra::{
    check_strict_convolution, convolution, convolution_hom_algebra, invariant_maps, twist_algebra,
    twist_bialgebra, twist_coalgebra, untwist_algebra, untwist_coalgebra, HomAlgebra, HomCoalgebra,
};
use homcas::homgroup::{
    automorphism_from_exponent, automorphisms, cyclic_group, hom_group, symmetric_group,
};
use homcas::homspace::HomObject;
use homcas::{Error, QMatrix, Q};
use proptest::prelude::*;

fn group_product_oracle(table: &[Vec<usize>], phi: &[usize], a: usize, b: usize) -> Vec<Q> {
    e(table.len(), phi[table[a][b]])
}

/// `g^a x^b · g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}` on the basis `1, g, x, gx`.
fn sweedler_product(i: usize, j: usize) -> Vec<Q> {
    let (a, b) = (i % 2, i / 2);
    let (c, d) = (j % 2, j / 2);
    if b + d >= 2 {
        return vec![q(0); 4];
    }
    let sign = if b * c == 1 { -1 } else { 1 };
    let k = ((a + c) % 2) + 2 * (b + d);
    e(4, k).into_iter().map(|x| x * q(sign)).collect()
}

#[test]
fn catalog_round_trips() {
    let entries = catalog::structures::<Q>();
    assert!(entries.len() >= 6);
    for entry in &entries {
        assert!(entry.check_classical().passed(), "{}", entry.name);
        let r = entry.round_trip();
        assert!(r.passed(), "{r}");
        for stage in ["twist", "untwist", "retwist"] {
            assert!(r.get(stage).unwrap().passed, "{}: {stage}", entry.name);
        }
        assert!(r.results.iter().any(|x| x.axiom.starts_with("twisted.")));
    }
}

#[test]
fn twisted_group_products_match_table() {
    for (n, k) in [(3, 2), (6, 5), (5, 3), (4, 3)] {
        let g = cyclic_group(n).unwrap();
        let phi = automorphism_from_exponent(&g, k).unwrap();
        let a = twist_algebra(catalog::group_bialgebra::<Q>(&g).algebra(), &phi.matrix()).unwrap();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    a.multiply(&e(n, x), &e(n, y)),
                    group_product_oracle(g.table(), phi.perm(), x, y)
                );
            }
        }
        assert!(a.check().passed());
    }
    // g·g = φ(g²) = g⁴ = g in C₃ with φ(g) = g².
    let g = cyclic_group(3).unwrap();
    let phi = automorphism_from_exponent(&g, 2).unwrap().matrix();
    let a = twist_algebra(catalog::group_bialgebra::<Q>(&g).algebra(), &phi).unwrap();
    assert_eq!(a.multiply(&e(3, 1), &e(3, 1)), e(3, 1));
}

#[test]
fn twisted_group_coproduct_is_diagonal_in_phi_inverse() {
    for (n, k) in [(3, 2), (6, 5)] {
        let g = cyclic_group(n).unwrap();
        let phi = automorphism_from_exponent(&g, k).unwrap();
        let inv = phi.inverse();
        let c =
            twist_coalgebra(catalog::group_bialgebra::<Q>(&g).coalgebra(), &phi.matrix()).unwrap();
        for x in 0..n {
            let y = inv.apply(x);
            assert_eq!(c.comult().apply(&e(n, x)), tensor(&[e(n, y), e(n, y)]));
        }
        assert!(c.check().passed());
    }
}

#[test]
fn sweedler_twist() {
    let (b, _) = catalog::sweedler::<Q>();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(
                b.algebra().multiply(&e(4, i), &e(4, j)),
                sweedler_product(i, j)
            );
        }
    }
    let alpha = catalog::sweedler_automorphism::<Q>();
    let h = twist_bialgebra(&b, &alpha).unwrap();
    assert!(h.check().passed());
    for i in 0..4 {
        for j in 0..4 {
            let expected = alpha.apply(&sweedler_product(i, j));
            assert_eq!(h.algebra().multiply(&e(4, i), &e(4, j)), expected);
        }
    }
    // Δ̃(x) = α⁻¹(x)⊗α⁻¹(1) + α⁻¹(g)⊗α⁻¹(x) = ½(x⊗1 + g⊗x)
    let half = qr(1, 2);
    let (x1, gx) = (tensor(&[e(4, 2), e(4, 0)]), tensor(&[e(4, 1), e(4, 2)]));
    let expected: Vec<Q> = x1
        .iter()
        .zip(&gx)
        .map(|(a, b)| (a + b) * half.clone())
        .collect();
    assert_eq!(h.coalgebra().comult().apply(&e(4, 2)), expected);
}

#[test]
fn non_automorphisms_are_rejected() {
    let (b, _) = catalog::sweedler::<Q>();
    // x ↦ 2x but g fixed and gx fixed is not multiplicative
    let bad = QMatrix::diagonal(&[q(1), q(1), q(2), q(1)]);
    assert!(matches!(
        twist_bialgebra(&b, &bad),
        Err(Error::NotAutomorphism(_))
    ));
    let singular = QMatrix::diagonal(&[q(1), q(1), q(0), q(0)]);
    assert!(twist_bialgebra(&b, &singular).is_err());
}

#[test]
fn classical_product_with_nontrivial_alpha_fails() {
    let g = cyclic_group(3).unwrap();
    let phi = automorphism_from_exponent(&g, 2).unwrap().matrix::<Q>();
    let classical = catalog::group_bialgebra::<Q>(&g);
    let obj = HomObject::new(phi).unwrap();
    let a = HomAlgebra::new(
        obj.clone(),
        classical.algebra().mult().clone(),
        classical.algebra().unit().to_vec(),
    )
    .unwrap();
    let r = a.check();
    assert!(r.get("multiplicativity").unwrap().passed);
    let unital = r.get("hom_unitality_right").unwrap();
    assert!(!unital.passed);
    // g·1 = g but α(g) = g²
    assert_eq!(unital.witness.as_ref().unwrap().indices, vec![1]);
    assert!(untwist_algebra(&a).is_err());

    let c = HomCoalgebra::new(
        obj,
        classical.coalgebra().comult().clone(),
        classical.coalgebra().counit().to_vec(),
    )
    .unwrap();
    let r = c.check();
    let counit = r.get("counit_right").unwrap();
    assert!(!counit.passed);
    assert_eq!(counit.witness.as_ref().unwrap().indices, vec![1]);
    assert!(untwist_coalgebra(&c).is_err());
}

#[test]
fn opposite_of_twisted_algebra() {
    let entries = catalog::structures::<Q>();
    for entry in entries {
        let a = match &entry.structure {
            Structure::Algebra(a) => a.clone(),
            Structure::Bialgebra(b) => b.algebra().clone(),
        };
        let h = twist_algebra(&a, &entry.automorphism).unwrap();
        let op = h.opposite();
        assert!(op.check().passed(), "{}", entry.name);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (x, y) = (e(a.dim(), i), e(a.dim(), j));
                assert_eq!(op.multiply(&x, &y), h.multiply(&y, &x));
            }
        }
    }
}

#[test]
fn convolution_examples() {
    let g = cyclic_group(2).unwrap();
    let b = catalog::group_bialgebra::<Q>(&g).as_hom();
    let s = catalog::group_antipode::<Q>(&g);
    let id = QMatrix::identity(2);
    let ee =
        &QMatrix::column_vector(b.algebra().unit()) * &QMatrix::row_vector(b.coalgebra().counit());
    assert_eq!(
        convolution(&id, &s, b.coalgebra(), b.algebra()).unwrap(),
        ee
    );

    let h = hom_group(&g, &automorphism_from_exponent(&g, 1).unwrap()).linearize::<Q>();
    let conv = convolution_hom_algebra(h.coalgebra(), h.algebra()).unwrap();
    assert_eq!(conv.dim(), 4);
    assert!(conv.check().passed());
    assert!(check_strict_convolution(h.coalgebra(), h.algebra())
        .unwrap()
        .passed());

    for n in [3, 4] {
        let g = cyclic_group(n).unwrap();
        for phi in automorphisms(&g) {
            let h = hom_group(&g, &phi).linearize::<Q>();
            let r = check_strict_convolution(h.coalgebra(), h.algebra()).unwrap();
            assert!(r.passed(), "{r}");
            let inv = invariant_maps(h.coalgebra(), h.algebra());
            assert!(inv.contains(h.antipode().entries()));
            assert!(inv.contains(QMatrix::identity(n).entries()));
        }
    }
}

#[test]
fn symmetric_group_twist_by_inner_automorphisms() {
    let s3 = symmetric_group(3).unwrap();
    let b = catalog::group_bialgebra::<Q>(&s3);
    for phi in automorphisms(&s3) {
        let h = twist_bialgebra(&b, &phi.matrix()).unwrap();
        assert!(h.check().passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twist_untwist_group_algebras(n in 1usize..=7, k in 1u64..=12) {
        let g = cyclic_group(n).unwrap();
        let b = catalog::group_bialgebra::<Q>(&g);
        match automorphism_from_exponent(&g, k) {
            Err(_) => prop_assert!(num_integer::gcd(k as usize, n) != 1),
            Ok(phi) => {
                let h = twist_bialgebra(&b, &phi.matrix()).unwrap();
                prop_assert!(h.check().passed());
                let (back, alpha) = homcas::homalgebra::untwist_bialgebra(&h).unwrap();
                prop_assert_eq!(&back, &b);
                prop_assert_eq!(alpha, phi.matrix::<Q>());
            }
        }
    }
}
