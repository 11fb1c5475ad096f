mod common;

use common::{augmented_poly, nonzero_zpoly};
use eqribbon_core::factor::{factor_z, fox_witnesses, kronecker_divisor, lemma_factor_extract, symmetric_divisors};
use eqribbon_core::ZPoly;
use proptest::prelude::*;

fn shifted_to_zero(p: &ZPoly) -> ZPoly {
    p.shift(-p.min_exp().unwrap_or(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn factorization_expands_back(a in nonzero_zpoly(9, 12)) {
        let fac = factor_z(&a).unwrap();
        prop_assert_eq!(fac.expand(), shifted_to_zero(&a));
        for (f, m) in &fac.factors {
            prop_assert!(*m >= 1);
            prop_assert!(f.is_canonical());
            prop_assert!(f.content() == 1.into());
        }
    }

    #[test]
    fn factors_are_irreducible_by_kronecker(a in nonzero_zpoly(6, 6)) {
        for (f, _) in factor_z(&a).unwrap().factors {
            prop_assert_eq!(kronecker_divisor(&f), None, "{} splits", f);
        }
    }

    #[test]
    fn products_are_split(a in nonzero_zpoly(4, 5), b in nonzero_zpoly(4, 5)) {
        let fa = factor_z(&a).unwrap();
        let fab = factor_z(&(&a * &b)).unwrap();
        for (f, m) in &fa.factors {
            prop_assert!(fab.multiplicity(f) >= *m);
        }
    }

    #[test]
    fn fox_witnesses_are_complete(deg in 0usize..=5, p in augmented_poly(5, 3)) {
        let p = ZPoly::from_terms(p.terms().filter(|(e, _)| *e as usize <= deg).map(|(e, c)| (e, c.clone())));
        prop_assume!(p.augment() == 1.into());
        let delta = &p * &p.conj();
        let ws = fox_witnesses(&delta).unwrap();
        prop_assert!(ws.contains(&p.augmentation_normalized()), "{} missing from {:?}", p, ws);
        for w in &ws {
            prop_assert!((w * &w.conj()).unit_equal(&delta));
            prop_assert_eq!(w.augment(), 1.into());
        }
        let divs = symmetric_divisors(&delta).unwrap();
        prop_assert!(divs.contains(&ZPoly::one()));
        prop_assert!(divs.contains(&delta.augmentation_normalized()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn lemma_factor_extract_recovers_a_factor(
        c in augmented_poly(3, 3),
        b1 in nonzero_zpoly(3, 3),
        b2 in nonzero_zpoly(3, 3),
        k in -3i64..=3,
    ) {
        let f = &c * &c.conj();
        let b = &b1 * &b2;
        let a = (&c * &b1 * b2.conj()).shift(k);
        let out = lemma_factor_extract(&f, &a, &b).unwrap();
        prop_assert!((&out * &out.conj()).unit_equal(&f));
    }

    #[test]
    fn lemma_factor_extract_returns_p_up_to_reciprocal(p in augmented_poly(3, 3), s in nonzero_zpoly(3, 3)) {
        let f = &p * &p.conj();
        let out = lemma_factor_extract(&f, &(&p * &s), &s).unwrap();
        prop_assert!((&out * &out.conj()).unit_equal(&f));
        let fp = factor_z(&p).unwrap();
        let disjoint = factor_z(&s)
            .unwrap()
            .factors
            .iter()
            .all(|(g, _)| fp.multiplicity(g) == 0 && fp.multiplicity(&g.conj()) == 0);
        if disjoint {
            prop_assert!(out.unit_equal(&p));
        }
    }
}

#[test]
fn rejects_bad_lemma_input() {
    let f = ZPoly::from_i64(-1, &[-2, 5, -2]);
    assert!(lemma_factor_extract(&f, &ZPoly::one(), &ZPoly::one()).is_err());
    assert!(lemma_factor_extract(&f, &ZPoly::one(), &ZPoly::zero()).is_err());
}

#[test]
fn kronecker_agrees_on_small_products() {
    for a in [ZPoly::from_i64(0, &[1, -2]), ZPoly::from_i64(0, &[1, 1, 1]), ZPoly::from_i64(0, &[1, -1, 0, 1])] {
        for b in [ZPoly::from_i64(0, &[2, -1]), ZPoly::from_i64(0, &[1, 0, 1])] {
            let ab = &a * &b;
            assert!(kronecker_divisor(&ab).is_some());
            let fac = factor_z(&ab).unwrap();
            assert_eq!(fac.multiplicity(&a), if a == b { 2 } else { 1 });
        }
    }
}
