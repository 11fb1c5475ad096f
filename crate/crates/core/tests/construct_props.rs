mod common;

use common::{group_ring, witness};
use eqribbon_core::conditions::check_murasugi;
use eqribbon_core::construct::{boxes_from_witness, crossings_from_boxes, equivariant_linking, murasugi_from_linking, realize};
use eqribbon_core::GroupRingPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn witness_any() -> impl Strategy<Value = GroupRingPoly> {
    prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|q| witness(q, 6, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn linking_round_trip(a in witness_any()) {
        let boxes = boxes_from_witness(&a).unwrap();
        for entries in &boxes.boxes {
            let sum: BigInt = entries.iter().map(|(_, c)| c).sum();
            prop_assert!(sum.is_zero());
        }
        let crossings = crossings_from_boxes(&boxes).unwrap();
        prop_assert!(equivariant_linking(&crossings).unit_equal(&a));
    }

    #[test]
    fn realization_satisfies_murasugi(a in witness_any()) {
        let r = realize(&a).unwrap();
        let report = check_murasugi(&r.murasugi);
        prop_assert!(report.symmetric && report.augments && report.quotient_divides);
        prop_assert_eq!(report.knot_poly, r.knot_poly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn star_does_not_matter(
        (a, s1, s2) in prop::sample::select(vec![2u32, 3, 5])
            .prop_flat_map(|q| (group_ring(q, 5, 3), group_ring(q, 5, 3), group_ring(q, 5, 3)))
    ) {
        let m1 = murasugi_from_linking(&a, &s1).unwrap();
        let m2 = murasugi_from_linking(&a, &s2).unwrap();
        prop_assert_eq!(m1.clone(), m2);
        prop_assert!(m1.unit_equal(&(&a * &a.involute())));
    }
}
