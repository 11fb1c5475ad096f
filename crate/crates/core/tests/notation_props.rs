mod common;

use common::{group_ring_any, zpoly};
use eqribbon_core::notation::{format_group_ring, parse_poly, parse_poly2};
use eqribbon_core::ZPoly;
use proptest::prelude::*;

fn expr(vars: &'static [&'static str]) -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|n| n.to_string()),
        (prop::sample::select(vars), -3i32..=3).prop_map(|(v, e)| match e {
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        }),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), prop::sample::select(vec![" + ", " - ", "*", " ", "-"]), inner.clone())
                .prop_map(|(a, op, b)| format!("{a}{op}{b}")),
            (inner.clone(), 0u32..=3).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_format_parse(s in expr(&["t"])) {
        if let Ok(p) = parse_poly(&s) {
            let printed = p.to_string();
            prop_assert_eq!(parse_poly(&printed).unwrap(), p, "{} printed as {}", s, printed);
        }
    }

    #[test]
    fn parse_format_parse_group_ring(s in expr(&["t", "g"]), q in 1u32..=5) {
        if let Ok(p) = parse_poly2(&s, q) {
            let printed = format_group_ring(&p);
            prop_assert_eq!(parse_poly2(&printed, q).unwrap(), p);
        }
    }

    #[test]
    fn format_round_trips(p in zpoly(8, 30)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn group_ring_format_round_trips(p in group_ring_any(8, 9)) {
        prop_assert_eq!(parse_poly2(&p.to_string(), p.period()).unwrap(), p);
    }

    #[test]
    fn arbitrary_input_never_panics(s in "[-+*^()tg0-9 {}x/]{0,24}") {
        let _ = parse_poly(&s);
        let _ = parse_poly2(&s, 3);
    }
}

#[test]
fn golden_stevedore() {
    let p = parse_poly2("(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1", 2).unwrap();
    let golden = include_str!("golden/stevedore_zq.txt");
    assert_eq!(format!("{p}\n"), golden);
    assert_eq!(parse_poly("-2*t + 5 - 2*t^-1").unwrap().to_string(), "-2*t + 5 - 2*t^-1");
    assert_eq!(ZPoly::zero().to_string(), "0");
    assert_eq!(parse_poly("5-2t-2t^-1").unwrap().to_string(), "-2*t + 5 - 2*t^-1");
}

#[test]
fn errors_carry_positions() {
    let err = parse_poly("1 + x").unwrap_err().to_string();
    assert!(err.contains("position 4"), "{err}");
    assert!(parse_poly("g + 1").is_err());
    assert!(parse_poly("(1 + t").is_err());
    assert!(parse_poly("2^-1").is_err());
}
