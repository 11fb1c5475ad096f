//! Acceptance criteria AC1–AC6. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use eqribbon_core::conditions::{
    check_2eq_ribbon, check_2eq_slice, eqslice_from_components, modq_witness, verify_eqribbon, verify_eqslice,
    EqRibbonWitness,
};
use eqribbon_core::construct::{boxes_from_witness, crossings_from_boxes, equivariant_linking, murasugi_from_linking, realize};
use eqribbon_core::factor::{factor_z, fox_witnesses, lemma_factor_extract, symmetric_divisors};
use eqribbon_core::notation::{parse_poly, parse_poly2};
use eqribbon_core::torsion::{dual_complex, BasedChainComplex, RationalFunction};
use eqribbon_core::{GroupRingPoly, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn z(s: &str) -> ZPoly {
    parse_poly(s).expect("valid polynomial")
}

fn g2(s: &str) -> GroupRingPoly {
    parse_poly2(s, 2).expect("valid group-ring element")
}

fn ac1() -> Check {
    let p = z("-2*t + 1");
    let a = g2("(g-1)*t + 1");
    let delta_zq = g2("(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1");
    let delta = z("-2*t + 5 - 2*t^-1");
    ensure!(&p * &p.conj() == delta, "p·p̄ = {}", &p * &p.conj());
    ensure!(&a * &a.involute() == delta_zq, "a·ā = {}", &a * &a.involute());
    ensure!(delta_zq.augment_g().is_one(), "augment_g = {}", delta_zq.augment_g());
    let n = delta_zq.norm_product();
    ensure!(n.unit_equal(&delta), "norm_product = {n}");
    ensure!(verify_eqribbon(&EqRibbonWitness { q: 2, a: a.clone() }, &delta_zq), "verify_eqribbon rejected a");
    let v = check_2eq_ribbon(&delta, &ZPoly::one()).map_err(|e| e.to_string())?;
    ensure!(v.is_yes(), "check_2eq_ribbon(Δ_K, 1) = NO");
    Ok(())
}

fn ac2() -> Check {
    let quartic = z("t^4 - 3*t^3 + 3*t^2 - 3*t + 1");
    let fac = factor_z(&quartic).map_err(|e| e.to_string())?;
    ensure!(fac.is_irreducible(), "quartic factors as {:?}", fac.factors);
    let delta = quartic.pow(2);
    let divs = symmetric_divisors(&delta).map_err(|e| e.to_string())?;
    let expected = [ZPoly::one(), quartic.clone(), delta.clone()];
    ensure!(divs.len() == 3, "symmetric divisors {divs:?}");
    for e in &expected {
        ensure!(divs.iter().any(|d| d.unit_equal(e)), "{e} missing from symmetric divisors");
    }
    for d in &divs {
        let v = check_2eq_slice(&delta, d).map_err(|e| e.to_string())?;
        ensure!(!v.is_yes(), "check_2eq_slice(Δ, {d}) = YES");
    }
    Ok(())
}

fn ac3() -> Check {
    let f = z("t^3 - t^2 + 1");
    let alpha = z("t^6 - t^5 - t^4 + 3*t^3 - t^2 - 3*t + 3");
    let beta = z("t^6 - 2*t^5 + t^4 + 2*t^3 - 4*t^2 + 3");
    for (name, x) in [("f", &f), ("α", &alpha), ("β", &beta)] {
        ensure!(x.augment() == BigInt::from(1), "{name}(1) = {}", x.augment());
    }
    let fb = f.conj();
    ensure!(f.mod2().canonical() != fb.mod2().canonical(), "f ≡ f̄ (mod 2)");
    ensure!(alpha.mod2() == (&fb * &f).mod2(), "α ≢ f̄·f (mod 2)");
    ensure!(beta.mod2() == (&f * &f).mod2(), "β ≢ f·f (mod 2)");
    for (name, x) in [("α", &alpha), ("β", &beta)] {
        ensure!(factor_z(x).map_err(|e| e.to_string())?.is_irreducible(), "{name} is reducible");
    }
    let dp = &alpha * &alpha.conj();
    let dm = &beta * &beta.conj();
    let w = eqslice_from_components((&dp, &dm), (&(&f * &alpha), &(&fb * &beta)), (&f, &f))
        .map_err(|e| e.to_string())?;
    ensure!(verify_eqslice(&w), "verify_eqslice rejected the witness");
    ensure!(w.delta_zq.norm_product().unit_equal(&(&dp * &dm)), "norm of Δ_Z/2 differs from αᾱββ̄");
    let delta = &dp * &dm;
    let divs = symmetric_divisors(&delta).map_err(|e| e.to_string())?;
    ensure!(!divs.is_empty(), "no symmetric divisors");
    for d in &divs {
        let v = check_2eq_ribbon(&delta, d).map_err(|e| e.to_string())?;
        ensure!(!v.is_yes(), "check_2eq_ribbon(Δ, {d}) = YES");
    }
    Ok(())
}

fn ac4() -> Check {
    let p = z("-2*t + 1");
    let w = modq_witness(&p, 2).map_err(|e| e.to_string())?;
    ensure!(w.a.unit_equal(&g2("1 - t - g*t")), "a = {}", w.a);
    let pm = w.a.plus_minus().map_err(|e| e.to_string())?;
    ensure!(pm.plus.unit_equal(&z("1 - 2*t")) && pm.minus.unit_equal(&ZPoly::one()), "parts ({}, {})", pm.plus, pm.minus);
    let r = realize(&w.a).map_err(|e| e.to_string())?;
    let target = z("5 - 2*t - 2*t^-1");
    ensure!((&p * &p.conj()).unit_equal(&target), "(1-2t)(1-2t⁻¹) ≠ 5-2t-2t⁻¹");
    ensure!(r.knot_poly.unit_equal(&target), "knot polynomial {}", r.knot_poly);
    ensure!(r.quotient_poly.unit_equal(&target), "quotient polynomial {}", r.quotient_poly);
    Ok(())
}

fn ac5() -> Check {
    let a = g2("1 - g + g*t");
    let boxes = boxes_from_witness(&a).map_err(|e| e.to_string())?;
    ensure!(boxes.h(0).is_zero(), "h_0 = {}", boxes.h(0));
    ensure!(boxes.h(1) == z("-1 + t"), "h_1 = {}", boxes.h(1));
    let crossings = crossings_from_boxes(&boxes).map_err(|e| e.to_string())?;
    let lk = equivariant_linking(&crossings);
    ensure!(lk.unit_equal(&a), "linking = {lk}");
    let stevedore = g2("(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1");
    for star in ["0", "1 + g*t", "3*g*t^-2 - t^5"] {
        let m = murasugi_from_linking(&lk, &g2(star)).map_err(|e| e.to_string())?;
        ensure!(m.unit_equal(&stevedore), "star {star}: {m}");
    }
    Ok(())
}

fn run<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) -> Check {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn ac6() -> Check {
    use common::*;
    let pairs = || period().prop_flat_map(|q| (group_ring(q, 5, 4), group_ring(q, 5, 4)));
    run("involution and augmentation laws", 1000, pairs(), |(a, b)| {
        let ab = &a * &b;
        if a.involute().involute() != a || ab.involute() != a.involute() * b.involute() {
            return Err(fail(format!("involution fails on {a}, {b}")));
        }
        if ab.augment_g() != a.augment_g() * b.augment_g() {
            return Err(fail(format!("augment_g fails on {a}, {b}")));
        }
        let q = a.period() as usize;
        let (ua, ub, uab) = (a.augment_t(), b.augment_t(), ab.augment_t());
        for k in 0..q {
            let s: BigInt = (0..q).map(|i| &ua[i] * &ub[(k + q - i) % q]).sum();
            if s != uab[k] {
                return Err(fail(format!("augment_t fails on {a}, {b}")));
            }
        }
        Ok(())
    })?;
    run("norm multiplicativity", 1000, period().prop_flat_map(|q| (group_ring(q, 4, 3), group_ring(q, 4, 3))), |(a, b)| {
        let lhs = (&a * &b).norm_product();
        let rhs = &a.norm_product() * &b.norm_product();
        if lhs.unit_equal(&rhs) { Ok(()) } else { Err(fail(format!("N({a}·{b}) = {lhs}, N·N = {rhs}"))) }
    })?;
    run("norm algorithms agree", 1000, group_ring_any(5, 4), |a| {
        if a.norm_product_sylvester().unit_equal(&a.norm_product_cyclotomic()) {
            Ok(())
        } else {
            Err(fail(format!("norm algorithms disagree on {a}")))
        }
    })?;
    run("fox_witnesses completeness", 300, augmented_poly(5, 3), |p| {
        let delta = &p * &p.conj();
        let ws = fox_witnesses(&delta).map_err(|e| fail(e.to_string()))?;
        if ws.contains(&p.augmentation_normalized()) {
            Ok(())
        } else {
            Err(fail(format!("{p} missing from fox_witnesses({delta})")))
        }
    })?;
    run(
        "lemma_factor_extract",
        500,
        (augmented_poly(3, 3), nonzero_zpoly(3, 3), nonzero_zpoly(3, 3)),
        |(c, b1, b2)| {
            let f = &c * &c.conj();
            let out = lemma_factor_extract(&f, &(&c * &b1 * b2.conj()), &(&b1 * &b2)).map_err(|e| fail(e.to_string()))?;
            if (&out * &out.conj()).unit_equal(&f) { Ok(()) } else { Err(fail(format!("bad factor {out} of {f}"))) }
        },
    )?;
    run("torsion axiom 1", 200, (1usize..=3).prop_flat_map(|n| prop::collection::vec(nonzero_rf(), n * n)), |v| {
        let n = (v.len() as f64).sqrt() as usize;
        let m = eqribbon_core::torsion::RfMatrix::from_rows(v.chunks(n).map(<[RationalFunction]>::to_vec).collect())
            .map_err(|e| fail(e.to_string()))?;
        let det = m.det().map_err(|e| fail(e.to_string()))?;
        if det.is_zero() {
            return Ok(());
        }
        let tau = BasedChainComplex::two_term(m).and_then(|c| c.torsion()).map_err(|e| fail(e.to_string()))?;
        if tau == det { Ok(()) } else { Err(fail(format!("τ = {tau}, det = {det}"))) }
    })?;
    run("torsion axiom 2", 200, (acyclic_complex(1..=3), acyclic_complex(1..=3)), |(a, b)| {
        let expected = &a.expected * &b.expected;
        let tau = a.complex.direct_sum(&b.complex).torsion().map_err(|e| fail(e.to_string()))?;
        if tau.eq_up_to_sign(&expected) { Ok(()) } else { Err(fail(format!("τ(C⊕C') = {tau}, expected {expected}"))) }
    })?;
    run(
        "torsion axiom 3",
        200,
        split_complex(1..=3, nonzero_rf()).prop_flat_map(|s| {
            let r = s.complex.ranks().to_vec();
            (Just(s), basis_changes(r, nonzero_rf()))
        }),
        |(s, f)| {
            let mats: Vec<_> = f.iter().map(|(m, _)| m.clone()).collect();
            let rebased = s.complex.rebase(&mats).map_err(|e| fail(e.to_string()))?;
            let (mut odd, mut even) = (RationalFunction::one(), RationalFunction::one());
            for (i, (_, d)) in f.iter().enumerate() {
                let det_fi = d.inv().map_err(|e| fail(e.to_string()))?;
                if i % 2 == 1 {
                    odd = &odd * &det_fi;
                } else {
                    even = &even * &det_fi;
                }
            }
            let lhs = &rebased.torsion().map_err(|e| fail(e.to_string()))? * &odd;
            let rhs = &s.complex.torsion().map_err(|e| fail(e.to_string()))? * &even;
            if lhs.eq_up_to_sign(&rhs) { Ok(()) } else { Err(fail(format!("{lhs} ≠ ±{rhs}"))) }
        },
    )?;
    run("torsion duality", 200, acyclic_complex(2..=3), |s| {
        let tau = s.complex.torsion().map_err(|e| fail(e.to_string()))?;
        let dual = dual_complex(&s.complex, true).torsion().map_err(|e| fail(e.to_string()))?;
        let expected = if s.complex.length() % 2 == 1 { tau.conj() } else { tau.conj().inv().map_err(|e| fail(e.to_string()))? };
        if dual.eq_up_to_sign(&expected) { Ok(()) } else { Err(fail(format!("τ(C*) = {dual}, expected {expected}"))) }
    })?;
    run("parser round trip", 1000, (zpoly(8, 30), group_ring_any(8, 9)), |(p, g)| {
        let back = parse_poly(&p.to_string()).map_err(|e| fail(e.to_string()))?;
        let back2 = parse_poly2(&g.to_string(), g.period()).map_err(|e| fail(e.to_string()))?;
        if back == p && back2 == g { Ok(()) } else { Err(fail(format!("round trip fails on {p} / {g}"))) }
    })?;
    Ok(())
}

fn main() {
    let criteria: [(&str, &str, fn() -> Check, Duration); 6] = [
        ("AC1", "Stevedore suite", ac1, Duration::from_secs(1)),
        ("AC2", "10_123 impossibility", ac2, Duration::from_secs(10)),
        ("AC3", "period-2 slice but not ribbon counterexample", ac3, Duration::from_secs(60)),
        ("AC4", "mod-q witness", ac4, Duration::from_secs(60)),
        ("AC5", "equivariant linking round trip", ac5, Duration::from_secs(60)),
        ("AC6", "property suites", ac6, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (id, title, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(()) => println!("{id} PASS  {title} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("{id} FAIL  {title} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
