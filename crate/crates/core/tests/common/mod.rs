#![allow(dead_code)]

use eqribbon_core::torsion::{BasedChainComplex, RationalFunction, RfMatrix};
use eqribbon_core::{GroupRingPoly, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn zpoly(max_len: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    (-3i64..=3, prop::collection::vec(-bound..=bound, 0..=max_len)).prop_map(|(lo, c)| ZPoly::from_i64(lo, &c))
}

pub fn nonzero_zpoly(max_len: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    zpoly(max_len, bound).prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomials of degree at most `deg` with `p(1) = 1`.
pub fn augmented_poly(deg: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-bound..=bound, deg + 1).prop_map(|mut c| {
        let rest: i64 = c[1..].iter().sum();
        c[0] = 1 - rest;
        ZPoly::from_i64(0, &c)
    })
}

pub fn period() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 6])
}

pub fn group_ring(q: u32, max_terms: usize, bound: i64) -> impl Strategy<Value = GroupRingPoly> {
    prop::collection::vec((0..q as i64, -2i64..=2, -bound..=bound), 0..=max_terms)
        .prop_map(move |terms| GroupRingPoly::from_i64(q, &terms))
}

pub fn group_ring_any(max_terms: usize, bound: i64) -> impl Strategy<Value = GroupRingPoly> {
    period().prop_flat_map(move |q| group_ring(q, max_terms, bound))
}

/// `a` with `a(g,1) = ±g^k`, multiplied by a random unit.
pub fn witness(q: u32, max_terms: usize, bound: i64) -> impl Strategy<Value = GroupRingPoly> {
    (group_ring(q, max_terms, bound), any::<bool>(), 0..q as i64, -3i64..=3).prop_map(move |(h, neg, i, j)| {
        let mut fix = Vec::new();
        for (g, c) in h.augment_t().iter().enumerate() {
            fix.push((g as i64, 0, -c.clone()));
        }
        fix.push((0, 0, BigInt::from(1)));
        let a = &h + &GroupRingPoly::from_terms(q, fix);
        a.mul_unit(neg, i, j)
    })
}

pub fn rf_poly(max_len: usize) -> impl Strategy<Value = RationalFunction> + Clone {
    (0i64..=1, prop::collection::vec(-3i64..=3, 1..=max_len))
        .prop_map(|(lo, c)| RationalFunction::from_zpoly(&ZPoly::from_i64(lo, &c)))
}

pub fn nonzero_rf() -> impl Strategy<Value = RationalFunction> + Clone {
    (rf_poly(3), rf_poly(2))
        .prop_filter("nonzero", |(n, d)| !n.is_zero() && !d.is_zero())
        .prop_map(|(n, d)| &n / &d)
}

/// A nonzero element whose numerator and denominator do not vanish at `t = 1`.
pub fn local_unit_rf() -> impl Strategy<Value = RationalFunction> + Clone {
    nonzero_rf().prop_filter("local unit", |r| r.is_local() && r.inv().unwrap().is_local())
}

/// An acyclic complex in split form together with its torsion computed from
/// the diagonal blocks: `C_i = T_i ⊕ S_i` with `∂_i : S_i → T_{i-1}` diagonal.
#[derive(Clone, Debug)]
pub struct SplitComplex {
    pub complex: BasedChainComplex,
    pub expected: RationalFunction,
}

pub fn split_complex_from(n: usize, diagonals: Vec<Vec<RationalFunction>>) -> SplitComplex {
    // diagonals[i - 1] lists the entries of the block of ∂_i
    let k = |i: usize| if (1..=n).contains(&i) { diagonals[i - 1].len() } else { 0 };
    let ranks: Vec<usize> = (0..=n).map(|i| k(i + 1) + k(i)).collect();
    let mut matrices = Vec::new();
    let mut expected = RationalFunction::one();
    for i in 1..=n {
        let mut m = RfMatrix::zeros(ranks[i], ranks[i - 1]);
        for (s, d) in diagonals[i - 1].iter().enumerate() {
            m[(k(i + 1) + s, s)] = d.clone();
            expected = if i % 2 == 1 { &expected * d } else { &expected / d };
        }
        matrices.push(m);
    }
    SplitComplex { complex: BasedChainComplex::new(ranks, matrices).unwrap(), expected }
}

pub fn split_complex(
    lengths: std::ops::RangeInclusive<usize>,
    entry: impl Strategy<Value = RationalFunction> + Clone + 'static,
) -> impl Strategy<Value = SplitComplex> {
    lengths
        .prop_flat_map(move |n| {
            (Just(n), prop::collection::vec(prop::collection::vec(entry.clone(), 0..=2), n))
        })
        .prop_map(|(n, d)| split_complex_from(n, d))
}

/// An invertible `r × r` matrix `L·diag(s)` with unit lower-triangular `L`,
/// together with its determinant `Π s`.
pub fn basis_change(
    r: usize,
    scale: impl Strategy<Value = RationalFunction> + Clone + 'static,
) -> impl Strategy<Value = (RfMatrix, RationalFunction)> {
    (prop::collection::vec(rf_poly(2), r * r), prop::collection::vec(scale, r)).prop_map(move |(off, s)| {
        let mut l = RfMatrix::identity(r);
        for i in 0..r {
            for j in 0..i {
                l[(i, j)] = off[i * r + j].clone();
            }
        }
        let mut d = RfMatrix::zeros(r, r);
        let mut det = RationalFunction::one();
        for (i, si) in s.iter().enumerate() {
            d[(i, i)] = si.clone();
            det = &det * si;
        }
        (l.mul(&d).unwrap(), det)
    })
}

pub fn basis_changes(
    ranks: Vec<usize>,
    scale: impl Strategy<Value = RationalFunction> + Clone + 'static,
) -> impl Strategy<Value = Vec<(RfMatrix, RationalFunction)>> {
    ranks.into_iter().map(|r| basis_change(r, scale.clone())).collect::<Vec<_>>()
}

/// A split complex rebased by random basis changes.
pub fn acyclic_complex(lengths: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SplitComplex> {
    split_complex(lengths, nonzero_rf()).prop_flat_map(|s| {
        let ranks = s.complex.ranks().to_vec();
        (Just(s), basis_changes(ranks, nonzero_rf()))
    })
    .prop_map(|(s, f)| {
        let mats: Vec<RfMatrix> = f.iter().map(|(m, _)| m.clone()).collect();
        let complex = s.complex.rebase(&mats).unwrap();
        let mut expected = s.expected.clone();
        for (i, (_, d)) in f.iter().enumerate() {
            expected = if i % 2 == 1 { &expected * d } else { &expected / d };
        }
        SplitComplex { complex, expected }
    })
}
