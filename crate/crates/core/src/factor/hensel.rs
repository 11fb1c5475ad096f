//! Quadratic multifactor Hensel lifting over `Z/M` with a balanced factor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::fp::{Fp, Poly};
use crate::zx::{self, Zx};

fn reduce(a: &[BigInt], m: &BigInt) -> Zx {
    zx::trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zx {
    reduce(&zx::mul(a, b), m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zx {
    reduce(&zx::sub(a, b), m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zx {
    reduce(&zx::add(a, b), m)
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Zx, Zx) {
    let db = zx::degree(b).expect("division by zero polynomial");
    let mut r = reduce(a, m);
    let Some(da) = zx::degree(&r) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = zx::degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone();
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = (&r[i + shift] - &c * bc).mod_floor(m);
        }
        q[shift] = c;
        r = zx::trim(r);
    }
    (zx::trim(q), r)
}

fn to_zx(a: &[u64]) -> Zx {
    zx::trim(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient is not invertible");
    e.x.mod_floor(m)
}

/// One quadratic step: from `f ≡ g·h (mod m)`, `s·g + t·h ≡ 1 (mod m)` to the
/// same congruences modulo `n`, where `n | m²`.
fn step(f: &[BigInt], g: &Zx, h: &Zx, s: &Zx, t: &Zx, n: &BigInt) -> (Zx, Zx, Zx, Zx) {
    let e = sub_mod(f, &zx::mul(g, h), n);
    let (q, r) = div_rem_monic(&mul_mod(s, &e, n), h, n);
    let g2 = reduce(&zx::add(&zx::add(g, &zx::mul(t, &e)), &zx::mul(&q, g)), n);
    let h2 = add_mod(h, &r, n);
    let b = sub_mod(&zx::add(&zx::mul(s, &g2), &zx::mul(t, &h2)), &[BigInt::one()], n);
    let (c, d) = div_rem_monic(&mul_mod(s, &b, n), &h2, n);
    let s2 = sub_mod(s, &d, n);
    let t2 = reduce(&zx::sub(&zx::sub(t, &zx::mul(t, &b)), &zx::mul(&c, &g2)), n);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factorization `f ≡ lc(f)·Π facs (mod p)` to monic
/// factors modulo `big_m = p^k`.
pub(crate) fn lift(f: &[BigInt], facs: &[Poly], field: Fp, big_m: &BigInt) -> Vec<Zx> {
    let p = BigInt::from(field.modulus());
    if facs.len() == 1 {
        let inv = inverse_mod(&zx::lc(f), big_m);
        return vec![reduce(&zx::scale(f, &inv), big_m)];
    }
    let (left, right) = facs.split_at(facs.len() / 2);
    let lc_mod_p = field.from_int(&zx::lc(f));
    let g0 = left.iter().fold(vec![lc_mod_p], |acc, x| field.mul(&acc, x));
    let h0 = right.iter().fold(vec![1u64], |acc, x| field.mul(&acc, x));
    let (one, s0, t0) = field.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (to_zx(&g0), to_zx(&h0), to_zx(&s0), to_zx(&t0));
    let mut m = p;
    while &m < big_m {
        let n = (&m * &m).min(big_m.clone());
        (g, h, s, t) = step(f, &g, &h, &s, &t, &n);
        m = n;
    }
    let mut out = lift(&g, left, field, big_m);
    out.extend(lift(&h, right, field, big_m));
    out
}
