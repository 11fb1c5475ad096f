//! Factorization of squarefree primitive integer polynomials: modular
//! factorization, Hensel lifting and subset recombination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fp::{Fp, Poly};
use super::{hensel, kronecker};
use crate::zx::{self, Zx};

const CANDIDATE_PRIMES: usize = 5;
const KRONECKER_MAX_DEGREE: usize = 12;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Picks, among the first few primes `p` that keep `f` squarefree of the same
/// degree mod `p`, the one giving the fewest modular factors.
fn choose_prime(f: &[BigInt]) -> Option<(Fp, Vec<Poly>)> {
    let lc = zx::lc(f);
    let mut best: Option<(Fp, Vec<Poly>)> = None;
    let mut tried = 0;
    for p in (3u64..).filter(|&p| is_prime(p)).take(200) {
        if (&lc % p).is_zero() {
            continue;
        }
        let field = Fp::new(p);
        let fp_poly = field.from_zx(f);
        if !field.is_squarefree(&fp_poly) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
        let facs = field.factor_squarefree(&field.monic(&fp_poly), &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((field, facs));
        }
        tried += 1;
        if tried == CANDIDATE_PRIMES || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best
}

/// Irreducible primitive factors (positive leading coefficient) of a squarefree
/// primitive polynomial `f` of positive degree.
pub(crate) fn factor_squarefree(f: &[BigInt]) -> Vec<Zx> {
    let f = zx::primitive(f);
    let n = zx::degree(&f).expect("nonconstant input");
    if n == 1 {
        return vec![f];
    }
    let Some((field, modular)) = choose_prime(&f) else {
        assert!(n <= KRONECKER_MAX_DEGREE, "no usable prime for a degree {n} polynomial");
        return kronecker::factor(&f);
    };
    if modular.len() == 1 {
        return vec![f];
    }
    let lc = zx::lc(&f);
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1;
    let p = BigInt::from(field.modulus());
    let mut big_m = p.clone();
    while big_m <= &bound * 2 {
        big_m *= &p;
    }
    let lifted = hensel::lift(&f, &modular, field, &big_m);
    recombine(f, lifted, &big_m)
}

fn recombine(f: Zx, lifted: Vec<Zx>, big_m: &BigInt) -> Vec<Zx> {
    let mut remaining: Vec<Zx> = lifted;
    let mut current = f;
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let lc = zx::lc(&current);
        for subset in (0..remaining.len()).combinations(s) {
            let g = subset.iter().fold(vec![lc.clone()], |acc, &i| zx::mul(&acc, &remaining[i]));
            let g: Zx = zx::trim(g.iter().map(|c| symmetric(c, big_m)).collect());
            let g = zx::primitive(&g);
            if let Some(h) = zx::exact_div(&current, &g) {
                out.push(g);
                current = zx::primitive(&h);
                let mut k = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
                continue 'outer;
            }
        }
        s += 1;
    }
    if zx::degree(&current).unwrap_or(0) > 0 {
        out.push(current);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swinnerton_dyer_like_splitting() {
        // x^4 + 1 is irreducible over Z but splits mod every prime.
        let f = zx::from_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn recovers_product() {
        let a = zx::from_i64(&[1, -2]);
        let b = zx::from_i64(&[-2, 1]);
        let c = zx::from_i64(&[1, -1, 0, 1]);
        let f = zx::mul(&zx::mul(&a, &b), &c);
        let mut got = factor_squarefree(&f);
        got.sort();
        let mut want = vec![zx::primitive(&a), b, c];
        want.sort();
        assert_eq!(got, want);
    }
}
