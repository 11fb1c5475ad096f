//! Cyclotomic polynomials and arithmetic in `Z[x]/Φ_d(x)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::zx::{self, Zx};

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u32
}

/// Dense coefficients of `Φ_d`, little-endian.
pub fn cyclotomic_poly(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    let mut xd_minus_1 = vec![BigInt::zero(); d as usize + 1];
    xd_minus_1[0] = BigInt::from(-1);
    xd_minus_1[d as usize] = BigInt::one();
    divisors(d)
        .into_iter()
        .filter(|&e| e < d)
        .fold(xd_minus_1, |acc, e| zx::exact_div(&acc, &cyclotomic_poly(e)).expect("Φ_e divides x^d - 1"))
}

/// The ring `Z[ζ_d] = Z[x]/Φ_d(x)` with elements stored as integer vectors of
/// length `φ(d)` in the power basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRing {
    d: u32,
    phi: Zx,
}

impl CyclotomicRing {
    pub fn new(d: u32) -> Self {
        Self { d, phi: cyclotomic_poly(d) }
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }

    pub fn rank(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces an arbitrary integer polynomial in `x` to a vector of length `rank()`.
    pub fn reduce(&self, p: &[BigInt]) -> Vec<BigInt> {
        let mut r = zx::rem_monic(p, &self.phi);
        r.resize(self.rank(), BigInt::zero());
        r
    }

    /// `x^k`, reduced.
    pub fn power_of_generator(&self, k: u32) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); k as usize + 1];
        p[k as usize] = BigInt::one();
        self.reduce(&p)
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&zx::mul(a, b))
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&zx::add(a, b))
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), zx::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), zx::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), zx::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), zx::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), zx::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), zx::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn ranks_sum_to_period() {
        for q in 1..=12 {
            let total: usize = divisors(q).into_iter().map(|d| CyclotomicRing::new(d).rank()).sum();
            assert_eq!(total, q as usize);
            assert_eq!(CyclotomicRing::new(q).rank(), euler_phi(q) as usize);
        }
    }

    #[test]
    fn generator_has_order_d() {
        let r = CyclotomicRing::new(5);
        let mut one = vec![BigInt::zero(); 4];
        one[0] = BigInt::one();
        assert_eq!(r.power_of_generator(5), one);
        assert_ne!(r.power_of_generator(1), one);
    }
}
