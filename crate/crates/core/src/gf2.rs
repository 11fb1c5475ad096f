//! Polynomials over GF(2), packed into 64-bit limbs.
//!
//! A `GF2Poly` is an honest polynomial (nonnegative exponents). Unit classes
//! mod 2 are `t^i` only, so [`GF2Poly::canonical`] strips the largest power
//! of `t`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GF2Poly {
    // little-endian bits, no trailing zero limbs
    limbs: Vec<u64>,
}

impl GF2Poly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// `t^e`.
    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.flip(e);
        p
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// Interprets the bits of `bits` as coefficients (bit k is the coefficient of `t^k`).
    pub fn from_bits(bits: u64) -> Self {
        let mut p = Self { limbs: vec![bits] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn flip(&mut self, e: usize) {
        let (w, b) = (e / 64, e % 64);
        if self.limbs.len() <= w {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] ^= 1 << b;
        self.trim();
    }

    pub fn bit(&self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        self.limbs.get(w).is_some_and(|l| (l >> b) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, limb) in self.limbs.iter().enumerate() {
            let mut l = *limb;
            while l != 0 {
                let b = l.trailing_zeros() as usize;
                out.push(w * 64 + b);
                l &= l - 1;
            }
        }
        out
    }

    pub fn low_exponent(&self) -> Option<usize> {
        self.exponents().first().copied()
    }

    fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (w, b) = (k / 64, k % 64);
        let mut limbs = vec![0u64; self.limbs.len() + w + 1];
        for (i, l) in self.limbs.iter().enumerate() {
            limbs[i + w] ^= l << b;
            if b > 0 {
                limbs[i + w + 1] ^= l >> (64 - b);
            }
        }
        let mut p = Self { limbs };
        p.trim();
        p
    }

    fn shr(&self, k: usize) -> Self {
        Self::from_exponents(self.exponents().into_iter().filter(|&e| e >= k).map(|e| e - k))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.limbs.len().max(other.limbs.len());
        let mut limbs = vec![0u64; n];
        for (i, l) in self.limbs.iter().enumerate() {
            limbs[i] ^= l;
        }
        for (i, l) in other.limbs.iter().enumerate() {
            limbs[i] ^= l;
        }
        let mut p = Self { limbs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for e in other.exponents() {
            acc = acc.add(&self.shl(e));
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("GF(2) division by zero");
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            q.flip(rd - dd);
            r = r.add(&d.shl(rd - dd));
        }
        (q, r)
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Strips the largest power of `t`.
    pub fn canonical(&self) -> Self {
        match self.low_exponent() {
            Some(lo) if lo > 0 => self.shr(lo),
            _ => self.clone(),
        }
    }

    /// `t^deg · p(t^-1)`, canonicalized.
    pub fn reciprocal(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self::from_exponents(self.exponents().into_iter().map(|e| d - e)).canonical(),
        }
    }

    /// Square root via Frobenius: exists iff every exponent is even.
    pub fn sqrt(&self) -> Option<Self> {
        let exps = self.exponents();
        if exps.iter().any(|e| e % 2 == 1) {
            return None;
        }
        Some(Self::from_exponents(exps.into_iter().map(|e| e / 2)))
    }

    /// Evaluation at `t = 1`.
    pub fn augment(&self) -> bool {
        self.limbs.iter().map(|l| l.count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_examples() {
        let a = GF2Poly::from_exponents([8, 6, 4, 2, 0]);
        assert_eq!(a.sqrt(), Some(GF2Poly::from_exponents([4, 3, 2, 1, 0])));
        assert_eq!(GF2Poly::one().sqrt(), Some(GF2Poly::one()));
        assert_eq!(GF2Poly::from_exponents([3, 0]).sqrt(), None);
    }

    #[test]
    fn frobenius_square() {
        let a = GF2Poly::from_exponents([0, 1, 2, 3, 4]);
        assert_eq!(a.mul(&a), GF2Poly::from_exponents([0, 2, 4, 6, 8]));
    }

    #[test]
    fn wide_arithmetic_crosses_limbs() {
        let a = GF2Poly::from_exponents([0, 63, 70]);
        let b = GF2Poly::from_exponents([1, 64]);
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        assert_eq!(p.degree(), Some(134));
    }

    #[test]
    fn reciprocal_and_canonical() {
        let f = GF2Poly::from_exponents([3, 2, 0]);
        assert_eq!(f.reciprocal(), GF2Poly::from_exponents([3, 1, 0]));
        assert_eq!(GF2Poly::from_exponents([5, 2]).canonical(), GF2Poly::from_exponents([3, 0]));
    }
}
