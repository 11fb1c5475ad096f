//! Sparse Laurent polynomials in one variable `t`.
//!
//! Values are stored exactly (no implicit normalization), so that sums and
//! products behave as in `R[t, t^-1]`. Knot polynomials are only meaningful up
//! to the units `±t^i`; [`LaurentPoly::canonical`] picks the representative
//! with minimum exponent zero and positive leading coefficient, and
//! [`LaurentPoly::unit_equal`] compares unit classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::GF2Poly;

/// Coefficient ring of a [`LaurentPoly`].
pub trait Coeff:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn is_negative(&self) -> bool;

    /// `self / d` if the quotient exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

/// Integer Laurent polynomials, the home of every Alexander polynomial.
pub type ZPoly = LaurentPoly<BigInt>;
/// Rational Laurent polynomials.
pub type QPoly = LaurentPoly<BigRational>;

impl<R: Coeff> Default for LaurentPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(R::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, R> = BTreeMap::new();
        for (e, c) in iter {
            let entry = terms.entry(e).or_insert_with(R::zero);
            *entry = entry.clone() + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// `Σ coeffs[k] t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<R>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (low + k as i64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`: the degree of the unit class.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.terms.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&R> {
        self.terms.values().next()
    }

    /// Dense coefficient vector starting at `min_exp`.
    pub fn dense(&self) -> Vec<R> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Exact substitution `t -> t^-1`.
    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `t -> t^-1` followed by canonicalization.
    pub fn reciprocal(&self) -> Self {
        self.conj().canonical()
    }

    /// Representative of the `±t^i` class with minimum exponent 0 and positive
    /// leading coefficient. Zero maps to zero.
    pub fn canonical(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -shifted
        } else {
            shifted
        }
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonical()
    }

    /// `self = ±t^i · other` for some `i`.
    pub fn unit_equal(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.unit_equal(&self.conj())
    }

    /// Evaluation at `t = 1`.
    pub fn augment(&self) -> R {
        self.terms.values().fold(R::zero(), |acc, c| acc + c.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d` in `R[t, t^-1]`, if one exists.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let d_lc = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        let self_lo = self.min_exp().unwrap();
        while let Some(hi) = rem.max_exp() {
            if hi - d_hi < self_lo - d_lo {
                return None;
            }
            let c = rem.leading_coeff().unwrap().exact_div(&d_lc)?;
            let e = hi - d_hi;
            rem = &rem - &(d.shift(e).scale(&c));
            quot.insert(e, c);
        }
        Some(Self { terms: quot })
    }

    /// Returns `q` with `b = self · q` when `self` divides `b`.
    pub fn divides(&self, b: &Self) -> Result<Option<Self>> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(b.exact_div(self))
    }

    /// Orders unit classes deterministically: by span, then by the dense
    /// coefficient vector read from the lowest exponent.
    pub fn class_cmp(&self, other: &Self) -> Ordering {
        self.span()
            .cmp(&other.span())
            .then_with(|| self.dense().cmp(&other.dense()))
            .then_with(|| self.min_exp().cmp(&other.min_exp()))
    }
}

impl<R: Coeff> PartialOrd for LaurentPoly<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: Coeff> Ord for LaurentPoly<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class_cmp(other)
    }
}

impl ZPoly {
    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v / &c)).collect() }
    }

    /// Reduction mod 2 with the largest power of `t` stripped.
    pub fn mod2(&self) -> GF2Poly {
        let odd: Vec<i64> = self.terms.iter().filter(|(_, c)| c.is_odd()).map(|(e, _)| *e).collect();
        match odd.first() {
            None => GF2Poly::zero(),
            Some(&lo) => GF2Poly::from_exponents(odd.iter().map(|e| (e - lo) as usize)),
        }
    }

    /// Reduction mod 2 keeping exponents (no `t`-power stripping). Returns the
    /// set of exponents with odd coefficient.
    pub fn odd_exponents(&self) -> Vec<i64> {
        self.terms.iter().filter(|(_, c)| c.is_odd()).map(|(e, _)| *e).collect()
    }

    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// The augmentation as a machine integer, when it fits.
    pub fn augment_i64(&self) -> Option<i64> {
        i64::try_from(self.augment()).ok()
    }

    /// The representative with minimum exponent 0 and `p(1) = +1` when the
    /// augmentation is `±1`; otherwise the canonical form.
    pub fn augmentation_normalized(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if Signed::is_negative(&p.augment()) {
            -p
        } else {
            p
        }
    }
}

impl<R: Coeff> Neg for LaurentPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<R: Coeff> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        -(self.clone())
    }
}

impl<R: Coeff> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let sum = terms.remove(e).map_or_else(|| c.clone(), |a| a + c.clone());
            if !sum.is_zero() {
                terms.insert(*e, sum);
            }
        }
        LaurentPoly { terms }
    }
}

impl<R: Coeff> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let diff = terms.remove(e).map_or_else(|| -c.clone(), |a| a - c.clone());
            if !diff.is_zero() {
                terms.insert(*e, diff);
            }
        }
        LaurentPoly { terms }
    }
}

impl<R: Coeff> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        let mut terms: BTreeMap<i64, R> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let entry = terms.entry(ea + eb).or_insert_with(R::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Coeff> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: Self) -> LaurentPoly<R> {
                (&self).$method(&rhs)
            }
        }
        impl<R: Coeff> $tr<&LaurentPoly<R>> for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$method(rhs)
            }
        }
        impl<R: Coeff> $tr<LaurentPoly<R>> for &LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<R: Coeff> std::iter::Product for LaurentPoly<R> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl<R: Coeff> std::iter::Sum for LaurentPoly<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_terms(
            self.terms.iter().rev().map(|(e, c)| (c.clone(), *e)),
        ))
    }
}

impl<R: Coeff + fmt::Display> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(low: i64, c: &[i64]) -> ZPoly {
        ZPoly::from_i64(low, c)
    }

    fn stevedore() -> ZPoly {
        z(-1, &[-2, 5, -2])
    }

    #[test]
    fn add_examples() {
        assert_eq!(z(0, &[1, -2]) + z(1, &[2]), ZPoly::one());
        assert_eq!(ZPoly::zero() + stevedore(), stevedore());
        let sum = stevedore() + z(-1, &[2, 0, 2]);
        // term-by-term oracle
        let expected: ZPoly = (-1..=1).map(|e| ZPoly::monomial(stevedore().coeff(e) + z(-1, &[2, 0, 2]).coeff(e), e)).sum();
        assert_eq!(sum, expected);
        assert_eq!(sum, ZPoly::from_i64(0, &[5]));
    }

    #[test]
    fn mul_examples() {
        let p = z(0, &[1, -2]);
        assert!((&p * &p.conj()).unit_equal(&stevedore()));
        assert_eq!(&p * &p.conj(), stevedore());
        assert_eq!(ZPoly::one() * &p, p);
        let second = z(0, &[2, -1]);
        assert_eq!(&second * &second.conj(), z(-1, &[-2, 5, -2]));
    }

    #[test]
    fn reciprocal_examples() {
        let quartic = z(0, &[1, -3, 3, -3, 1]);
        assert_eq!(quartic.reciprocal(), quartic);
        // 1 - 2t -> 1 - 2t^-1 ~ t - 2
        assert_eq!(z(0, &[1, -2]).reciprocal(), z(0, &[-2, 1]));
        assert_eq!(ZPoly::one().reciprocal(), ZPoly::one());
    }

    #[test]
    fn augment_examples() {
        assert_eq!(stevedore().augment(), BigInt::one());
        assert_eq!(z(0, &[1, 0, -1, 1]).augment(), BigInt::one());
        assert_eq!(ZPoly::zero().augment(), BigInt::zero());
    }

    #[test]
    fn unit_equal_examples() {
        assert!(z(0, &[1, -2]).unit_equal(&z(0, &[-1, 2])));
        assert!(z(0, &[1, -2]).unit_equal(&z(-1, &[1, -2])));
        assert!(!z(0, &[1, -2]).unit_equal(&z(0, &[2, -1])));
    }

    #[test]
    fn divides_examples() {
        let quartic = z(0, &[1, -3, 3, -3, 1]);
        let sq = &quartic * &quartic;
        assert_eq!(quartic.divides(&sq).unwrap(), Some(quartic.clone()));
        assert_eq!(ZPoly::one().divides(&sq).unwrap(), Some(sq.clone()));
        assert_eq!(z(0, &[1, 1]).divides(&z(0, &[1, 1, 1])).unwrap(), None);
        assert_eq!(ZPoly::zero().divides(&sq), Err(Error::DivisionByZero));
    }

    #[test]
    fn divides_is_exact_in_laurent_ring() {
        let a = z(-2, &[3, 0, 1]);
        let b = z(1, &[1, -1, 4]);
        let prod = &a * &b;
        assert_eq!(a.divides(&prod).unwrap(), Some(b.clone()));
        // over Z, 2t + 2 is not divisible by 3
        assert_eq!(z(0, &[3]).divides(&z(0, &[2, 2])).unwrap(), None);
    }

    #[test]
    fn mod2_examples() {
        assert_eq!(stevedore().mod2(), GF2Poly::one());
        assert_eq!(z(0, &[1, -3, 3, -3, 1]).mod2(), GF2Poly::from_exponents([0, 1, 2, 3, 4]));
        assert!(z(1, &[2]).mod2().is_zero());
    }

    #[test]
    fn canonical_form() {
        let p = z(-3, &[4, 0, -1]);
        let c = p.canonical();
        assert_eq!(c, z(0, &[-4, 0, 1]));
        assert_eq!(c.canonical(), c);
        assert!(ZPoly::zero().canonical().is_zero());
    }

    #[test]
    fn class_order_prefers_low_coefficients() {
        let a = z(0, &[-1, 2]);
        let b = z(0, &[2, -1]);
        assert!(a < b);
    }
}
