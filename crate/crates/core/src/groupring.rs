//! The group ring `Z[Z/q × Z] = Z[g, t, t^-1]/(g^q - 1)`.
//!
//! Murasugi polynomials and the witnesses `a(g,t)`, `b(g,t)` live here. The
//! ring has zero divisors for `q > 1`, so no division is ever performed in it;
//! divisibility questions go through [`CharacterComponents`] or through
//! `Z[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{divisors, CyclotomicRing};
use crate::error::{Error, Result};
use crate::laurent::ZPoly;
use crate::polymat::det_bareiss;

/// Periods above this are rejected by the front ends unless raised explicitly.
pub const DEFAULT_MAX_PERIOD: u32 = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingPoly {
    q: u32,
    // keyed by (t-exponent, g-exponent in [0, q))
    terms: BTreeMap<(i64, u32), BigInt>,
}

fn reduce_g(i: i64, q: u32) -> u32 {
    i.rem_euclid(q as i64) as u32
}

/// `true` iff `u ∈ Z[Z/q]` (given as its `q` coefficients) is `±g^i`.
pub fn is_trivial_unit(u: &[BigInt]) -> bool {
    let mut nonzero = u.iter().filter(|c| !c.is_zero());
    matches!((nonzero.next(), nonzero.next()), (Some(c), None) if c.abs().is_one())
}

impl GroupRingPoly {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 1, "period must be at least 1");
        Self { q, terms: BTreeMap::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::constant(q, BigInt::one())
    }

    pub fn constant(q: u32, c: BigInt) -> Self {
        Self::monomial(q, c, 0, 0)
    }

    /// `c · g^i t^j`.
    pub fn monomial(q: u32, c: BigInt, i: i64, j: i64) -> Self {
        let mut p = Self::zero(q);
        if !c.is_zero() {
            p.terms.insert((j, reduce_g(i, q)), c);
        }
        p
    }

    pub fn g(q: u32) -> Self {
        Self::monomial(q, BigInt::one(), 1, 0)
    }

    pub fn t(q: u32) -> Self {
        Self::monomial(q, BigInt::one(), 0, 1)
    }

    /// Builds from `(g-exponent, t-exponent, coefficient)` triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, BigInt)>>(q: u32, iter: I) -> Self {
        let mut p = Self::zero(q);
        for (i, j, c) in iter {
            p.add_term(reduce_g(i, q), j, c);
        }
        p
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(q: u32, terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(q, terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    /// A `g`-free element.
    pub fn from_laurent(q: u32, p: &ZPoly) -> Self {
        Self::from_terms(q, p.terms().map(|(j, c)| (0, j, c.clone())))
    }

    fn add_term(&mut self, i: u32, j: i64, c: BigInt) {
        let entry = self.terms.entry((j, i)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(j, i));
        }
    }

    pub fn period(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(g-exponent, t-exponent, coefficient)` in `(t, g)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64, &BigInt)> + '_ {
        self.terms.iter().map(|((j, i), c)| (*i, *j, c))
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(j, reduce_g(i, self.q))).cloned().unwrap_or_default()
    }

    pub fn min_t_exp(&self) -> Option<i64> {
        self.terms.keys().next().map(|(j, _)| *j)
    }

    pub fn max_t_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|(j, _)| *j)
    }

    /// `h_i(t)`, the coefficient of `g^i`.
    pub fn g_coefficient(&self, i: u32) -> ZPoly {
        ZPoly::from_terms(self.terms.iter().filter(|((_, gi), _)| *gi == i).map(|((j, _), c)| (*j, c.clone())))
    }

    /// Multiplies by the unit `±g^i t^j`.
    pub fn mul_unit(&self, negate: bool, i: i64, j: i64) -> Self {
        let q = self.q;
        Self {
            q,
            terms: self
                .terms
                .iter()
                .map(|((tj, gi), c)| ((tj + j, reduce_g(*gi as i64 + i, q)), if negate { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_terms(self.q, self.terms().map(|(i, j, c)| (i as i64, j, c * s)))
    }

    fn check_period(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::PeriodMismatch(self.q, other.q))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_period(other)?;
        let mut out = self.clone();
        for ((j, i), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_period(other)?;
        let mut out = Self::zero(self.q);
        for ((ja, ia), ca) in &self.terms {
            for ((jb, ib), cb) in &other.terms {
                out.add_term((ia + ib) % self.q, ja + jb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.q), |acc, _| &acc * self)
    }

    /// `g -> g^-1`, `t -> t^-1`.
    pub fn involute(&self) -> Self {
        let q = self.q;
        Self { q, terms: self.terms.iter().map(|((j, i), c)| ((-j, (q - i) % q), c.clone())).collect() }
    }

    /// Evaluation at `t = 1`, as the `q` coefficients of an element of `Z[Z/q]`.
    pub fn augment_t(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.q as usize];
        for ((_, i), c) in &self.terms {
            out[*i as usize] += c;
        }
        out
    }

    /// Evaluation at `g = 1`.
    pub fn augment_g(&self) -> ZPoly {
        ZPoly::from_terms(self.terms.iter().map(|((j, _), c)| (*j, c.clone())))
    }

    /// Evaluation at `g = -1`; only meaningful for even `q`.
    pub fn eval_g_minus_one(&self) -> Result<ZPoly> {
        if self.q % 2 != 0 {
            return Err(Error::Precondition(format!("g = -1 is not a {}-th root of unity", self.q)));
        }
        Ok(ZPoly::from_terms(
            self.terms.iter().map(|((j, i), c)| (*j, if i % 2 == 0 { c.clone() } else { -c })),
        ))
    }

    fn table(&self) -> Vec<BigInt> {
        let (Some(lo), Some(hi)) = (self.min_t_exp(), self.max_t_exp()) else {
            return Vec::new();
        };
        (lo..=hi).flat_map(|j| (0..self.q).map(move |i| (j, i))).map(|(j, i)| self.coeff(i as i64, j)).collect()
    }

    /// Representative of the `±g^i t^j` class: minimum `t`-exponent 0 and the
    /// lexicographically least coefficient table among the `2q` multiples `±g^i`.
    pub fn canonical(&self) -> Self {
        let Some(lo) = self.min_t_exp() else {
            return self.clone();
        };
        let base = self.mul_unit(false, 0, -lo);
        (0..self.q as i64)
            .flat_map(|i| [false, true].map(|neg| base.mul_unit(neg, i, 0)))
            .min_by(|a, b| a.table().cmp(&b.table()))
            .expect("at least one candidate")
    }

    pub fn unit_equal(&self, other: &Self) -> bool {
        self.q == other.q && self.canonical() == other.canonical()
    }

    /// The unit `u = ±g^i t^j` with `self = u · other`, if any.
    pub fn unit_ratio(&self, other: &Self) -> Option<(bool, i64, i64)> {
        if self.q != other.q || self.is_zero() != other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some((false, 0, 0));
        }
        let j = self.min_t_exp()? - other.min_t_exp()?;
        (0..self.q as i64)
            .flat_map(|i| [false, true].map(|neg| (neg, i, j)))
            .find(|&(neg, i, j)| other.mul_unit(neg, i, j) == *self)
    }

    /// Image under `g -> ζ_d` for every divisor `d` of `q`.
    pub fn to_components(&self) -> CharacterComponents {
        let parts = divisors(self.q)
            .into_iter()
            .map(|d| {
                let ring = CyclotomicRing::new(d);
                let gens: Vec<Vec<BigInt>> = (0..self.q).map(|i| ring.power_of_generator(i)).collect();
                let mut coeffs: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
                for ((j, i), c) in &self.terms {
                    let v = coeffs.entry(*j).or_insert_with(|| vec![BigInt::zero(); ring.rank()]);
                    for (slot, x) in v.iter_mut().zip(&gens[*i as usize]) {
                        *slot += c * x;
                    }
                }
                coeffs.retain(|_, v| v.iter().any(|c| !c.is_zero()));
                CharacterPart { d, coeffs }
            })
            .collect();
        CharacterComponents { q: self.q, parts }
    }

    /// Exact inverse of [`to_components`](Self::to_components): fails when the
    /// preimage has non-integral coefficients.
    pub fn from_components(comp: &CharacterComponents) -> Result<Self> {
        let q = comp.q;
        let rings: Vec<CyclotomicRing> = divisors(q).into_iter().map(CyclotomicRing::new).collect();
        // column i: image of g^i, concatenated over divisors
        let image_cols: Vec<Vec<BigInt>> =
            (0..q).map(|i| rings.iter().flat_map(|r| r.power_of_generator(i)).collect()).collect();
        let n = q as usize;
        let mat: Vec<Vec<BigRational>> =
            (0..n).map(|row| (0..n).map(|col| BigRational::from_integer(image_cols[col][row].clone())).collect()).collect();
        let inv = invert_rational(mat).ok_or_else(|| Error::Internal("character map is not invertible".into()))?;
        let mut exps: Vec<i64> = comp.parts.iter().flat_map(|p| p.coeffs.keys().copied()).collect();
        exps.sort_unstable();
        exps.dedup();
        let mut out = Self::zero(q);
        for j in exps {
            let y: Vec<BigInt> = comp
                .parts
                .iter()
                .zip(&rings)
                .flat_map(|(p, r)| p.coeffs.get(&j).cloned().unwrap_or_else(|| vec![BigInt::zero(); r.rank()]))
                .collect();
            for (i, row) in inv.iter().enumerate() {
                let x: BigRational =
                    row.iter().zip(&y).fold(BigRational::zero(), |acc, (a, b)| acc + a * BigRational::from_integer(b.clone()));
                if !x.is_integer() {
                    return Err(Error::Congruence(format!("components do not lift to integer coefficients at t^{j}")));
                }
                out.add_term(i as u32, j, x.to_integer());
            }
        }
        Ok(out)
    }

    /// `(h(1,t), h(-1,t))` for `q = 2`.
    pub fn plus_minus(&self) -> Result<PlusMinusPair> {
        if self.q != 2 {
            return Err(Error::InvalidPeriod(self.q));
        }
        Ok(PlusMinusPair { plus: self.augment_g(), minus: self.eval_g_minus_one()? })
    }

    /// `h(g,t) = (1+g)/2 · h_+(t) + (1-g)/2 · h_-(t)` in `Z[Z/2 × Z]`.
    pub fn from_plus_minus(pair: &PlusMinusPair) -> Result<Self> {
        let mut exps: Vec<i64> = pair.plus.terms().map(|(e, _)| e).chain(pair.minus.terms().map(|(e, _)| e)).collect();
        exps.sort_unstable();
        exps.dedup();
        let two = BigInt::from(2);
        let mut out = Self::zero(2);
        for e in exps {
            let (p, m) = (pair.plus.coeff(e), pair.minus.coeff(e));
            let (sum, diff) = (&p + &m, &p - &m);
            if sum.is_odd() {
                return Err(Error::Congruence(format!("h_+ and h_- differ mod 2 at t^{e}")));
            }
            out.add_term(0, e, sum / &two);
            out.add_term(1, e, diff / &two);
        }
        Ok(out)
    }

    /// True when some character component vanishes, i.e. `self` is a zero divisor
    /// (or zero).
    pub fn is_zero_divisor(&self) -> bool {
        self.to_components().parts.iter().any(|p| p.coeffs.is_empty())
    }

    /// `Π_{ζ^q = 1} a(ζ, t)` as the determinant of the Sylvester matrix of
    /// `g^q - 1` and `a`, after clearing negative powers of `t`.
    pub fn norm_product_sylvester(&self) -> ZPoly {
        let Some(lo) = self.min_t_exp() else {
            return ZPoly::zero();
        };
        let q = self.q as usize;
        let shifted = self.mul_unit(false, 0, -lo);
        let coeffs: Vec<ZPoly> = (0..self.q).map(|i| shifted.g_coefficient(i)).collect();
        let m = coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero element");
        let res = if m == 0 {
            coeffs[0].pow(self.q)
        } else {
            let size = q + m;
            let mut mat = vec![vec![ZPoly::zero(); size]; size];
            // g^q - 1, descending
            let f_desc: Vec<ZPoly> =
                (0..=q).map(|k| if k == 0 { ZPoly::one() } else if k == q { -ZPoly::one() } else { ZPoly::zero() }).collect();
            let a_desc: Vec<ZPoly> = (0..=m).rev().map(|k| coeffs[k].clone()).collect();
            for r in 0..m {
                for (k, c) in f_desc.iter().enumerate() {
                    mat[r][r + k] = c.clone();
                }
            }
            for r in 0..q {
                for (k, c) in a_desc.iter().enumerate() {
                    mat[m + r][r + k] = c.clone();
                }
            }
            det_bareiss(mat)
        };
        res.shift(lo * self.q as i64)
    }

    /// The same product as a product of cyclotomic norms, one per divisor `d | q`,
    /// each computed as the determinant of multiplication on `Z[t^±][x]/Φ_d`.
    pub fn norm_product_cyclotomic(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let comps = self.to_components();
        comps
            .parts
            .iter()
            .map(|part| {
                let ring = CyclotomicRing::new(part.d);
                let n = ring.rank();
                let mut mat = vec![vec![ZPoly::zero(); n]; n];
                for (j, v) in &part.coeffs {
                    for (k, row) in mat.iter_mut().enumerate() {
                        let prod = ring.mul(&ring.power_of_generator(k as u32), v);
                        for (slot, c) in row.iter_mut().zip(prod) {
                            *slot = &*slot + &ZPoly::monomial(c, *j);
                        }
                    }
                }
                det_bareiss(mat)
            })
            .product()
    }

    /// `Π_{i=0}^{q-1} a(ζ^i, t)`, canonicalized. Both determinant routes are
    /// evaluated and must agree exactly.
    pub fn norm_product(&self) -> ZPoly {
        let syl = self.norm_product_sylvester();
        let cyc = self.norm_product_cyclotomic();
        assert_eq!(syl, cyc, "resultant routes disagree for {self}");
        syl.canonical()
    }
}

fn invert_rational(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for x in inv[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..n {
                    let (a, b) = (m[col][k].clone(), inv[col][k].clone());
                    m[r][k] -= &f * a;
                    inv[r][k] -= &f * b;
                }
            }
        }
    }
    Some(inv)
}

/// The image of a group-ring element in `Z[ζ_d][t, t^-1]` for one divisor `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPart {
    pub d: u32,
    /// `t`-exponent to element of `Z[ζ_d]` in the power basis.
    pub coeffs: BTreeMap<i64, Vec<BigInt>>,
}

impl CharacterPart {
    /// The part as an integer Laurent polynomial when `Z[ζ_d] = Z` (`d ≤ 2`).
    pub fn as_laurent(&self) -> Option<ZPoly> {
        (self.d <= 2).then(|| ZPoly::from_terms(self.coeffs.iter().map(|(j, v)| (*j, v[0].clone()))))
    }

    /// `self = ±ζ^i t^j · other` for some `i`, `j`.
    pub fn unit_equal(&self, other: &Self) -> bool {
        if self.d != other.d {
            return false;
        }
        let (Some(lo_a), Some(lo_b)) = (self.coeffs.keys().next(), other.coeffs.keys().next()) else {
            return self.coeffs.is_empty() && other.coeffs.is_empty();
        };
        let shift = lo_a - lo_b;
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        let ring = CyclotomicRing::new(self.d);
        (0..self.d).any(|i| {
            let z = ring.power_of_generator(i);
            let rotated: Vec<(i64, Vec<BigInt>)> = other.coeffs.iter().map(|(j, v)| (j + shift, ring.mul(&z, v))).collect();
            [false, true].iter().any(|&neg| {
                rotated.iter().all(|(j, v)| {
                    self.coeffs.get(j).is_some_and(|w| w.iter().zip(v).all(|(x, y)| if neg { *x == -y } else { x == y }))
                })
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterComponents {
    pub q: u32,
    pub parts: Vec<CharacterPart>,
}

impl CharacterComponents {
    pub fn part(&self, d: u32) -> Option<&CharacterPart> {
        self.parts.iter().find(|p| p.d == d)
    }

    /// Componentwise equality up to the units `±ζ^i t^j` of each component.
    pub fn unit_equal(&self, other: &Self) -> bool {
        self.q == other.q && self.parts.iter().zip(&other.parts).all(|(a, b)| a.unit_equal(b))
    }
}

/// `(h_+, h_-) = (h(1,t), h(-1,t))` for `q = 2`, exponent-aligned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlusMinusPair {
    pub plus: ZPoly,
    pub minus: ZPoly,
}

impl PlusMinusPair {
    pub fn new(plus: ZPoly, minus: ZPoly) -> Self {
        Self { plus, minus }
    }

    /// `h_+ ≡ h_- (mod 2)` coefficientwise, with no unit slack.
    pub fn is_congruent(&self) -> bool {
        self.plus.odd_exponents() == self.minus.odd_exponents()
    }
}

impl Neg for GroupRingPoly {
    type Output = Self;
    fn neg(self) -> Self {
        let q = self.q;
        Self { q, terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Neg for &GroupRingPoly {
    type Output = GroupRingPoly;
    fn neg(self) -> GroupRingPoly {
        -(self.clone())
    }
}

macro_rules! group_ring_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &GroupRingPoly {
            type Output = GroupRingPoly;
            /// Panics on mismatched periods; use the `checked_*` methods to handle that case.
            fn $method(self, rhs: Self) -> GroupRingPoly {
                self.$checked(rhs).expect("group ring operands must share a period")
            }
        }
        impl $tr for GroupRingPoly {
            type Output = GroupRingPoly;
            fn $method(self, rhs: Self) -> GroupRingPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GroupRingPoly> for GroupRingPoly {
            type Output = GroupRingPoly;
            fn $method(self, rhs: &GroupRingPoly) -> GroupRingPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<GroupRingPoly> for &GroupRingPoly {
            type Output = GroupRingPoly;
            fn $method(self, rhs: GroupRingPoly) -> GroupRingPoly {
                self.$method(&rhs)
            }
        }
    };
}

group_ring_binop!(Add, add, checked_add);
group_ring_binop!(Sub, sub, checked_sub);
group_ring_binop!(Mul, mul, checked_mul);

impl fmt::Display for GroupRingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_group_ring(self))
    }
}

impl fmt::Debug for GroupRingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingPoly(q={}, {self})", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(q: u32, t: &[(i64, i64, i64)]) -> GroupRingPoly {
        GroupRingPoly::from_i64(q, t)
    }

    /// (g-1)t + 3 - 2g + (g^-1 - 1)t^-1
    fn stevedore_murasugi() -> GroupRingPoly {
        gr(2, &[(1, 1, 1), (0, 1, -1), (0, 0, 3), (1, 0, -2), (-1, -1, 1), (0, -1, -1)])
    }

    fn z(low: i64, c: &[i64]) -> ZPoly {
        ZPoly::from_i64(low, c)
    }

    #[test]
    fn multiplication_examples() {
        let a = gr(2, &[(0, 0, 1), (1, 1, 1), (0, 1, -1)]);
        let b = gr(2, &[(0, 0, 1), (1, -1, 1), (0, -1, -1)]);
        assert_eq!(&a * &b, stevedore_murasugi());
        assert_eq!(GroupRingPoly::g(2) * GroupRingPoly::g(2), GroupRingPoly::one(2));
        let plus = gr(2, &[(0, 0, 1), (1, 0, 1)]);
        let minus = gr(2, &[(0, 0, 1), (1, 0, -1)]);
        assert!((plus * minus).is_zero());
    }

    #[test]
    fn mismatched_periods() {
        assert_eq!(GroupRingPoly::one(2).checked_mul(&GroupRingPoly::one(3)), Err(Error::PeriodMismatch(2, 3)));
    }

    #[test]
    fn involute_examples() {
        assert_eq!(stevedore_murasugi().involute(), stevedore_murasugi());
        assert_eq!(GroupRingPoly::one(3).involute(), GroupRingPoly::one(3));
        let a = gr(2, &[(0, 0, 1), (1, 0, -1), (1, 1, 1)]);
        assert_eq!(a.involute(), gr(2, &[(0, 0, 1), (1, 0, -1), (1, -1, 1)]));
    }

    #[test]
    fn augment_examples() {
        let one_zero = vec![BigInt::one(), BigInt::zero()];
        assert_eq!(stevedore_murasugi().augment_t(), one_zero);
        assert_eq!(gr(2, &[(0, 0, 1), (1, 0, -1), (1, 1, 1)]).augment_t(), one_zero);
        let w = gr(2, &[(0, 0, 1), (0, 1, -1), (1, 1, -1)]);
        assert_eq!(w.augment_t(), vec![BigInt::zero(), BigInt::from(-1)]);
        assert!(is_trivial_unit(&w.augment_t()));

        assert_eq!(stevedore_murasugi().augment_g(), ZPoly::one());
        assert_eq!(gr(2, &[(0, 0, 1), (1, 0, -1), (1, 1, 1)]).augment_g(), z(1, &[1]));
        assert_eq!(GroupRingPoly::constant(5, BigInt::from(7)).augment_g(), z(0, &[7]));
    }

    #[test]
    fn trivial_units() {
        assert!(is_trivial_unit(&[BigInt::zero(), BigInt::from(-1)]));
        assert!(is_trivial_unit(&[BigInt::one(), BigInt::zero()]));
        assert!(!is_trivial_unit(&[BigInt::from(3), BigInt::from(-2)]));
        assert!(!is_trivial_unit(&[BigInt::zero(), BigInt::zero()]));
    }

    #[test]
    fn component_examples() {
        let pm = stevedore_murasugi().plus_minus().unwrap();
        assert_eq!(pm.plus, ZPoly::one());
        assert_eq!(pm.minus, z(-1, &[-2, 5, -2]));
        let w = gr(2, &[(0, 0, 1), (0, 1, -1), (1, 1, -1)]);
        let pm = w.plus_minus().unwrap();
        assert_eq!((pm.plus, pm.minus), (z(0, &[1, -2]), ZPoly::one()));
        let c = GroupRingPoly::one(6).to_components();
        assert!(c.parts.iter().all(|p| p.coeffs.len() == 1 && p.coeffs[&0][0].is_one()));
    }

    #[test]
    fn norm_product_examples() {
        assert!(stevedore_murasugi().norm_product().unit_equal(&z(-1, &[-2, 5, -2])));
        for q in 1..=6 {
            assert_eq!(GroupRingPoly::one(q).norm_product(), ZPoly::one());
        }
        let w = gr(2, &[(0, 0, 1), (0, 1, -1), (1, 1, -1)]);
        assert!(w.norm_product().unit_equal(&z(0, &[1, -2])));
    }

    #[test]
    fn plus_minus_round_trip() {
        let pair = PlusMinusPair::new(z(0, &[1, -2]), ZPoly::one());
        let h = GroupRingPoly::from_plus_minus(&pair).unwrap();
        assert!(h.unit_equal(&gr(2, &[(0, 0, 1), (0, 1, -1), (1, 1, -1)])));
        assert_eq!(h.plus_minus().unwrap(), pair);
        assert_eq!(GroupRingPoly::from_plus_minus(&PlusMinusPair::new(ZPoly::one(), ZPoly::one())).unwrap(), GroupRingPoly::one(2));
        let bad = PlusMinusPair::new(z(0, &[1, 1]), ZPoly::one());
        assert!(matches!(GroupRingPoly::from_plus_minus(&bad), Err(Error::Congruence(_))));
    }

    #[test]
    fn general_reconstruction_matches_plus_minus() {
        let h = stevedore_murasugi();
        assert_eq!(GroupRingPoly::from_components(&h.to_components()).unwrap(), h);
        let h6 = gr(6, &[(0, 0, 1), (5, 2, -3), (2, -1, 4), (3, 0, 7)]);
        assert_eq!(GroupRingPoly::from_components(&h6.to_components()).unwrap(), h6);
    }

    #[test]
    fn canonical_is_unit_invariant() {
        let h = stevedore_murasugi();
        let c = h.canonical();
        assert_eq!(h.mul_unit(true, 1, 5).canonical(), c);
        assert_eq!(c.min_t_exp(), Some(0));
        assert_eq!(h.unit_ratio(&h.mul_unit(true, 1, 3)), Some((true, 1, -3)));
    }
}
