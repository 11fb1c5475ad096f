//! The field `Q(t)` and dense matrices over it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{QPoly, ZPoly};
use crate::notation::{format_fraction, parse_fraction};

type Dense = Vec<BigRational>;

fn trim(mut a: Dense) -> Dense {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn dense_rem(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = b[db].recip();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() * &inv;
        for (k, bc) in b.iter().enumerate() {
            r[shift + k] -= &c * bc;
        }
        r = trim(r);
    }
    r
}

fn dense_gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Dense coefficients of `p · t^{-min_exp}`.
fn normalized_dense(p: &QPoly) -> (i64, Dense) {
    (p.min_exp().unwrap_or(0), p.dense())
}

/// An element of `Q(t)` as a reduced fraction. The denominator is a monic
/// polynomial with nonzero constant term; powers of `t` live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (nlo, nd) = normalized_dense(&num);
        let (dlo, dd) = normalized_dense(&den);
        let g = dense_gcd(&nd, &dd);
        let num = QPoly::from_coeffs(nlo - dlo, nd).exact_div(&QPoly::from_coeffs(0, g.clone())).expect("gcd divides");
        let den = QPoly::from_coeffs(0, dd).exact_div(&QPoly::from_coeffs(0, g)).expect("gcd divides");
        let lc = den.leading_coeff().expect("nonzero").recip();
        Ok(Self { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_zpolys(num: &ZPoly, den: &ZPoly) -> Result<Self> {
        Self::new(num.to_rational(), den.to_rational())
    }

    pub fn zero() -> Self {
        Self { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self { num: p, den: QPoly::one() }
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        Self::from_poly(p.to_rational())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::constant(BigRational::from_integer(BigInt::from(c))))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction(s)?;
        Self::from_zpolys(&n, &d)
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `t -> t^-1`.
    pub fn conj(&self) -> Self {
        Self::new(self.num.conj(), self.den.conj()).expect("nonzero denominator")
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok((0..n.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base))
    }

    /// Denominator does not vanish at `t = 1`, i.e. the element lies in the
    /// localization of `Q[t, t^-1]` at the augmentation ideal.
    pub fn is_local(&self) -> bool {
        !self.den.augment().is_zero()
    }

    /// `self = ±t^k · other`.
    pub fn unit_equal(&self, other: &Self) -> bool {
        self.den == other.den && self.num.unit_equal(&other.num)
    }

    /// `self = ±other`.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == -other
    }

    /// Integer numerator and denominator: coprime contents, positive leading
    /// coefficient in the denominator.
    pub fn to_integer_fraction(&self) -> (ZPoly, ZPoly) {
        let l = self
            .num
            .terms()
            .chain(self.den.terms())
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let lift = |p: &QPoly| ZPoly::from_terms(p.terms().map(|(e, c)| (e, (c * &l).to_integer())));
        let (n, d) = (lift(&self.num), lift(&self.den));
        let g = n.content().gcd(&d.content());
        let div = |p: &ZPoly| ZPoly::from_terms(p.terms().map(|(e, c)| (e, c / &g)));
        (div(&n), div(&d))
    }
}

impl From<ZPoly> for RationalFunction {
    fn from(p: ZPoly) -> Self {
        Self::from_zpoly(&p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.to_integer_fraction();
        f.write_str(&format_fraction(&n, &d))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

/// Panics on division by zero; use [`RationalFunction::inv`] for a checked version.
impl Div for &RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero in Q(t)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

/// A dense matrix over `Q(t)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RfMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl RfMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RationalFunction::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MalformedComplex("ragged matrix rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// An `rows × cols` matrix; `rows_data` may be empty when either dimension is 0.
    pub fn with_shape(rows: usize, cols: usize, rows_data: Vec<Vec<RationalFunction>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            if rows_data.iter().any(|r| !r.is_empty()) || (rows_data.len() != rows && !rows_data.is_empty()) {
                return Err(Error::MalformedComplex(format!("expected a {rows}×{cols} matrix")));
            }
            return Ok(Self::zeros(rows, cols));
        }
        let m = Self::from_rows(rows_data)?;
        if m.rows != rows || m.cols != cols {
            return Err(Error::MalformedComplex(format!(
                "expected a {rows}×{cols} matrix, found {}×{}",
                m.rows, m.cols
            )));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<RationalFunction>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFunction::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn conj(&self) -> Self {
        self.map(RationalFunction::conj)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::MalformedComplex(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::MalformedComplex("shape mismatch in subtraction".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Row echelon reduction: `(pivot rows, pivot columns)` of a maximal
    /// independent set of rows, in the order they were found.
    pub fn row_basis(&self) -> (Vec<usize>, Vec<usize>) {
        let mut work = self.clone();
        let mut origin: Vec<usize> = (0..self.rows).collect();
        let mut pivot_rows = Vec::new();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..work.rows).find(|&i| !work[(i, c)].is_zero()) else {
                continue;
            };
            work.swap_rows(r, p);
            origin.swap(r, p);
            let inv = work[(r, c)].inv().expect("pivot is nonzero");
            for i in r + 1..work.rows {
                if work[(i, c)].is_zero() {
                    continue;
                }
                let f = &work[(i, c)] * &inv;
                for j in c..work.cols {
                    let v = &work[(i, j)] - &(&f * &work[(r, j)]);
                    work[(i, j)] = v;
                }
            }
            pivot_rows.push(origin[r]);
            pivot_cols.push(c);
            r += 1;
        }
        (pivot_rows, pivot_cols)
    }

    pub fn rank(&self) -> usize {
        self.row_basis().0.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn det(&self) -> Result<RationalFunction> {
        if self.rows != self.cols {
            return Err(Error::MalformedComplex(format!("determinant of a {}×{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = RationalFunction::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !work[(i, c)].is_zero()) else {
                return Ok(RationalFunction::zero());
            };
            if p != c {
                work.swap_rows(c, p);
                det = -det;
            }
            det = &det * &work[(c, c)];
            let inv = work[(c, c)].inv()?;
            for i in c + 1..n {
                if work[(i, c)].is_zero() {
                    continue;
                }
                let f = &work[(i, c)] * &inv;
                for j in c..n {
                    let v = &work[(i, j)] - &(&f * &work[(c, j)]);
                    work[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::MalformedComplex("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&i| !work[(i, c)].is_zero())
                .ok_or_else(|| Error::NotAcyclic("singular matrix".into()))?;
            work.swap_rows(c, p);
            inv.swap_rows(c, p);
            let s = work[(c, c)].inv()?;
            for j in 0..n {
                work[(c, j)] = &work[(c, j)] * &s;
                inv[(c, j)] = &inv[(c, j)] * &s;
            }
            for i in 0..n {
                if i == c || work[(i, c)].is_zero() {
                    continue;
                }
                let f = work[(i, c)].clone();
                for j in 0..n {
                    let w = &work[(i, j)] - &(&f * &work[(c, j)]);
                    work[(i, j)] = w;
                    let v = &inv[(i, j)] - &(&f * &inv[(c, j)]);
                    inv[(i, j)] = v;
                }
            }
        }
        Ok(inv)
    }

    pub fn is_local(&self) -> bool {
        self.data.iter().all(RationalFunction::is_local)
    }
}

impl std::ops::Index<(usize, usize)> for RfMatrix {
    type Output = RationalFunction;

    fn index(&self, (i, j): (usize, usize)) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RfMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RationalFunction {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}
