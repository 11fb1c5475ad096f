//! Dense univariate integer polynomials (little-endian coefficient vectors).
//! Internal workhorse for factorization and cyclotomic reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::ZPoly;

pub(crate) type Zx = Vec<BigInt>;

pub(crate) fn trim(mut p: Zx) -> Zx {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

#[cfg(test)]
pub(crate) fn from_i64(c: &[i64]) -> Zx {
    trim(c.iter().map(|&x| BigInt::from(x)).collect())
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn lc(p: &[BigInt]) -> BigInt {
    degree(p).map_or_else(BigInt::zero, |d| p[d].clone())
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Zx {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()).collect())
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Zx {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()).collect())
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Zx {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[BigInt], s: &BigInt) -> Zx {
    trim(a.iter().map(|c| c * s).collect())
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Zx {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let c = if lc(a).is_negative() { -c } else { c };
    trim(a.iter().map(|x| x / &c).collect())
}

pub(crate) fn derivative(a: &[BigInt]) -> Zx {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

pub(crate) fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact division over Z; `None` if `d` does not divide `a` in `Z[x]`.
pub(crate) fn exact_div(a: &[BigInt], d: &[BigInt]) -> Option<Zx> {
    let dd = degree(d)?;
    let dlc = &d[dd];
    let mut r: Zx = trim(a.to_vec());
    let Some(ad) = degree(&r) else {
        return Some(Vec::new());
    };
    if ad < dd {
        return None;
    }
    let mut q = vec![BigInt::zero(); ad - dd + 1];
    while let Some(rd) = degree(&r) {
        if rd < dd {
            return None;
        }
        let (c, rem) = r[rd].div_rem(dlc);
        if !rem.is_zero() {
            return None;
        }
        let shift = rd - dd;
        for (i, dc) in d.iter().enumerate() {
            r[i + shift] -= &c * dc;
        }
        q[shift] = c;
        r = trim(r);
    }
    Some(trim(q))
}

/// Remainder of division by a monic polynomial.
pub(crate) fn rem_monic(a: &[BigInt], m: &[BigInt]) -> Zx {
    let md = degree(m).expect("reduction by zero polynomial");
    debug_assert!(m[md].is_one());
    let mut r = trim(a.to_vec());
    while let Some(rd) = degree(&r) {
        if rd < md {
            break;
        }
        let c = r[rd].clone();
        let shift = rd - md;
        for (i, mc) in m.iter().enumerate() {
            r[i + shift] -= &c * mc;
        }
        r = trim(r);
    }
    r
}

/// Pseudo-remainder `lc(b)^k a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Zx {
    let bd = degree(b).expect("pseudo-remainder by zero");
    let blc = b[bd].clone();
    let mut r = trim(a.to_vec());
    while let Some(rd) = degree(&r) {
        if rd < bd {
            break;
        }
        let c = r[rd].clone();
        r = scale(&r, &blc);
        let shift = rd - bd;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        r = trim(r);
    }
    r
}

/// Gcd in `Z[x]` via the primitive remainder sequence; positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Zx {
    if degree(a).is_none() {
        return primitive_with_content(b);
    }
    if degree(b).is_none() {
        return primitive_with_content(a);
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if degree(&x) < degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while degree(&y).is_some() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    scale(&primitive(&x), &c)
}

fn primitive_with_content(a: &[BigInt]) -> Zx {
    if lc(a).is_negative() {
        scale(a, &BigInt::from(-1))
    } else {
        trim(a.to_vec())
    }
}

/// Square-free decomposition of a primitive polynomial (Yun). Returns
/// `(factor, multiplicity)` pairs with nonconstant factors only.
pub(crate) fn squarefree_decomposition(f: &[BigInt]) -> Vec<(Zx, u32)> {
    let f = primitive(f);
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let fp = derivative(&f);
    let a0 = gcd(&f, &fp);
    let mut b = exact_div(&f, &a0).expect("gcd divides f");
    let c = exact_div(&fp, &a0).expect("gcd divides f'");
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        let a = primitive(&a);
        if degree(&a).unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        let nb = exact_div(&b, &a).expect("Yun step");
        let c = exact_div(&d, &a).expect("Yun step");
        d = sub(&c, &derivative(&nb));
        b = nb;
        i += 1;
    }
    out
}

pub(crate) fn to_laurent(p: &[BigInt]) -> ZPoly {
    ZPoly::from_coeffs(0, p.to_vec())
}
