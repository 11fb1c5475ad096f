//! Kronecker's interpolation method: slow but independent of modular
//! arithmetic. Used as a fallback and as a cross-check for small degrees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::zx::{self, Zx};

/// Positive divisors of `n ≠ 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let root = n.sqrt();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while d <= root {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Lagrange basis polynomials for the nodes `xs`, as rational coefficient vectors.
fn lagrange_basis(xs: &[BigInt]) -> Vec<Vec<BigRational>> {
    xs.iter()
        .enumerate()
        .map(|(k, xk)| {
            let mut poly = vec![BigRational::one()];
            let mut denom = BigInt::one();
            for (l, xl) in xs.iter().enumerate() {
                if l == k {
                    continue;
                }
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c.clone();
                    next[i] -= c * BigRational::from_integer(xl.clone());
                }
                poly = next;
                denom *= xk - xl;
            }
            let denom = BigRational::from_integer(denom);
            poly.into_iter().map(|c| c / &denom).collect()
        })
        .collect()
}

/// Interpolation nodes: the `count` integers near zero with smallest `|f(x)|`
/// (all nonzero), or an integer root of `f`.
fn nodes(f: &[BigInt], count: usize) -> Result<Vec<(BigInt, BigInt)>, BigInt> {
    let mut cands = Vec::new();
    for k in 0..(4 * count as i64 + 8) {
        let x = BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        let v = zx::eval(f, &x);
        if v.is_zero() {
            return Err(x);
        }
        cands.push((x, v));
    }
    cands.sort_by(|a, b| a.1.abs().cmp(&b.1.abs()).then_with(|| a.0.abs().cmp(&b.0.abs())).then_with(|| a.0.cmp(&b.0)));
    cands.truncate(count);
    Ok(cands)
}

/// A nonconstant proper divisor of the primitive polynomial `f`, if any.
pub(crate) fn proper_divisor(f: &[BigInt]) -> Option<Zx> {
    let n = zx::degree(f)?;
    for d in 1..=n / 2 {
        let pts = match nodes(f, d + 1) {
            Ok(p) => p,
            Err(root) => return Some(vec![-root, BigInt::one()]),
        };
        let xs: Vec<BigInt> = pts.iter().map(|(x, _)| x.clone()).collect();
        let basis = lagrange_basis(&xs);
        let divs: Vec<Vec<BigInt>> = pts
            .iter()
            .enumerate()
            .map(|(k, (_, v))| {
                let pos = divisors(v);
                if k == 0 {
                    pos
                } else {
                    pos.iter().flat_map(|x| [x.clone(), -x]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; d + 1];
        loop {
            let mut coeffs = vec![BigRational::zero(); d + 1];
            for (k, b) in basis.iter().enumerate() {
                let y = BigRational::from_integer(divs[k][idx[k]].clone());
                for (c, bc) in coeffs.iter_mut().zip(b) {
                    *c += &y * bc;
                }
            }
            if coeffs.iter().all(|c| c.is_integer()) && !coeffs[d].is_zero() {
                let g: Zx = coeffs.iter().map(|c| c.to_integer()).collect();
                if zx::exact_div(f, &g).is_some() {
                    return Some(zx::primitive(&g));
                }
            }
            let mut k = 0;
            loop {
                if k > d {
                    break;
                }
                idx[k] += 1;
                if idx[k] < divs[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k > d {
                break;
            }
        }
    }
    None
}

/// Complete factorization of a primitive polynomial into primitive irreducibles
/// (with repetition).
pub(crate) fn factor(f: &[BigInt]) -> Vec<Zx> {
    let f = zx::primitive(f);
    if zx::degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    match proper_divisor(&f) {
        None => vec![f],
        Some(g) => {
            let h = zx::exact_div(&f, &g).expect("divisor divides");
            let mut out = factor(&g);
            out.extend(factor(&h));
            out
        }
    }
}
