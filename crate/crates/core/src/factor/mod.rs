//! Irreducible factorization over `Z[t]` and GF(2)[t], and the divisor
//! lattices built on it: Fox witnesses, symmetric divisors, and factor
//! extraction from `f·b·b̄ = a·ā`.

mod fp;
mod hensel;
pub(crate) mod kronecker;
mod zassenhaus;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::gf2::GF2Poly;
use crate::laurent::ZPoly;
use crate::zx;

/// How a factor relates to its reciprocal within one factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pairing {
    SelfReciprocal(usize),
    /// Indices `(i, j)`, `i < j`, with `f_j` the reciprocal of `f_i`.
    Pair(usize, usize),
    /// The reciprocal does not occur.
    Unpaired(usize),
}

/// `a = sign · content · t^k · Π f_i^{m_i}` with each `f_i` canonical,
/// primitive and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactorization {
    pub sign: i8,
    pub content: BigInt,
    pub factors: Vec<(ZPoly, u32)>,
    pub pairing: Vec<Pairing>,
}

impl IrreducibleFactorization {
    /// `sign · content · Π f_i^{m_i}`.
    pub fn expand(&self) -> ZPoly {
        let base = ZPoly::constant(if self.sign < 0 { -self.content.clone() } else { self.content.clone() });
        self.factors.iter().fold(base, |acc, (f, m)| acc * f.pow(*m))
    }

    pub fn multiplicity(&self, f: &ZPoly) -> u32 {
        let c = f.canonical();
        self.factors.iter().find(|(g, _)| *g == c).map_or(0, |(_, m)| *m)
    }

    pub fn is_irreducible(&self) -> bool {
        self.content.is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

fn pairing(factors: &[(ZPoly, u32)]) -> Vec<Pairing> {
    let mut out = Vec::new();
    for (i, (f, _)) in factors.iter().enumerate() {
        let r = f.reciprocal();
        if r == *f {
            out.push(Pairing::SelfReciprocal(i));
            continue;
        }
        match factors.iter().position(|(g, _)| *g == r) {
            Some(j) if j > i => out.push(Pairing::Pair(i, j)),
            Some(_) => {}
            None => out.push(Pairing::Unpaired(i)),
        }
    }
    out
}

/// Complete factorization over `Z[t]` after removing the power of `t`.
pub fn factor_z(a: &ZPoly) -> Result<IrreducibleFactorization> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dense = a.dense();
    let sign = if zx::lc(&dense).is_negative() { -1 } else { 1 };
    let content = zx::content(&dense);
    let mut factors: Vec<(ZPoly, u32)> = Vec::new();
    for (g, m) in zx::squarefree_decomposition(&dense) {
        for h in zassenhaus::factor_squarefree(&g) {
            factors.push((zx::to_laurent(&h).canonical(), m));
        }
    }
    factors.sort_by(|x, y| x.0.class_cmp(&y.0));
    let pairing = pairing(&factors);
    Ok(IrreducibleFactorization { sign, content, factors, pairing })
}

/// Complete factorization over GF(2)[t] by trial division, smallest factors first.
pub fn factor_gf2(a: &GF2Poly) -> Result<Vec<(GF2Poly, u32)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut f = a.clone();
    let mut out = Vec::new();
    let mut d = 1usize;
    while f.degree().is_some_and(|n| n >= 2 * d) {
        assert!(d < 64, "GF(2) trial division beyond degree 63");
        for bits in (1u64 << d)..(1u64 << (d + 1)) {
            let cand = GF2Poly::from_bits(bits);
            let mut m = 0;
            while let Some(q) = f.exact_div(&cand) {
                f = q;
                m += 1;
            }
            if m > 0 {
                out.push((cand, m));
            }
        }
        d += 1;
    }
    if f.degree().is_some_and(|n| n > 0) {
        out.push((f, 1));
    }
    out.sort();
    Ok(out)
}

fn check_fox_precondition(delta: &ZPoly) -> Result<()> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !delta.augment().abs().is_one() {
        return Err(Error::Precondition(format!("{delta} does not augment to ±1")));
    }
    if !delta.is_self_reciprocal() {
        return Err(Error::Precondition(format!("{delta} is not self-reciprocal")));
    }
    Ok(())
}

/// All `p` (normalized to minimum exponent 0 and `p(1) = 1`) with
/// `p·p̄ = Δ` up to units, in canonical order.
pub fn fox_witnesses(delta: &ZPoly) -> Result<Vec<ZPoly>> {
    check_fox_precondition(delta)?;
    let fac = factor_z(delta)?;
    let mut choices: Vec<Vec<ZPoly>> = Vec::new();
    for pr in &fac.pairing {
        match *pr {
            Pairing::SelfReciprocal(i) => {
                let (f, m) = &fac.factors[i];
                if m % 2 != 0 {
                    return Ok(Vec::new());
                }
                choices.push(vec![f.pow(m / 2)]);
            }
            Pairing::Pair(i, j) => {
                let (f, m) = &fac.factors[i];
                let (g, mg) = &fac.factors[j];
                if m != mg {
                    return Ok(Vec::new());
                }
                choices.push((0..=*m).map(|k| f.pow(k) * g.pow(m - k)).collect());
            }
            Pairing::Unpaired(_) => return Ok(Vec::new()),
        }
    }
    let mut out: Vec<ZPoly> = choices
        .iter()
        .fold(vec![ZPoly::one()], |acc, opts| acc.iter().flat_map(|p| opts.iter().map(move |o| p * o)).collect())
        .into_iter()
        .map(|p| p.augmentation_normalized())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// All self-reciprocal divisors `D` of `Δ` with `D(1) = ±1`, normalized to
/// minimum exponent 0 and `D(1) = 1`, in canonical order.
pub fn symmetric_divisors(delta: &ZPoly) -> Result<Vec<ZPoly>> {
    let fac = factor_z(delta)?;
    let mut all = vec![ZPoly::one()];
    for (f, m) in &fac.factors {
        all = all.iter().flat_map(|d| (0..=*m).map(move |k| d * f.pow(k))).collect();
    }
    let mut out: Vec<ZPoly> = all
        .into_iter()
        .filter(|d| d.augment().abs().is_one() && d.is_self_reciprocal())
        .map(|d| d.augmentation_normalized())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Given `f·b·b̄ = a·ā` up to units, returns `c` (canonical) with `f = c·c̄` up
/// to units, by cancelling the primes of `b` out of `a` one at a time.
pub fn lemma_factor_extract(f: &ZPoly, a: &ZPoly, b: &ZPoly) -> Result<ZPoly> {
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !(f * b * b.conj()).unit_equal(&(a * a.conj())) {
        return Err(Error::Precondition("f·b·b̄ ≠ a·ā up to units".into()));
    }
    let fac = factor_z(b)?;
    let mut c = a
        .exact_div(&ZPoly::constant(fac.content.clone()))
        .ok_or_else(|| Error::Internal("content of b does not divide a".into()))?;
    for (p, e) in &fac.factors {
        let mut mult = 0;
        let mut probe = c.clone();
        while mult < *e {
            match probe.exact_div(p) {
                Some(q) => {
                    probe = q;
                    mult += 1;
                }
                None => break,
            }
        }
        let divisor = p.pow(mult) * p.conj().pow(e - mult);
        c = c.exact_div(&divisor).ok_or_else(|| Error::Internal(format!("({p})-part of b does not divide a")))?;
    }
    if !(&c * &c.conj()).unit_equal(f) {
        return Err(Error::Internal("extracted factor fails c·c̄ = f".into()));
    }
    Ok(c.canonical())
}

/// A nonconstant proper divisor found by Kronecker's method, for independent
/// irreducibility checks of small-degree polynomials.
pub fn kronecker_divisor(a: &ZPoly) -> Option<ZPoly> {
    let dense = zx::primitive(&a.dense());
    kronecker::proper_divisor(&dense).map(|g| zx::to_laurent(&g).canonical())
}
