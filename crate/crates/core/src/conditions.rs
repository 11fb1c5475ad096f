//! Decision procedures and witness builders: abstract Alexander polynomials,
//! Fox slice factorizations, Murasugi conditions, equivariant slice and ribbon
//! witnesses, and the period-2 criteria.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::factor::{factor_gf2, factor_z, fox_witnesses, Pairing};
use crate::gf2::GF2Poly;
use crate::groupring::{is_trivial_unit, GroupRingPoly, PlusMinusPair};
use crate::laurent::ZPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceWitness {
    pub p: ZPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqSliceWitness {
    pub q: u32,
    pub delta_zq: GroupRingPoly,
    pub a: GroupRingPoly,
    pub b: GroupRingPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqRibbonWitness {
    pub q: u32,
    pub a: GroupRingPoly,
}

/// What a negative answer exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub candidates: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Yes(W),
    No(Certificate),
}

impl<W> Verdict<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Yes(w) => Some(w),
            Verdict::No(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Yes(_) => None,
            Verdict::No(c) => Some(c),
        }
    }
}

/// A positive period-2 answer: Fox witnesses `p | Δ`, `q | Δ_quot` with `q | p`,
/// and the group-ring witness built from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEquivariant<W> {
    pub p: ZPoly,
    pub q: ZPoly,
    pub witness: W,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MurasugiReport {
    pub symmetric: bool,
    pub augments: bool,
    pub knot_poly: ZPoly,
    pub quotient_poly: ZPoly,
    pub quotient_divides: bool,
}

impl MurasugiReport {
    pub fn holds(&self) -> bool {
        self.symmetric && self.augments && self.quotient_divides
    }
}

pub fn is_abstract_alexander(delta: &ZPoly) -> bool {
    !delta.is_zero() && delta.augment().abs().is_one() && delta.is_self_reciprocal()
}

fn require_alexander(delta: &ZPoly) -> Result<()> {
    if is_abstract_alexander(delta) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{delta} is not an abstract Alexander polynomial")))
    }
}

pub fn check_fox_slice(delta: &ZPoly) -> Result<Verdict<SliceWitness>> {
    require_alexander(delta)?;
    let ps = fox_witnesses(delta)?;
    if let Some(p) = ps.into_iter().next() {
        return Ok(Verdict::Yes(SliceWitness { p }));
    }
    let fac = factor_z(delta)?;
    let reason = fac
        .pairing
        .iter()
        .find_map(|pr| match *pr {
            Pairing::SelfReciprocal(i) if fac.factors[i].1 % 2 == 1 => {
                Some(format!("self-reciprocal factor {} has odd multiplicity {}", fac.factors[i].0, fac.factors[i].1))
            }
            Pairing::Pair(i, j) if fac.factors[i].1 != fac.factors[j].1 => {
                Some(format!("factor {} and its reciprocal have unequal multiplicities", fac.factors[i].0))
            }
            Pairing::Unpaired(i) => Some(format!("factor {} has no reciprocal partner", fac.factors[i].0)),
            _ => None,
        })
        .unwrap_or_else(|| "no Fox factorization".into());
    Ok(Verdict::No(Certificate { candidates: 0, reason }))
}

pub fn check_murasugi(delta_zq: &GroupRingPoly) -> MurasugiReport {
    let knot_poly = delta_zq.norm_product();
    let quotient_poly = delta_zq.augment_g().canonical();
    let quotient_divides = !quotient_poly.is_zero() && matches!(quotient_poly.divides(&knot_poly), Ok(Some(_)));
    MurasugiReport {
        symmetric: delta_zq.unit_equal(&delta_zq.involute()),
        augments: is_trivial_unit(&delta_zq.augment_t()),
        knot_poly,
        quotient_poly,
        quotient_divides,
    }
}

/// Checks `Δ·b·b̄ = a·ā` component by component (up to the units of each
/// character component) and that `a(g,1)`, `b(g,1)` are trivial units.
pub fn verify_eqslice(w: &EqSliceWitness) -> bool {
    let q = w.q;
    if w.delta_zq.period() != q || w.a.period() != q || w.b.period() != q {
        return false;
    }
    if !is_trivial_unit(&w.a.augment_t()) || !is_trivial_unit(&w.b.augment_t()) {
        return false;
    }
    let lhs = &w.delta_zq * &w.b * w.b.involute();
    let rhs = &w.a * w.a.involute();
    lhs.to_components().unit_equal(&rhs.to_components())
}

/// Checks `Δ = a·ā` up to a trivial unit and that `a(g,1)` is a trivial unit.
pub fn verify_eqribbon(w: &EqRibbonWitness, delta_zq: &GroupRingPoly) -> bool {
    w.a.period() == w.q
        && delta_zq.period() == w.q
        && is_trivial_unit(&w.a.augment_t())
        && delta_zq.unit_equal(&(&w.a * w.a.involute()))
}

/// For `p ≡ ±t^k (mod q)` with `p(1) = ±1`, writes `±t^-k p = q·h + 1` and
/// returns `a = (1 + g + ... + g^{q-1})·h + 1`.
pub fn modq_witness(p: &ZPoly, q: u32) -> Result<EqRibbonWitness> {
    if q == 0 {
        return Err(Error::InvalidPeriod(q));
    }
    if p.is_zero() || !p.augment().abs().is_one() {
        return Err(Error::Precondition(format!("{p} does not augment to ±1")));
    }
    if q == 1 {
        return Ok(EqRibbonWitness { q, a: GroupRingPoly::from_laurent(1, &p.augmentation_normalized()) });
    }
    let qb = BigInt::from(q);
    let off: Vec<(i64, &BigInt)> = p.terms().filter(|(_, c)| !c.is_multiple_of(&qb)).collect();
    let [(e, c)] = off.as_slice() else {
        return Err(Error::Congruence(format!("{p} is not congruent to a unit mod {q}")));
    };
    let sign = if (*c - 1i32).is_multiple_of(&qb) {
        BigInt::one()
    } else if (*c + 1i32).is_multiple_of(&qb) {
        -BigInt::one()
    } else {
        return Err(Error::Congruence(format!("{p} is not congruent to a unit mod {q}")));
    };
    let aligned = p.shift(-e).scale(&sign);
    let h = (&aligned - &ZPoly::one()).exact_div(&ZPoly::constant(qb)).expect("congruence checked");
    let orbit = GroupRingPoly::from_terms(q, (0..q as i64).map(|i| (i, 0, BigInt::one())));
    let a = orbit * GroupRingPoly::from_laurent(q, &h) + GroupRingPoly::one(q);
    let target = p * p.conj();
    let murasugi = &a * a.involute();
    if !(a.augment_g() * a.augment_g().conj()).unit_equal(&target) || !murasugi.norm_product().unit_equal(&target) {
        return Err(Error::Internal("mod-q witness fails its norm check".into()));
    }
    Ok(EqRibbonWitness { q, a })
}

fn require_two_eq_pre(delta: &ZPoly, delta_quot: &ZPoly) -> Result<()> {
    require_alexander(delta)?;
    require_alexander(delta_quot)?;
    match delta_quot.divides(delta)? {
        Some(_) => Ok(()),
        None => Err(Error::Precondition(format!("{delta_quot} does not divide {delta}"))),
    }
}

fn two_eq_search<W>(
    delta: &ZPoly,
    delta_quot: &ZPoly,
    accept: impl Fn(&ZPoly, &ZPoly) -> bool,
    build: impl Fn(&ZPoly, &ZPoly) -> Result<W>,
    congruence: Option<String>,
) -> Result<Verdict<TwoEquivariant<W>>> {
    let ps = fox_witnesses(delta)?;
    let qs = fox_witnesses(delta_quot)?;
    let candidates = ps.len() * qs.len();
    if let Some(reason) = congruence {
        return Ok(Verdict::No(Certificate { candidates, reason }));
    }
    for p in &ps {
        for q in &qs {
            if matches!(q.divides(p), Ok(Some(_))) && accept(p, q) {
                let witness = build(p, q)?;
                return Ok(Verdict::Yes(TwoEquivariant { p: p.clone(), q: q.clone(), witness }));
            }
        }
    }
    let reason = if ps.is_empty() {
        "Δ has no Fox factorization".to_string()
    } else if qs.is_empty() {
        "Δ_quot has no Fox factorization".to_string()
    } else {
        "no Fox pair (p, q) with q | p satisfies the conditions".to_string()
    };
    Ok(Verdict::No(Certificate { candidates, reason }))
}

/// The period-2 equivariant slice criterion for `(Δ, Δ_quot)`.
pub fn check_2eq_slice(delta: &ZPoly, delta_quot: &ZPoly) -> Result<Verdict<TwoEquivariant<EqSliceWitness>>> {
    require_two_eq_pre(delta, delta_quot)?;
    let congruent = delta.mod2() == delta_quot.mod2().mul(&delta_quot.mod2());
    let congruence = (!congruent).then(|| "Δ ≢ Δ_quot² (mod 2)".to_string());
    two_eq_search(delta, delta_quot, |_, _| true, build_2eq_slice_witness, congruence)
}

/// The period-2 equivariant ribbon criterion for `(Δ, Δ_quot)`.
pub fn check_2eq_ribbon(delta: &ZPoly, delta_quot: &ZPoly) -> Result<Verdict<TwoEquivariant<EqRibbonWitness>>> {
    require_two_eq_pre(delta, delta_quot)?;
    two_eq_search(
        delta,
        delta_quot,
        |p, q| p.mod2() == q.mod2().mul(&q.mod2()),
        build_2eq_ribbon_witness,
        None,
    )
}

/// `t^k·x` with `k` chosen so that `x` and `reference` have the same odd
/// coefficients, if their reductions mod 2 agree up to a power of `t`.
fn align_mod2(x: &ZPoly, reference: &ZPoly) -> Option<ZPoly> {
    let (xs, rs) = (x.odd_exponents(), reference.odd_exponents());
    let k = rs.first()? - xs.first()?;
    let shifted = x.shift(k);
    (shifted.odd_exponents() == rs).then_some(shifted)
}

fn pair(plus: &ZPoly, minus: &ZPoly) -> Result<GroupRingPoly> {
    let aligned = align_mod2(minus, plus)
        .ok_or_else(|| Error::Congruence(format!("{plus} and {minus} differ mod 2 beyond a power of t")))?;
    GroupRingPoly::from_plus_minus(&PlusMinusPair::new(plus.clone(), aligned))
}

fn quotient(p: &ZPoly, q: &ZPoly) -> Result<ZPoly> {
    q.divides(p)?.ok_or_else(|| Error::Precondition(format!("{q} does not divide {p}")))
}

/// `a = (1+g)/2·q + (1-g)/2·r` with `r = p/q`, after aligning `r` with `q` mod 2.
pub fn build_2eq_ribbon_witness(p: &ZPoly, q: &ZPoly) -> Result<EqRibbonWitness> {
    let r = quotient(p, q)?;
    let a = pair(q, &r)?;
    let w = EqRibbonWitness { q: 2, a };
    let r_aligned = w.a.eval_g_minus_one()?;
    let delta = pair(&(q * q.conj()), &(&r_aligned * r_aligned.conj()))?;
    if !verify_eqribbon(&w, &delta) {
        return Err(Error::Internal("ribbon witness fails verification".into()));
    }
    Ok(w)
}

/// Multiplicity of `f` in `g` over GF(2).
fn valuation(g: &GF2Poly, f: &GF2Poly) -> u32 {
    let mut g = g.clone();
    let mut v = 0;
    while let Some(q) = g.exact_div(f) {
        g = q;
        v += 1;
    }
    v
}

/// `C`, `D` over GF(2) with `R = C·D` and `Q = C·D̄` up to powers of `t`,
/// given `R·R̄ = Q·Q̄`.
pub(crate) fn split_cd(r: &GF2Poly, q: &GF2Poly) -> Result<(GF2Poly, GF2Poly)> {
    let mut primes: Vec<GF2Poly> = factor_gf2(r)?.into_iter().chain(factor_gf2(q)?).map(|(f, _)| f).collect();
    primes.sort();
    primes.dedup();
    let mut c = GF2Poly::one();
    let mut done: Vec<GF2Poly> = Vec::new();
    for pi in &primes {
        if done.contains(pi) {
            continue;
        }
        let bar = pi.reciprocal();
        let (r_pi, q_pi) = (valuation(r, pi), valuation(q, pi));
        if bar == *pi {
            if r_pi != q_pi {
                return Err(Error::Construction(format!("self-reciprocal factor {pi} has unequal multiplicities")));
            }
            c = c.mul(&pi.pow(r_pi));
        } else {
            let r_bar = valuation(r, &bar);
            let x = q_pi as i64 - r_bar as i64;
            if x >= 0 {
                c = c.mul(&pi.pow(x as u32));
            } else {
                c = c.mul(&bar.pow((-x) as u32));
            }
            done.push(bar);
        }
        done.push(pi.clone());
    }
    let d = r.exact_div(&c).ok_or_else(|| Error::Construction(format!("{c} does not divide {r} mod 2")))?;
    if q.canonical() != c.mul(&d.reciprocal()).canonical() {
        return Err(Error::Construction(format!("no splitting of {r} against {q} mod 2")));
    }
    Ok((c, d))
}

/// The lift of a GF(2) polynomial with 0/1 coefficients, corrected by a
/// constant even term so that it augments to exactly 1.
fn lift_unit_augmented(x: &GF2Poly) -> ZPoly {
    let lift = ZPoly::from_terms(x.exponents().into_iter().map(|e| (e as i64, BigInt::one())));
    let aug = lift.augment();
    debug_assert!(aug.is_odd());
    let s = (BigInt::one() - aug) / 2;
    lift + ZPoly::constant(s * 2)
}

/// Builds `(Δ_{Z/2}, a, b)` from Fox witnesses `p` of `Δ` and `q` of `Δ_quot`
/// with `q | p` and `r·r̄ ≡ q·q̄ (mod 2)`, `r = p/q`.
pub fn build_2eq_slice_witness(p: &ZPoly, q: &ZPoly) -> Result<EqSliceWitness> {
    let r = quotient(p, q)?;
    if (&r * r.conj()).mod2() != (q * q.conj()).mod2() {
        return Err(Error::Precondition("r·r̄ ≢ q·q̄ (mod 2)".into()));
    }
    let (cm, dm) = split_cd(&r.mod2(), &q.mod2())?;
    let (c, d) = (lift_unit_augmented(&cm), lift_unit_augmented(&dm));
    let delta_zq = pair(&(q * q.conj()), &(&r * r.conj()))?;
    let a = pair(&(q * c.conj() * &d), &(&r * c.conj() * d.conj()))?;
    let b = GroupRingPoly::from_laurent(2, &(&c * &d));
    let w = EqSliceWitness { q: 2, delta_zq, a, b };
    if !verify_eqslice(&w) {
        return Err(Error::Internal("slice witness fails verification".into()));
    }
    Ok(w)
}

/// The slice witness given componentwise: `Δ_{Z/2}` from `(Δ_+, Δ_-)`, `a` from
/// `(a_+, a_-)` and `b` from `(b_+, b_-)`, each pair aligned mod 2.
pub fn eqslice_from_components(
    delta: (&ZPoly, &ZPoly),
    a: (&ZPoly, &ZPoly),
    b: (&ZPoly, &ZPoly),
) -> Result<EqSliceWitness> {
    Ok(EqSliceWitness { q: 2, delta_zq: pair(delta.0, delta.1)?, a: pair(a.0, a.1)?, b: pair(b.0, b.1)? })
}
