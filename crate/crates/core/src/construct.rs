//! Box diagrams, crossing data and equivariant linking.
//!
//! A witness `a(g,t)` with `a(g,1) = 1` is written as `1 + Σ h_i(t) g^i`. Box
//! `i` holds the coefficients of `h_i`; each coefficient `a_ij` stands for
//! `|a_ij|` overcrossings of sign `sgn(a_ij)` whose curve links the axis `i`
//! times and the quotient knot `j` times. Only this crossing data is modeled.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groupring::{is_trivial_unit, GroupRingPoly};
use crate::laurent::ZPoly;

/// One overcrossing: sign, linking with the axis (mod `q`) and with the quotient knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingRecord {
    pub sign: i8,
    pub g: u32,
    pub t: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingList {
    pub q: u32,
    pub records: Vec<CrossingRecord>,
}

impl CrossingList {
    /// Builds a list, reducing `g`-exponents mod `q`.
    pub fn new(q: u32, records: impl IntoIterator<Item = (i8, i64, i64)>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidPeriod(q));
        }
        let records = records
            .into_iter()
            .map(|(sign, g, t)| {
                if sign != 1 && sign != -1 {
                    return Err(Error::Precondition(format!("crossing sign must be ±1, got {sign}")));
                }
                Ok(CrossingRecord { sign, g: g.rem_euclid(q as i64) as u32, t })
            })
            .collect::<Result<_>>()?;
        Ok(Self { q, records })
    }
}

/// Box `i` lists `(j, a_ij)` with `a_ij ≠ 0`, in increasing `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxDiagram {
    pub q: u32,
    pub boxes: Vec<Vec<(i64, BigInt)>>,
    /// The unit `±g^k` that was applied to the input witness, as `(negated, k)`.
    pub normalization: (bool, u32),
}

impl BoxDiagram {
    /// Checks that every box sums to zero.
    pub fn validate(&self) -> Result<()> {
        if self.boxes.len() != self.q as usize {
            return Err(Error::Precondition(format!("expected {} boxes, found {}", self.q, self.boxes.len())));
        }
        for (i, entries) in self.boxes.iter().enumerate() {
            let sum: BigInt = entries.iter().map(|(_, a)| a).sum();
            if !sum.is_zero() {
                return Err(Error::BoxInvariant(i as u32, sum.to_string()));
            }
            if entries.iter().any(|(_, a)| a.is_zero()) {
                return Err(Error::Precondition(format!("box {i} has a zero entry")));
            }
        }
        Ok(())
    }

    /// `h_i(t)`.
    pub fn h(&self, i: u32) -> ZPoly {
        ZPoly::from_terms(self.boxes[i as usize].iter().cloned())
    }
}

/// The 2×2 matrix `[[0, a], [ā, *]]` whose cokernel is the first homology of the
/// relevant cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub q: u32,
    pub entries: [[GroupRingPoly; 2]; 2],
}

impl PresentationMatrix {
    pub fn new(a: &GroupRingPoly, star: &GroupRingPoly) -> Result<Self> {
        let q = a.period();
        if star.period() != q {
            return Err(Error::PeriodMismatch(q, star.period()));
        }
        Ok(Self { q, entries: [[GroupRingPoly::zero(q), a.clone()], [a.involute(), star.clone()]] })
    }

    pub fn det(&self) -> GroupRingPoly {
        let [[m00, m01], [m10, m11]] = &self.entries;
        m00 * m11 - m01 * m10
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub boxes: BoxDiagram,
    pub crossings: CrossingList,
    pub murasugi: GroupRingPoly,
    pub knot_poly: ZPoly,
    pub quotient_poly: ZPoly,
}

fn linking_sum(c: &CrossingList) -> GroupRingPoly {
    GroupRingPoly::from_terms(c.q, c.records.iter().map(|r| (r.g as i64, r.t, BigInt::from(r.sign))))
}

/// `Σ_P ε_P g^{lk(C_P, B)} t^{lk(C_P, K)}`, canonicalized; only its unit class is meaningful.
pub fn equivariant_linking(c: &CrossingList) -> GroupRingPoly {
    linking_sum(c).canonical()
}

/// Normalizes `a` by `±g^-k` so that `a(g,1) = 1` and reads off the boxes of `a - 1`.
pub fn boxes_from_witness(a: &GroupRingPoly) -> Result<BoxDiagram> {
    let q = a.period();
    let aug = a.augment_t();
    if !is_trivial_unit(&aug) {
        return Err(Error::NontrivialAugmentation);
    }
    let k = aug.iter().position(|c| !c.is_zero()).expect("trivial unit is nonzero");
    let negated = aug[k].is_negative();
    let normalized = a.mul_unit(negated, -(k as i64), 0);
    let rest = normalized - GroupRingPoly::one(q);
    let boxes: Vec<Vec<(i64, BigInt)>> =
        (0..q).map(|i| rest.g_coefficient(i).terms().map(|(j, c)| (j, c.clone())).collect()).collect();
    let diagram = BoxDiagram { q, boxes, normalization: (negated, k as u32) };
    diagram.validate()?;
    Ok(diagram)
}

/// The constant crossing `(+1, 0, 0)` followed by `|a_ij|` crossings per box entry.
pub fn crossings_from_boxes(b: &BoxDiagram) -> Result<CrossingList> {
    b.validate()?;
    let mut records = vec![CrossingRecord { sign: 1, g: 0, t: 0 }];
    for (i, entries) in b.boxes.iter().enumerate() {
        for (j, a) in entries {
            let n = a
                .abs()
                .to_usize()
                .ok_or_else(|| Error::Precondition(format!("box entry {a} is too large to expand")))?;
            let sign = if a.is_positive() { 1 } else { -1 };
            records.extend(std::iter::repeat_n(CrossingRecord { sign, g: i as u32, t: *j }, n));
        }
    }
    Ok(CrossingList { q: b.q, records })
}

/// Determinant of `[[0, a], [ā, star]]`, canonicalized; independent of `star`.
pub fn murasugi_from_linking(a: &GroupRingPoly, star: &GroupRingPoly) -> Result<GroupRingPoly> {
    Ok(PresentationMatrix::new(a, star)?.det().canonical())
}

/// Boxes, crossings, `a·ā` and its two polynomial shadows, cross-checked
/// against the linking computation.
pub fn realize(a: &GroupRingPoly) -> Result<Realization> {
    let q = a.period();
    let boxes = boxes_from_witness(a)?;
    let crossings = crossings_from_boxes(&boxes)?;
    let murasugi = a * a.involute();
    let linked = murasugi_from_linking(&linking_sum(&crossings), &GroupRingPoly::zero(q))?;
    if !linked.unit_equal(&murasugi) {
        return Err(Error::Internal("linking determinant disagrees with a·ā".into()));
    }
    let knot_poly = murasugi.norm_product();
    let quotient_poly = murasugi.augment_g().canonical();
    Ok(Realization { boxes, crossings, murasugi, knot_poly, quotient_poly })
}

impl Realization {
    pub fn is_trivial(&self) -> bool {
        self.murasugi.unit_equal(&GroupRingPoly::one(self.murasugi.period()))
            && self.knot_poly.is_one()
            && self.quotient_poly.is_one()
    }
}
