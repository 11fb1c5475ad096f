//! Based chain complexes over `Q(t)` and their torsion.
//!
//! Chains are row vectors: `∂_i : C_i → C_{i-1}` is an `r_i × r_{i-1}` matrix
//! `M_i` acting by `x ↦ x·M_i`. The torsion is normalized so that a complex
//! `C_1 → C_0` has torsion `det M_1`.

use crate::error::{Error, Result};
use crate::torsion::ratfunc::{RationalFunction, RfMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedChainComplex {
    ranks: Vec<usize>,
    matrices: Vec<RfMatrix>,
}

impl BasedChainComplex {
    /// `ranks[i]` is the rank of `C_i`; `matrices[i - 1]` is `M_i`.
    pub fn new(ranks: Vec<usize>, matrices: Vec<RfMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::MalformedComplex("a complex needs at least one chain group".into()));
        }
        if matrices.len() + 1 != ranks.len() {
            return Err(Error::MalformedComplex(format!(
                "{} chain groups need {} boundary matrices, found {}",
                ranks.len(),
                ranks.len() - 1,
                matrices.len()
            )));
        }
        for (k, m) in matrices.iter().enumerate() {
            let i = k + 1;
            if m.rows() != ranks[i] || m.cols() != ranks[i - 1] {
                return Err(Error::MalformedComplex(format!(
                    "boundary {i} should be {}×{}, found {}×{}",
                    ranks[i],
                    ranks[i - 1],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for (k, pair) in matrices.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::MalformedComplex(format!("boundary {} ∘ boundary {} is nonzero", k + 1, k + 2)));
            }
        }
        Ok(Self { ranks, matrices })
    }

    /// `C_1 → C_0` with the given boundary.
    pub fn two_term(m: RfMatrix) -> Result<Self> {
        Self::new(vec![m.cols(), m.rows()], vec![m])
    }

    /// The top degree `n`; chain groups are `C_0, ..., C_n`.
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    /// `M_i`, for `1 ≤ i ≤ n`.
    pub fn boundary(&self, i: usize) -> &RfMatrix {
        &self.matrices[i - 1]
    }

    pub fn matrices(&self) -> &[RfMatrix] {
        &self.matrices
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }

    /// Degreewise direct sum, padding the shorter complex with zero groups.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.length().max(other.length());
        let ranks: Vec<usize> = (0..=n).map(|i| self.rank(i) + other.rank(i)).collect();
        let matrices = (1..=n)
            .map(|i| {
                let a = self.boundary_or_zero(i);
                let b = other.boundary_or_zero(i);
                a.direct_sum(&b)
            })
            .collect();
        Self { ranks, matrices }
    }

    fn boundary_or_zero(&self, i: usize) -> RfMatrix {
        if i <= self.length() {
            self.boundary(i).clone()
        } else {
            RfMatrix::zeros(self.rank(i), self.rank(i - 1))
        }
    }

    /// Changes the basis of every `C_i` by the invertible `F_i` (rows give the
    /// new basis vectors in old coordinates): `M_i ↦ F_i M_i F_{i-1}^{-1}`.
    pub fn rebase(&self, f: &[RfMatrix]) -> Result<Self> {
        if f.len() != self.ranks.len() {
            return Err(Error::IncompatibleRanks(format!("{} basis changes for {} groups", f.len(), self.ranks.len())));
        }
        for (i, fi) in f.iter().enumerate() {
            if fi.rows() != self.ranks[i] || fi.cols() != self.ranks[i] {
                return Err(Error::IncompatibleRanks(format!("basis change {i} has the wrong shape")));
            }
        }
        let inverses = f.iter().map(RfMatrix::inverse).collect::<Result<Vec<_>>>()?;
        let matrices = (1..=self.length())
            .map(|i| f[i].mul(self.boundary(i))?.mul(&inverses[i - 1]))
            .collect::<Result<_>>()?;
        Ok(Self { ranks: self.ranks.clone(), matrices })
    }

    /// Every entry has a denominator not vanishing at `t = 1`.
    pub fn is_local(&self) -> bool {
        self.matrices.iter().all(RfMatrix::is_local)
    }

    /// A chain contraction `Γ_i : C_i → C_{i+1}` with `∂Γ + Γ∂ = 1` and `ΓΓ = 0`.
    pub fn chain_contraction(&self) -> Result<Vec<RfMatrix>> {
        let n = self.length();
        let mut gammas: Vec<RfMatrix> = Vec::with_capacity(n);
        for i in 0..n {
            let id = RfMatrix::identity(self.ranks[i]);
            let proj = if i == 0 { id } else { id.sub(&self.boundary(i).mul(&gammas[i - 1])?)? };
            let next = self.boundary(i + 1);
            let (rows, cols) = next.row_basis();
            let square = next.submatrix(&rows, &cols);
            let all_rows: Vec<usize> = (0..proj.rows()).collect();
            let x = proj.submatrix(&all_rows, &cols).mul(&square.inverse()?)?;
            let mut gamma = RfMatrix::zeros(self.ranks[i], self.ranks[i + 1]);
            for (k, &r) in rows.iter().enumerate() {
                for a in 0..gamma.rows() {
                    gamma[(a, r)] = x[(a, k)].clone();
                }
            }
            if gamma.mul(next)? != proj {
                return Err(Error::NotAcyclic(format!("homology in degree {i}")));
            }
            gammas.push(proj.mul(&gamma)?);
        }
        let top = if n == 0 {
            RfMatrix::identity(self.ranks[0])
        } else {
            RfMatrix::identity(self.ranks[n]).sub(&self.boundary(n).mul(&gammas[n - 1])?)?
        };
        if !top.is_zero() {
            return Err(Error::NotAcyclic(format!("homology in degree {n}")));
        }
        Ok(gammas)
    }

    /// `det(∂ + Γ : C_odd → C_even)` for a chain contraction `Γ`.
    pub fn torsion(&self) -> Result<RationalFunction> {
        let gammas = self.chain_contraction()?;
        let n = self.length();
        let offsets = |parity: usize| -> Vec<usize> {
            let mut acc = 0;
            (0..=n)
                .map(|i| {
                    let o = acc;
                    if i % 2 == parity {
                        acc += self.ranks[i];
                    }
                    o
                })
                .collect()
        };
        let (odd_off, even_off) = (offsets(1), offsets(0));
        let odd_total: usize = (0..=n).filter(|i| i % 2 == 1).map(|i| self.ranks[i]).sum();
        let even_total: usize = (0..=n).filter(|i| i % 2 == 0).map(|i| self.ranks[i]).sum();
        if odd_total != even_total {
            return Err(Error::NotAcyclic("nonzero Euler characteristic".into()));
        }
        let mut big = RfMatrix::zeros(odd_total, even_total);
        for i in (1..=n).step_by(2) {
            big.set_block(odd_off[i], even_off[i - 1], self.boundary(i));
            if i < n {
                big.set_block(odd_off[i], even_off[i + 1], &gammas[i]);
            }
        }
        big.det()
    }

    /// Torsion from explicit bases of the boundaries: for each `i` the rows of
    /// `M_{i+1}` spanning `B_i` together with lifts of a basis of `B_{i-1}`
    /// form a basis of `C_i`, and `τ = Π_i det(that basis)^{(-1)^i}`.
    pub fn torsion_by_bases(&self) -> Result<RationalFunction> {
        let n = self.length();
        let lifts: Vec<Vec<usize>> = (0..=n).map(|i| if i == 0 { Vec::new() } else { self.boundary(i).row_basis().0 }).collect();
        let mut tau = RationalFunction::one();
        for i in 0..=n {
            let r = self.ranks[i];
            let mut basis = RfMatrix::zeros(r, r);
            let mut row = 0;
            if i < n {
                let m = self.boundary(i + 1);
                for &s in &lifts[i + 1] {
                    for c in 0..r {
                        basis[(row, c)] = m[(s, c)].clone();
                    }
                    row += 1;
                }
            }
            for &s in &lifts[i] {
                if row < r {
                    basis[(row, s)] = RationalFunction::one();
                }
                row += 1;
            }
            if row != r {
                return Err(Error::NotAcyclic(format!("homology in degree {i}")));
            }
            let d = basis.det()?;
            if d.is_zero() {
                return Err(Error::NotAcyclic(format!("homology in degree {i}")));
            }
            tau = if i % 2 == 0 { &tau * &d } else { &tau / &d };
        }
        Ok(tau)
    }
}

/// The dual complex: `C'_i = Hom(C_{n-i})` with the dual basis and boundaries
/// `M'_i = M_{n+1-i}^T`, with `t ↦ t^-1` applied entrywise when `involution` is set.
pub fn dual_complex(c: &BasedChainComplex, involution: bool) -> BasedChainComplex {
    let n = c.length();
    let ranks: Vec<usize> = c.ranks.iter().rev().copied().collect();
    let matrices = (1..=n)
        .map(|i| {
            let m = c.boundary(n + 1 - i).transpose();
            if involution {
                m.conj()
            } else {
                m
            }
        })
        .collect();
    BasedChainComplex { ranks, matrices }
}

/// Maps of a short exact sequence `0 → C' → C → C'' → 0`, degreewise:
/// `inclusions[i]` is `r'_i × r_i` and `projections[i]` is `r_i × r''_i`.
#[derive(Clone, Debug)]
pub struct SesMaps {
    pub inclusions: Vec<RfMatrix>,
    pub projections: Vec<RfMatrix>,
}

impl SesMaps {
    /// Standard maps when the basis of `C_i` is the basis of `C'_i` followed by
    /// lifts of the basis of `C''_i`.
    pub fn standard(sub: &BasedChainComplex, quot: &BasedChainComplex) -> Self {
        let n = sub.length().max(quot.length());
        let inclusions = (0..=n)
            .map(|i| {
                let (a, b) = (sub.rank(i), quot.rank(i));
                let mut m = RfMatrix::zeros(a, a + b);
                m.set_block(0, 0, &RfMatrix::identity(a));
                m
            })
            .collect();
        let projections = (0..=n)
            .map(|i| {
                let (a, b) = (sub.rank(i), quot.rank(i));
                let mut m = RfMatrix::zeros(a + b, b);
                m.set_block(a, 0, &RfMatrix::identity(b));
                m
            })
            .collect();
        Self { inclusions, projections }
    }
}

fn padded(c: &BasedChainComplex, n: usize) -> BasedChainComplex {
    if c.length() >= n {
        return c.clone();
    }
    let ranks: Vec<usize> = (0..=n).map(|i| c.rank(i)).collect();
    let matrices = (1..=n).map(|i| c.boundary_or_zero(i)).collect();
    BasedChainComplex { ranks, matrices }
}

/// Checks that `maps` form a short exact sequence of chain complexes and
/// returns whether `τ(C) = ±τ(C')·τ(C'')` for the given bases.
pub fn ses_torsion_check(
    sub: &BasedChainComplex,
    total: &BasedChainComplex,
    quot: &BasedChainComplex,
    maps: &SesMaps,
) -> Result<bool> {
    let n = sub.length().max(total.length()).max(quot.length());
    let (sub, total, quot) = (padded(sub, n), padded(total, n), padded(quot, n));
    if maps.inclusions.len() != n + 1 || maps.projections.len() != n + 1 {
        return Err(Error::IncompatibleRanks(format!("expected maps in degrees 0..={n}")));
    }
    for i in 0..=n {
        if total.rank(i) != sub.rank(i) + quot.rank(i) {
            return Err(Error::IncompatibleRanks(format!(
                "degree {i}: {} ≠ {} + {}",
                total.rank(i),
                sub.rank(i),
                quot.rank(i)
            )));
        }
        let (inc, proj) = (&maps.inclusions[i], &maps.projections[i]);
        if (inc.rows(), inc.cols()) != (sub.rank(i), total.rank(i))
            || (proj.rows(), proj.cols()) != (total.rank(i), quot.rank(i))
        {
            return Err(Error::IncompatibleRanks(format!("degree {i}: maps have the wrong shape")));
        }
        if inc.rank() != sub.rank(i) || proj.rank() != quot.rank(i) || !inc.mul(proj)?.is_zero() {
            return Err(Error::IncompatibleRanks(format!("degree {i}: sequence is not exact")));
        }
    }
    for i in 1..=n {
        let lhs = maps.inclusions[i].mul(total.boundary(i))?;
        let rhs = sub.boundary(i).mul(&maps.inclusions[i - 1])?;
        let lhs2 = total.boundary(i).mul(&maps.projections[i - 1])?;
        let rhs2 = maps.projections[i].mul(quot.boundary(i))?;
        if lhs != rhs || lhs2 != rhs2 {
            return Err(Error::IncompatibleRanks(format!("degree {i}: maps do not commute with boundaries")));
        }
    }
    let expected = &sub.torsion()? * &quot.torsion()?;
    Ok(total.torsion()?.eq_up_to_sign(&expected))
}
