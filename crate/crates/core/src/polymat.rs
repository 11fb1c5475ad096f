//! Determinants of square matrices over `Z[t, t^-1]`.

use crate::laurent::ZPoly;

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact
/// because `Z[t, t^-1]` is an integral domain.
pub fn det_bareiss(mut m: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut negate = false;
    let mut prev = ZPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return ZPoly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = ZPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
