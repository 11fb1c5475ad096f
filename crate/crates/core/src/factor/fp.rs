//! Dense polynomials over a small prime field `F_p` and their factorization
//! (distinct-degree splitting followed by Cantor–Zassenhaus).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

pub(crate) type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    p: u64,
}

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

impl Fp {
    pub(crate) fn new(p: u64) -> Self {
        assert!(p >= 3 && p < (1 << 31), "unsupported prime {p}");
        Self { p }
    }

    pub(crate) fn modulus(&self) -> u64 {
        self.p
    }

    fn mulc(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        let mut r = 1u64;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulc(r, b);
            }
            b = self.mulc(b, b);
            e >>= 1;
        }
        r
    }

    pub(crate) fn from_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    pub(crate) fn from_zx(&self, a: &[BigInt]) -> Poly {
        trim(a.iter().map(|c| self.from_int(c)).collect())
    }

    #[cfg(test)]
    pub(crate) fn add(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p).collect())
    }

    pub(crate) fn sub(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p).collect())
    }

    pub(crate) fn scale(&self, a: &[u64], s: u64) -> Poly {
        trim(a.iter().map(|&c| self.mulc(c, s)).collect())
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulc(x, y)) % self.p;
            }
        }
        trim(out)
    }

    pub(crate) fn div_rem(&self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        let db = degree(b).expect("division by zero polynomial");
        let inv_lc = self.inv(b[db]);
        let mut r = trim(a.to_vec());
        let Some(da) = degree(&r) else {
            return (Vec::new(), Vec::new());
        };
        if da < db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; da - db + 1];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = self.mulc(r[dr], inv_lc);
            let shift = dr - db;
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[i + shift] = (r[i + shift] + self.p - self.mulc(c, bc)) % self.p;
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub(crate) fn rem(&self, a: &[u64], b: &[u64]) -> Poly {
        self.div_rem(a, b).1
    }

    pub(crate) fn monic(&self, a: &[u64]) -> Poly {
        match degree(a) {
            None => Vec::new(),
            Some(d) => self.scale(a, self.inv(a[d])),
        }
    }

    pub(crate) fn gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic, `deg s < deg b - deg g`, `deg t < deg a - deg g`.
    pub(crate) fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let inv = self.inv(r0[degree(&r0).expect("nonzero gcd")]);
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub(crate) fn derivative(&self, a: &[u64]) -> Poly {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mulc(c, i as u64 % self.p)).collect())
    }

    pub(crate) fn is_squarefree(&self, a: &[u64]) -> bool {
        degree(&self.gcd(a, &self.derivative(a))) == Some(0)
    }

    fn pow_mod(&self, base: &[u64], exp: &BigUint, m: &[u64]) -> Poly {
        let mut result: Poly = self.rem(&[1], m);
        let b = self.rem(base, m);
        for i in (0..exp.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
        }
        result
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn ddf(&self, f: &[u64]) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: Poly = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut h = self.rem(&x, &f);
        let mut d = 0;
        while let Some(df) = degree(&f) {
            if df < 2 * (d + 1) {
                if df > 0 {
                    out.push((f.clone(), df));
                }
                break;
            }
            d += 1;
            h = self.pow_mod(&h, &p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if degree(&g) != Some(0) {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Equal-degree splitting of a product of distinct monic irreducibles of degree `d`.
    fn edf<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<Poly> {
        let n = degree(f).expect("nonzero");
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: Poly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if degree(&a).unwrap_or(0) == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let g = if degree(&g).unwrap_or(0) > 0 {
                g
            } else {
                let b = self.sub(&self.pow_mod(&a, &exp, f), &[1]);
                self.gcd(&b, f)
            };
            if let Some(dg) = degree(&g) {
                if dg > 0 && dg < n {
                    let h = self.div_rem(f, &g).0;
                    let mut out = self.edf(&g, d, rng);
                    out.extend(self.edf(&h, d, rng));
                    return out;
                }
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial, sorted.
    pub(crate) fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<Poly> {
        let mut out: Vec<Poly> = self.ddf(f).into_iter().flat_map(|(g, d)| self.edf(&g, d, rng)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn splits_into_linear_and_quadratic() {
        let f = Fp::new(5);
        // (x - 1)(x - 2)(x^2 + 2) over F_5
        let g = f.mul(&f.mul(&[4, 1], &[3, 1]), &[2, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let facs = f.factor_squarefree(&g, &mut rng);
        assert_eq!(facs, vec![vec![3, 1], vec![4, 1], vec![2, 0, 1]]);
    }

    #[test]
    fn bezout_identity() {
        let f = Fp::new(7);
        let a = vec![1, 2, 3];
        let b = vec![5, 0, 1, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f.add(&f.mul(&s, &a), &f.mul(&t, &b)), vec![1]);
        assert!(degree(&s) < degree(&b) && degree(&t) < degree(&a));
    }
}
