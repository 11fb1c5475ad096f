//! ASCII polynomial notation: parsing and printing.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['+'|'-'] int]
//! atom   := int | 't' | 'g' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Negative exponents are accepted on units only
//! (`±g^i t^j`); `g` is legal only when a period is given and its exponents
//! are reduced mod `q`. `t^{-1}` and `t^(-1)` are accepted as exponent forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groupring::GroupRingPoly;
use crate::laurent::{Coeff, ZPoly};

const MAX_POWER: i64 = 256;

// (t-exponent, g-exponent) -> coefficient
type Sparse = BTreeMap<(i64, i64), BigInt>;

fn sparse_mul(a: &Sparse, b: &Sparse, q: Option<u32>) -> Sparse {
    let mut out = Sparse::new();
    for ((ja, ia), ca) in a {
        for ((jb, ib), cb) in b {
            let i = match q {
                Some(q) => (ia + ib).rem_euclid(q as i64),
                None => 0,
            };
            let e = out.entry((ja + jb, i)).or_insert_with(BigInt::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn sparse_add(a: &mut Sparse, b: Sparse, negate: bool) {
    for (k, c) in b {
        let e = a.entry(k).or_insert_with(BigInt::zero);
        if negate {
            *e -= c;
        } else {
            *e += c;
        }
    }
    a.retain(|_, c| !c.is_zero());
}

fn sparse_one() -> Sparse {
    Sparse::from([((0, 0), BigInt::one())])
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    q: Option<u32>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, q: Option<u32>) -> Self {
        Self { s: s.as_bytes(), pos: 0, q }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = Sparse::new();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            sparse_add(&mut acc, t, negate);
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b't' || c == b'g' || c == b'(')
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = sparse_mul(&acc, &f, self.q);
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = sparse_mul(&acc, &f, self.q);
            } else {
                return Ok(acc);
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = if self.eat(b'(') {
            Some(b')')
        } else if self.eat(b'{') {
            Some(b'}')
        } else {
            None
        };
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let n = self.digits()?;
        let Ok(n) = i64::try_from(n) else {
            self.pos = at;
            return self.err("exponent out of range");
        };
        if let Some(c) = close {
            self.expect(c)?;
        }
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let n = self.exponent()?;
        if base.len() == 1 {
            let (&(j, i), c) = base.iter().next().expect("one term");
            let unit = c.abs().is_one();
            if n < 0 && !unit {
                self.pos = at;
                return self.err("negative power of a non-unit");
            }
            if !unit && n > MAX_POWER {
                self.pos = at;
                return self.err(format!("power {n} exceeds the limit {MAX_POWER}"));
            }
            let i = match self.q {
                Some(q) => (i * n).rem_euclid(q as i64),
                None => 0,
            };
            let coeff = match (unit, Signed::is_negative(c) && n.rem_euclid(2) == 1) {
                (true, true) => -BigInt::one(),
                (true, false) => BigInt::one(),
                (false, _) => num_traits::pow(c.clone(), n as usize),
            };
            return Ok(Sparse::from([((j * n, i), coeff)]));
        }
        if n < 0 {
            self.pos = at;
            return self.err("negative power of a non-unit");
        }
        if n > MAX_POWER {
            self.pos = at;
            return self.err(format!("power {n} exceeds the limit {MAX_POWER}"));
        }
        Ok((0..n).fold(sparse_one(), |acc, _| sparse_mul(&acc, &base, self.q)))
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Sparse::from([((1, 0), BigInt::one())]))
            }
            Some(b'g') => match self.q {
                Some(q) => {
                    self.pos += 1;
                    Ok(Sparse::from([((0, 1i64.rem_euclid(q as i64)), BigInt::one())]))
                }
                None => self.err("variable 'g' requires a period"),
            },
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(if n.is_zero() { Sparse::new() } else { Sparse::from([((0, 0), n)]) })
            }
            Some(c) if c.is_ascii_alphabetic() => self.err(format!("unknown variable '{}'", c as char)),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn to_laurent(s: Sparse) -> ZPoly {
    ZPoly::from_terms(s.into_iter().map(|((j, _), c)| (j, c)))
}

/// Parses a Laurent polynomial in `t`.
pub fn parse_poly(s: &str) -> Result<ZPoly> {
    let mut p = Parser::new(s, None);
    let e = p.expr()?;
    p.finish()?;
    Ok(to_laurent(e))
}

/// Parses an element of `Z[Z/q × Z]` in `g` and `t`.
pub fn parse_poly2(s: &str, q: u32) -> Result<GroupRingPoly> {
    if q == 0 {
        return Err(Error::InvalidPeriod(q));
    }
    let mut p = Parser::new(s, Some(q));
    let e = p.expr()?;
    p.finish()?;
    Ok(GroupRingPoly::from_terms(q, e.into_iter().map(|((j, i), c)| (i, j, c))))
}

/// Parses `num` or `num / den` with polynomial numerator and denominator.
pub fn parse_fraction(s: &str) -> Result<(ZPoly, ZPoly)> {
    let mut p = Parser::new(s, None);
    let num = p.expr()?;
    let den = if p.eat(b'/') {
        let at = p.pos;
        let d = p.expr()?;
        if d.is_empty() {
            p.pos = at;
            return p.err("division by zero");
        }
        d
    } else {
        sparse_one()
    };
    p.finish()?;
    Ok((to_laurent(num), to_laurent(den)))
}

fn monomial_body(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Joins signed terms `(coefficient, exponent)`, highest exponent first, as
/// `-2*t + 5 - 2*t^-1`. Zero prints as `0`.
pub fn format_terms<R, I>(terms: I) -> String
where
    R: Coeff + std::fmt::Display,
    I: IntoIterator<Item = (R, i64)>,
{
    let pieces: Vec<(bool, String)> = terms
        .into_iter()
        .map(|(c, e)| {
            let neg = c.is_negative();
            let a = if neg { -c } else { c };
            let body = monomial_body("t", e);
            let text = match (a.is_one(), body.is_empty()) {
                (_, true) => a.to_string(),
                (true, false) => body,
                (false, false) => format!("{a}*{body}"),
            };
            (neg, text)
        })
        .collect();
    join_signed(pieces)
}

fn join_signed(pieces: Vec<(bool, String)>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, text)) in pieces.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

fn format_g_coeff(c: &BigInt, i: u32) -> (bool, String) {
    let body = monomial_body("g", i as i64);
    let a = c.abs();
    let text = match (a.is_one(), body.is_empty()) {
        (_, true) => a.to_string(),
        (true, false) => body,
        (false, false) => format!("{a}*{body}"),
    };
    (Signed::is_negative(c), text)
}

/// Prints a group-ring element grouped by powers of `t` (descending), e.g.
/// `(-1 + g)*t + 3 - 2*g + (-1 + g)*t^-1`. `g`-exponents lie in `[0, q)`.
pub fn format_group_ring(p: &GroupRingPoly) -> String {
    let mut groups: BTreeMap<i64, Vec<(u32, BigInt)>> = BTreeMap::new();
    for (i, j, c) in p.terms() {
        groups.entry(j).or_default().push((i, c.clone()));
    }
    let mut pieces = Vec::new();
    for (j, gs) in groups.into_iter().rev() {
        let tbody = monomial_body("t", j);
        if gs.len() == 1 {
            let (neg, gtext) = format_g_coeff(&gs[0].1, gs[0].0);
            let text = match (gtext.as_str(), tbody.is_empty()) {
                (_, true) => gtext,
                ("1", false) => tbody,
                (_, false) => format!("{gtext}*{tbody}"),
            };
            pieces.push((neg, text));
        } else if tbody.is_empty() {
            pieces.extend(gs.iter().map(|(i, c)| format_g_coeff(c, *i)));
        } else {
            let inner = join_signed(gs.iter().map(|(i, c)| format_g_coeff(c, *i)).collect());
            pieces.push((false, format!("({inner})*{tbody}")));
        }
    }
    join_signed(pieces)
}

/// `num` or `(num)/(den)`.
pub fn format_fraction(num: &ZPoly, den: &ZPoly) -> String {
    if den.is_one() {
        return num.to_string();
    }
    let wrap = |p: &ZPoly| {
        let s = p.to_string();
        if p.num_terms() > 1 {
            format!("({s})")
        } else {
            s
        }
    };
    format!("{}/{}", wrap(num), wrap(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(low: i64, c: &[i64]) -> ZPoly {
        ZPoly::from_i64(low, c)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_poly("-2*t + 5 - 2*t^-1").unwrap(), z(-1, &[-2, 5, -2]));
        assert_eq!(parse_poly("1").unwrap(), ZPoly::one());
        assert_eq!(parse_poly("5-2t-2t^-1").unwrap(), z(-1, &[-2, 5, -2]));
        assert_eq!(parse_poly("(t^4-3t^3+3t^2-3t+1)^2").unwrap(), z(0, &[1, -3, 3, -3, 1]).pow(2));
        assert_eq!(parse_poly("t^{-2} + t^(+1)").unwrap(), z(-2, &[1, 0, 0, 1]));
        let h = parse_poly2("(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1", 2).unwrap();
        let expected = GroupRingPoly::from_i64(2, &[(1, 1, 1), (0, 1, -1), (0, 0, 3), (1, 0, -2), (1, -1, 1), (0, -1, -1)]);
        assert_eq!(h, expected);
        assert_eq!(parse_poly2("g^7", 3).unwrap(), GroupRingPoly::g(3));
    }

    #[test]
    fn parse_errors_have_positions() {
        assert!(matches!(parse_poly("g + 1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("x^2"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("1 + + t"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("(1 + t"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_poly("(1+t)^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("2t^"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn format_examples() {
        assert_eq!(ZPoly::zero().to_string(), "0");
        assert_eq!(z(-1, &[-2, 5, -2]).to_string(), "-2*t + 5 - 2*t^-1");
        assert_eq!(z(0, &[1, -1]).to_string(), "-t + 1");
        let h = parse_poly2("(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1", 2).unwrap();
        assert_eq!(h.to_string(), "(-1 + g)*t + 3 - 2*g + (-1 + g)*t^-1");
        assert_eq!(parse_poly2("-g*t", 2).unwrap().to_string(), "-g*t");
        assert_eq!(format_fraction(&z(0, &[1, 1]), &z(0, &[-1, 1])), "(t + 1)/(t - 1)");
    }

    #[test]
    fn round_trips() {
        for s in ["-2*t + 5 - 2*t^-1", "5-2t-2t^-1", "t^3 - t^2 + 1", "0", "-7", "12345678901234567890*t^-40"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        for s in ["(g-1)*t + 3 - 2*g + (g^-1-1)*t^-1", "1 - g + g*t", "3*g^2*t^-2 - g + 4"] {
            let p = parse_poly2(s, 3).unwrap();
            assert_eq!(parse_poly2(&p.to_string(), 3).unwrap(), p);
        }
    }

    #[test]
    fn fractions() {
        let (n, d) = parse_fraction("(t^2 - 1)/(t - 1)").unwrap();
        assert_eq!((n, d), (z(0, &[-1, 0, 1]), z(0, &[-1, 1])));
        assert!(parse_fraction("1/0").is_err());
    }
}
