//! Ring expressions.
//!
//! ```text
//! expr := atom ( "x" atom )*
//! atom := "Z" INT | "Z" INT "[t]/(" poly ")" | "AN" | "AN0" | "AN2"
//! poly := term ( ("+" | "-") term )*
//! term := INT | INT? "t" ( "^" INT )?
//! ```
//!
//! Whitespace is ignored and the product separator is case-insensitive.
//! `AN` is the Anderson–Naseer ring in its canonical variant; `AN0` and `AN2`
//! force `z^2 = 0` and `z^2 = 2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{make_product, make_structure_ring, make_zmod, AnVariant, FiniteRing, StructureTable};
use crate::theorems::canonical_an_variant;

/// Largest polynomial degree accepted by the parser.
const MAX_DEGREE: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Zmod(u64),
    /// `Z_modulus[t]/(p)` with `poly` the coefficients of a monic `p`,
    /// lowest degree first, reduced mod `modulus`.
    Quot { modulus: u64, poly: Vec<u64> },
    /// `None` is the canonical variant.
    An(Option<AnVariant>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingExpr {
    pub factors: Vec<Atom>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Zmod(n) => write!(f, "Z{n}"),
            Atom::Quot { modulus, poly } => write!(f, "Z{modulus}[t]/({})", PolyDisplay(poly)),
            Atom::An(None) => f.write_str("AN"),
            Atom::An(Some(v)) => f.write_str(v.token()),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

struct PolyDisplay<'a>(&'a [u64]);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
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

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Parse { offset: start, message: format!("integer {text} is too large") })
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let mut factors = vec![self.atom()?];
        loop {
            match self.peek() {
                None => break,
                Some(b'x' | b'X') => {
                    self.pos += 1;
                    factors.push(self.atom()?);
                }
                Some(_) => return self.err("expected 'x' or end of input"),
            }
        }
        Ok(RingExpr { factors })
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let n = self.int()?;
                if n == 0 {
                    return Err(Error::InvalidModulus(0));
                }
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    self.expect(b't')?;
                    self.expect(b']')?;
                    self.expect(b'/')?;
                    self.expect(b'(')?;
                    let poly = self.poly(n)?;
                    self.expect(b')')?;
                    Ok(Atom::Quot { modulus: n, poly })
                } else {
                    Ok(Atom::Zmod(n))
                }
            }
            Some(b'A') => {
                self.pos += 1;
                self.expect(b'N')?;
                let variant = match self.peek() {
                    Some(b'0') => Some(AnVariant::ZSquaredZero),
                    Some(b'2') => Some(AnVariant::ZSquaredTwo),
                    Some(c) if c.is_ascii_digit() => return self.err("AN takes suffix 0 or 2"),
                    _ => None,
                };
                if variant.is_some() {
                    self.pos += 1;
                }
                Ok(Atom::An(variant))
            }
            Some(_) => self.err("expected a ring atom (Z<n>, Z<n>[t]/(...), AN, AN0, AN2)"),
            None => self.err("unexpected end of input"),
        }
    }

    /// Coefficients (lowest degree first) of a monic polynomial mod `n`.
    fn poly(&mut self, n: u64) -> Result<Vec<u64>> {
        let start = self.pos;
        let mut coeffs: BTreeMap<u64, u64> = BTreeMap::new();
        let mut negative = self.eat(b'-');
        loop {
            let (c, deg) = self.term()?;
            let c = c % n;
            let c = if negative { (n - c) % n } else { c };
            let slot = coeffs.entry(deg).or_insert(0);
            *slot = (*slot + c) % n;
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        let degree = coeffs.iter().rev().find(|(_, &c)| c != 0).map(|(&d, _)| d);
        let mut poly = vec![0; degree.map_or(0, |d| d as usize + 1)];
        for (d, c) in coeffs {
            if let Some(slot) = poly.get_mut(d as usize) {
                *slot = c;
            }
        }
        match poly.last() {
            Some(&1) if poly.len() >= 2 => Ok(poly),
            _ => Err(Error::Unsupported(format!(
                "polynomial at byte {start} must be monic of degree at least 1 mod {n}"
            ))),
        }
    }

    /// `(coefficient, degree)`
    fn term(&mut self) -> Result<(u64, u64)> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.int()?),
            _ => None,
        };
        if !self.eat(b't') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => self.err("expected a coefficient or 't'"),
            };
        }
        let deg = if self.eat(b'^') { self.int()? } else { 1 };
        if deg > MAX_DEGREE {
            return self.err(format!("degree {deg} exceeds {MAX_DEGREE}"));
        }
        Ok((coeff.unwrap_or(1), deg))
    }
}

pub fn parse(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.expr()
}

/// Builds the ring an expression denotes. Quotient atoms become
/// structure-constant rings on `{1, t, ..., t^(d-1)}`.
pub fn elaborate(e: &RingExpr) -> Result<FiniteRing> {
    let rings = elaborate_factors(e)?;
    match rings.as_slice() {
        [single] => Ok(single.clone()),
        _ => make_product(&rings),
    }
}

/// One ring per atom, in order.
pub fn elaborate_factors(e: &RingExpr) -> Result<Vec<FiniteRing>> {
    e.factors.iter().map(elaborate_atom).collect()
}

/// `parse` followed by `elaborate`.
pub fn ring(text: &str) -> Result<FiniteRing> {
    elaborate(&parse(text)?)
}

fn elaborate_atom(a: &Atom) -> Result<FiniteRing> {
    match a {
        Atom::Zmod(n) => make_zmod(*n),
        Atom::An(v) => {
            let variant = match v {
                Some(v) => *v,
                None => canonical_an_variant()?,
            };
            Ok(variant.ring().renamed(a.to_string()))
        }
        Atom::Quot { modulus, poly } => Ok(quotient_ring(*modulus, poly)?.renamed(a.to_string())),
    }
}

fn quotient_ring(n: u64, poly: &[u64]) -> Result<FiniteRing> {
    let d = poly.len() - 1;
    let size = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if size > crate::ring::DEFAULT_SIZE_CAP as u128 {
        return Err(Error::Capacity { size, cap: crate::ring::DEFAULT_SIZE_CAP });
    }
    // powers[k] = coordinates of t^k reduced mod poly, for k < 2d - 1
    let mut powers: Vec<Vec<u64>> = Vec::with_capacity(2 * d);
    let mut cur = vec![0u64; d];
    cur[0] = 1 % n;
    for _ in 0..(2 * d).saturating_sub(1).max(1) {
        powers.push(cur.clone());
        // multiply by t: shift up, fold t^d = -(p_0 + ... + p_{d-1} t^{d-1})
        let top = cur[d - 1];
        for i in (1..d).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for (c, &p) in cur.iter_mut().zip(poly) {
            *c = (*c + (n - p % n) % n * top) % n;
        }
    }
    let mut table = StructureTable::new();
    for i in 0..d {
        for j in i..d {
            table.insert((i, j), powers[i + j].clone());
        }
    }
    let mut unity = vec![0; d];
    unity[0] = 1;
    make_structure_ring(&vec![n; d], &unity, &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Elem;

    fn quot(modulus: u64, poly: &[u64]) -> Atom {
        Atom::Quot { modulus, poly: poly.to_vec() }
    }

    #[test]
    fn parses_atoms_and_products() {
        assert_eq!(parse("Z12").unwrap().factors, vec![Atom::Zmod(12)]);
        assert_eq!(parse("Z4 x Z3").unwrap().factors, vec![Atom::Zmod(4), Atom::Zmod(3)]);
        assert_eq!(parse(" Z4X Z3 ").unwrap().factors, vec![Atom::Zmod(4), Atom::Zmod(3)]);
        assert_eq!(parse("Z2[t]/(t^2)").unwrap().factors, vec![quot(2, &[0, 0, 1])]);
        assert_eq!(
            parse("AN x AN0 x AN2").unwrap().factors,
            vec![Atom::An(None), Atom::An(Some(AnVariant::ZSquaredZero)), Atom::An(Some(AnVariant::ZSquaredTwo))]
        );
    }

    #[test]
    fn folds_signs_and_like_terms() {
        assert_eq!(parse("Z4[t]/(t^2-2)").unwrap().factors, vec![quot(4, &[2, 0, 1])]);
        assert_eq!(parse("Z4[t]/(-2+t^2)").unwrap().factors, vec![quot(4, &[2, 0, 1])]);
        assert_eq!(parse("Z3[ t ] / ( t^2 + 2t + t + 1 )").unwrap().factors, vec![quot(3, &[1, 0, 1])]);
        assert_eq!(parse("Z2[t]/(2t^3 + t^2 + 1)").unwrap().factors, vec![quot(2, &[1, 0, 1])]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse("Z0").unwrap_err(), Error::InvalidModulus(0));
        assert!(matches!(parse("Z3[t]/(2t^2+1)"), Err(Error::Unsupported(_))));
        assert!(matches!(parse("Z3[t]/(1)"), Err(Error::Unsupported(_))));
        assert!(matches!(parse(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("Z4 x"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse("Z4 + Z3"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse("Q5"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("AN7"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("Z99999999999999999999999"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn prints_canonically() {
        for text in ["Z12", "Z4 x Z3", "Z2[t]/(t^2)", "Z4[t]/(t^2+2)", "Z5[t]/(t^3+4t+1)", "AN x AN2", "Z3[t]/(t+2)"] {
            assert_eq!(parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn elaborates_quotients() {
        let r = ring("Z2[t]/(t^2)").unwrap();
        assert_eq!(r.size(), 4);
        assert!(r.is_nilpotent(Elem(2)));

        let gf4 = ring("Z2[t]/(t^2+t+1)").unwrap();
        assert!((1..4).all(|a| gf4.is_unit(Elem(a))));

        let r = ring("Z3[t]/(t^2)").unwrap();
        assert_eq!(r.size(), 9);
        let nil = r.nilradical();
        // t = index 3, 2t = index 6
        assert_eq!(nil.ideal.elements(), &[Elem(0), Elem(3), Elem(6)]);
        assert_eq!(nil.index_of_nilpotency, 2);

        let r = ring("Z4[t]/(t^2-2)").unwrap();
        assert_eq!(r.mul_idx(4, 4), 2);
        let r = ring("Z2[t]/(t^3+t+1)").unwrap();
        assert_eq!(r.units().len(), 7);
    }

    #[test]
    fn elaborates_products_and_builtins() {
        let r = ring("AN x Z2").unwrap();
        assert_eq!(r.size(), 64);
        assert_eq!(r.name(), "AN x Z2");
        assert_eq!(ring("AN2").unwrap().size(), 32);
        assert!(matches!(ring("Z64 x Z64 x Z2"), Err(Error::Capacity { .. })));
        assert!(matches!(ring("Z2[t]/(t^13)"), Err(Error::Capacity { .. })));
    }

    #[test]
    fn linear_quotient_collapses() {
        // Z3[t]/(t+2): t = 1, the ring is Z3 again.
        let r = ring("Z3[t]/(t+2)").unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.units().len(), 2);
    }
}
