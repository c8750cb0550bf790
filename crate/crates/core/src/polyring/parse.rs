//! Reader for the printed polynomial grammar.

use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Ring;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if !self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if self.s.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            if self.s.get(self.pos) == Some(&b'{') {
                while self.pos < self.s.len() && self.s[self.pos] != b'}' {
                    self.pos += 1;
                }
                self.pos += 1;
            } else {
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
            }
        }
        let raw = std::str::from_utf8(&self.s[start..self.pos.min(self.s.len())]).ok()?;
        Some(raw)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

/// Parses a polynomial in the printed grammar of `Polynomial`'s `Display`.
/// Whitespace inside variable names such as `p_{0, 1}` is tolerated.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let field = ring.field();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;
        let mut coeff = BigRational::from_integer(BigInt::from(1));
        let mut mono = Monomial::one(ring.nvars());
        let mut factors = 0;
        loop {
            if let Some(d) = cur.digits() {
                let n: BigInt = d.parse().unwrap();
                let q = if cur.eat(b'/') {
                    let den = cur.digits().ok_or_else(|| cur.err("expected denominator"))?;
                    let den: BigInt = den.parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(cur.err("zero denominator"));
                    }
                    BigRational::new(n, den)
                } else {
                    BigRational::from_integer(n)
                };
                coeff *= q;
            } else if let Some(name) = cur.identifier() {
                let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
                let idx = ring
                    .index_of_name(&key)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {key}")))?;
                let e: u16 = if cur.eat(b'^') {
                    cur.digits()
                        .ok_or_else(|| cur.err("expected exponent"))?
                        .parse()
                        .map_err(|_| cur.err("exponent out of range"))?
                } else {
                    1
                };
                mono = mono.mul(&Monomial::var(ring.nvars(), idx, e));
            } else {
                return Err(cur.err("expected coefficient or variable"));
            }
            factors += 1;
            if !cur.eat(b'*') {
                break;
            }
        }
        debug_assert!(factors > 0);
        if negative {
            coeff = -coeff;
        }
        terms.push((mono, field.from_rational(&coeff)?));
    }
    cur.skip_ws();
    if cur.pos != cur.s.len() {
        return Err(cur.err("unexpected trailing input"));
    }
    Ok(Polynomial::from_terms(ring.clone(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gametensor::Format;
    use crate::polyring::CoefField;

    #[test]
    fn parses_printed_form() {
        let r = Ring::probability(&Format::new(vec![2, 2]).unwrap(), CoefField::Rationals, "p")
            .unwrap();
        let f = parse_polynomial(&r, "-3*p_{0,0}*p_{1,0} - p_{0,0}*p_{1,1} + 2*p_{0,1}*p_{1,1}")
            .unwrap();
        assert_eq!(f.nterms(), 3);
        assert_eq!(
            f.to_string(),
            "-3*p_{0,0}*p_{1,0} - p_{0,0}*p_{1,1} + 2*p_{0,1}*p_{1,1}"
        );
        let g = parse_polynomial(&r, "1/2 * p_{0, 0}^2 - 7").unwrap();
        assert_eq!(g.to_string(), "1/2*p_{0,0}^2 - 7");
        assert!(parse_polynomial(&r, "x + 1").is_err());
        assert!(parse_polynomial(&r, "p_{0,0} +").is_err());
    }
}
