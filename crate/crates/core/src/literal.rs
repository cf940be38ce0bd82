//! Series literals such as `p=5; g = z + z^3 + 2*z^4`.
//!
//! ```text
//! literal  := [ "p" "=" int ";" ] [ name "=" ] poly
//! poly     := [sign] term { sign term }
//! term     := int [ ["*"] "z" [ "^" int ] ] | "z" [ "^" int ]
//! ```
//!
//! Whitespace is ignored. Coefficients are integers, reduced mod `p` when
//! the literal is interpreted.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::series::TruncatedSeries;

/// A parsed literal: integer coefficients by degree, plus the modulus if
/// the literal named one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesLiteral {
    pub modulus: Option<u64>,
    pub coefficients: BTreeMap<usize, i64>,
}

impl SeriesLiteral {
    pub fn parse(src: &str) -> Result<Self> {
        let mut cur = Cursor { src, pos: 0 };
        cur.skip_ws();
        let mut modulus = None;

        // optional "p = N ;" header
        let save = cur.pos;
        if cur.eat_char('p') && cur.eat('=') {
            let n = cur.unsigned()?;
            if !cur.eat(';') {
                return cur.err("expected ';' after the modulus");
            }
            modulus = Some(n);
        } else {
            cur.pos = save;
        }

        // optional "name =" prefix
        let save = cur.pos;
        cur.skip_ws();
        let name_start = cur.pos;
        while matches!(cur.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            cur.pos += 1;
        }
        if cur.pos == name_start || !cur.eat('=') {
            cur.pos = save;
        }

        let coefficients = cur.poly()?;
        Ok(SeriesLiteral { modulus, coefficients })
    }

    /// The exact polynomial over `F_p`. `p` overrides the literal's own
    /// modulus; one of the two must be present.
    pub fn to_series(&self, p: Option<Prime>) -> Result<TruncatedSeries<FieldElement>> {
        let p = match (p, self.modulus) {
            (Some(p), _) => p,
            (None, Some(m)) => Prime::new(m)?,
            (None, None) => return Err(Error::Parse { offset: 0, message: "no modulus given".into() }),
        };
        let top = self.coefficients.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![p.zero(); top + 1];
        for (&k, &c) in &self.coefficients {
            coeffs[k] = p.element(c);
        }
        Ok(TruncatedSeries::polynomial(coeffs))
    }
}

/// Parse `src` and reduce it modulo `p` (or the literal's own `p=`).
pub fn parse_series(src: &str, p: Option<Prime>) -> Result<(Prime, TruncatedSeries<FieldElement>)> {
    let lit = SeriesLiteral::parse(src)?;
    let s = lit.to_series(p)?;
    let q = s.coeffs()[0].modulus();
    Ok((q, s))
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat_char(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        self.eat_char(c)
    }

    fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        match self.src[start..self.pos].parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn poly(&mut self) -> Result<BTreeMap<usize, i64>> {
        let mut out: BTreeMap<usize, i64> = BTreeMap::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let (degree, coef) = self.term()?;
            let slot = out.entry(degree).or_insert(0);
            *slot = coef
                .checked_mul(sign)
                .and_then(|c| slot.checked_add(c))
                .ok_or(Error::Parse { offset: self.pos, message: "coefficient overflow".into() })?;
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    fn term(&mut self) -> Result<(usize, i64)> {
        self.skip_ws();
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned()?;
                match i64::try_from(n) {
                    Ok(n) => Some(n),
                    Err(_) => return self.err("coefficient out of range"),
                }
            }
            _ => None,
        };
        let had_star = self.eat('*');
        if had_star && coef.is_none() {
            return self.err("expected a coefficient before '*'");
        }
        self.skip_ws();
        if !self.eat_char('z') {
            return match (coef, had_star) {
                (Some(c), false) => Ok((0, c)),
                _ => self.err("expected 'z'"),
            };
        }
        let degree = if self.eat('^') {
            match usize::try_from(self.unsigned()?) {
                Ok(d) => d,
                Err(_) => return self.err("exponent out of range"),
            }
        } else {
            1
        };
        Ok((degree, coef.unwrap_or(1)))
    }
}
