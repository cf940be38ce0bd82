//! Sparse polynomials in `x2, x3, x4`.
//!
//! The text form is a sum of terms `coef*x2^a*x3^b*x4^c`, printed in graded
//! lexicographic order with `x2 > x3 > x4`, for example
//! `3/2*x2^3 - x2*x4 + x3^2`. [`MultiPoly::parse`] reads it back.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::rational::Rational;
use crate::ring::Coefficient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X2,
    X3,
    X4,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X2, Var::X3, Var::X4];

    fn index(self) -> usize {
        match self {
            Var::X2 => 0,
            Var::X3 => 1,
            Var::X4 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X4 => "x4",
        }
    }
}

/// Exponent vector `(e2, e3, e4)`.
///
/// `Ord` is graded lexicographic, so the largest monomial is the leading one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial in `x2, x3, x4` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<C = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C> Default for MultiPoly<C> {
    fn default() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coef: C, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, coef: C) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                let sum = c.add_ref(&coef);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(mono, coef);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&C> {
        self.terms.get(mono)
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a.mul_ref(c))))
    }

    /// Multiply by a monomial.
    pub fn shift(&self, mono: Monomial) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.times(&mono), a.clone())).collect() }
    }

    pub fn mul_poly(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.times(mb), a.mul_ref(b));
            }
        }
        out
    }

    pub fn add_poly(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub_poly(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<MultiPoly<D>> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Substitute values for every variable.
    ///
    /// `zero` fixes the ring of the result for the zero polynomial.
    pub fn evaluate(&self, vals: &VarValues<C>, zero: C) -> C {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t = t.mul_ref(&vals.get(v).pow(e as u64));
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }
}

/// Values assigned to `x2, x3, x4`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarValues<C>(pub [C; 3]);

impl<C> VarValues<C> {
    pub fn new(x2: C, x3: C, x4: C) -> Self {
        VarValues([x2, x3, x4])
    }

    pub fn get(&self, v: Var) -> &C {
        &self.0[v.index()]
    }
}

impl MultiPoly<Rational> {
    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn x2() -> Self {
        Self::var(Var::X2)
    }

    pub fn x3() -> Self {
        Self::var(Var::X3)
    }

    pub fn x4() -> Self {
        Self::var(Var::X4)
    }

    /// Reduce every coefficient modulo `p`.
    pub fn reduce(&self, p: Prime) -> Result<MultiPoly<FieldElement>> {
        self.try_map_coefficients(|c| c.reduce(p))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Parser { src: s, pos: 0 }.polynomial()
    }
}

impl MultiPoly<FieldElement> {
    /// `x2^a x3^b x4^c` monomial with coefficient 1 in `F_p`.
    pub fn var_mod(v: Var, p: Prime) -> Self {
        Self::term(p.one(), Monomial::var(v))
    }
}

/// Reduce the coefficients of `q` mod `p` and evaluate at `vals`.
pub fn specialize(q: &MultiPoly<Rational>, vals: &VarValues<FieldElement>, p: Prime) -> Result<FieldElement> {
    for v in Var::ALL {
        if vals.get(v).modulus() != p {
            return Err(Error::ModulusMismatch(vals.get(v).modulus().get(), p.get()));
        }
    }
    Ok(q.reduce(p)?.evaluate(vals, p.zero()))
}

impl<C: Coefficient> Add for MultiPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_poly(&rhs)
    }
}

impl<C: Coefficient> Sub for MultiPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_poly(&rhs)
    }
}

impl<C: Coefficient> Mul for MultiPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_poly(&rhs)
    }
}

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Coefficient for MultiPoly<Rational> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn int_like(&self, n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_poly(rhs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub_poly(rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
}

/// How a coefficient is printed in front of a monomial.
trait CoefficientText {
    fn negative(&self) -> bool;
    fn magnitude(&self) -> String;
}

impl CoefficientText for Rational {
    fn negative(&self) -> bool {
        self.is_negative()
    }

    fn magnitude(&self) -> String {
        self.abs().to_string()
    }
}

impl CoefficientText for FieldElement {
    fn negative(&self) -> bool {
        false
    }

    fn magnitude(&self) -> String {
        self.residue().to_string()
    }
}

fn write_poly<C: CoefficientText>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Monomial, C)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c.negative();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let mag = c.magnitude();
        if m == Monomial::ONE {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{m}")?;
        } else {
            write!(f, "{mag}*{m}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for MultiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms().map(|(m, c)| (*m, c.clone())))
    }
}

impl fmt::Display for MultiPoly<FieldElement> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms().map(|(m, c)| (*m, *c)))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(&self.src[start..self.pos])
    }

    fn polynomial(mut self) -> Result<MultiPoly<Rational>> {
        let mut out = MultiPoly::zero();
        let mut negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            out = if negate { out - t } else { out + t };
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => return self.err(format!("unexpected {c:?}")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Rational>> {
        let mut coef = Rational::one();
        let mut mono = Monomial::ONE;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n: Rational = self.digits()?.parse()?;
                    let d = if self.eat('/') {
                        let d: Rational = self.digits()?.parse()?;
                        if num_traits::Zero::is_zero(d.numer()) {
                            return self.err("zero denominator");
                        }
                        d
                    } else {
                        Rational::one()
                    };
                    coef = coef * n / d;
                }
                Some('x') => {
                    self.pos += 1;
                    let v = match self.peek() {
                        Some('2') => Var::X2,
                        Some('3') => Var::X3,
                        Some('4') => Var::X4,
                        _ => return self.err("expected x2, x3 or x4"),
                    };
                    self.pos += 1;
                    let e = if self.eat('^') {
                        match self.digits()?.parse::<u32>() {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent out of range"),
                        }
                    } else {
                        1
                    };
                    let mut m = [0; 3];
                    m[v.index()] = e;
                    mono = mono.times(&Monomial(m));
                }
                _ => return self.err("expected a coefficient or a variable"),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(MultiPoly::term(coef, mono))
    }
}
