//! Truncated power series in one variable `z` over a generic coefficient ring.
//!
//! A series is either an exact polynomial (every coefficient past the stored
//! ones is zero) or is known through a finite degree, its precision, with
//! everything beyond unknown. Composition and iteration track the precision
//! the way arithmetic modulo `z^(N+1)` does.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Coefficient;

/// Degree through which a series' coefficients are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precision {
    /// A polynomial: all coefficients past the stored ones are zero.
    Exact,
    /// Coefficients of degree `<= N` are known; the rest are not.
    Degree(usize),
}

impl Precision {
    pub fn min(self, other: Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, o) | (o, Precision::Exact) => o,
            (Precision::Degree(a), Precision::Degree(b)) => Precision::Degree(a.min(b)),
        }
    }
}

/// Order of a series: the least degree of a nonzero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesOrder {
    Finite(usize),
    /// The series is exactly zero.
    Infinite,
    /// Every known coefficient vanishes; the order is at least this value.
    AtLeast(usize),
}

impl SeriesOrder {
    pub fn finite(self) -> Option<usize> {
        match self {
            SeriesOrder::Finite(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrder::Finite(n) => write!(f, "{n}"),
            SeriesOrder::Infinite => write!(f, "inf"),
            SeriesOrder::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    // Never empty: `coeffs[0]` doubles as the template for new constants.
    // Exact series carry no trailing zeros past degree 0; truncated series
    // store exactly `precision + 1` entries.
    coeffs: Vec<C>,
    precision: Precision,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// An exact polynomial. Panics if `coeffs` is empty.
    pub fn polynomial(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant coefficient");
        let mut s = TruncatedSeries { coeffs, precision: Precision::Exact };
        s.trim();
        s
    }

    /// A series known through degree `precision`; extra entries are dropped
    /// and missing ones are taken as zero.
    pub fn truncated(coeffs: Vec<C>, precision: usize) -> Self {
        TruncatedSeries::polynomial(coeffs).truncate(precision)
    }

    /// The identity series `z`.
    pub fn identity(template: &C) -> Self {
        TruncatedSeries::polynomial(vec![template.zero_like(), template.one_like()])
    }

    pub fn zero(template: &C) -> Self {
        TruncatedSeries::polynomial(vec![template.zero_like()])
    }

    fn trim(&mut self) {
        if self.precision == Precision::Exact {
            while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Coefficient::is_zero) {
                self.coeffs.pop();
            }
        }
    }

    fn template(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision == Precision::Exact
    }

    /// Highest degree with a known coefficient; `None` for exact series.
    pub fn known_degree(&self) -> Option<usize> {
        match self.precision {
            Precision::Exact => None,
            Precision::Degree(n) => Some(n),
        }
    }

    /// Whether every coefficient through `degree` is known.
    pub fn is_known_through(&self, degree: usize) -> bool {
        self.known_degree().is_none_or(|n| n >= degree)
    }

    /// Degree of the polynomial for exact series, the precision otherwise.
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `z^k`, or `None` when it is not known.
    pub fn coeff(&self, k: usize) -> Option<C> {
        match self.coeffs.get(k) {
            Some(c) => Some(c.clone()),
            None if self.is_exact() => Some(self.template().zero_like()),
            None => None,
        }
    }

    /// Stored coefficients, degree 0 first.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Drop everything past degree `n`. Exact series are promoted with zero
    /// padding; truncated series never gain precision.
    pub fn truncate(&self, n: usize) -> Self {
        let precision = self.precision.min(Precision::Degree(n));
        let len = match precision {
            Precision::Degree(d) => d + 1,
            Precision::Exact => unreachable!(),
        };
        let mut coeffs: Vec<C> = self.coeffs.iter().take(len).cloned().collect();
        coeffs.resize(len, self.template().zero_like());
        TruncatedSeries { coeffs, precision }
    }

    pub fn order(&self) -> SeriesOrder {
        order(self)
    }

    pub fn has_zero_constant_term(&self) -> bool {
        self.template().is_zero()
    }

    fn combine(&self, rhs: &Self, op: impl Fn(&C, &C) -> C) -> Self {
        let precision = self.precision.min(rhs.precision);
        let zero = self.template().zero_like();
        let len = match precision {
            Precision::Exact => self.coeffs.len().max(rhs.coeffs.len()),
            Precision::Degree(n) => n + 1,
        };
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = rhs.coeffs.get(k).unwrap_or(&zero);
                op(a, b)
            })
            .collect();
        let mut out = TruncatedSeries { coeffs, precision };
        out.trim();
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, C::add_ref)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, C::sub_ref)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out =
            TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(), precision: self.precision };
        out.trim();
        out
    }

    /// Product, known through the smaller precision of the factors.
    pub fn mul(&self, rhs: &Self) -> Self {
        let precision = self.precision.min(rhs.precision);
        let cap = match precision {
            Precision::Exact => self.coeffs.len() + rhs.coeffs.len() - 2,
            Precision::Degree(n) => n,
        };
        let support: Vec<(usize, &C)> = rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = vec![self.template().zero_like(); cap + 1];
        mul_into(&mut out, &self.coeffs, &support);
        let mut s = TruncatedSeries { coeffs: out, precision };
        s.trim();
        s
    }

    /// `self` with `z` replaced by `inner`; see [`compose`].
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        compose(self, inner)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect(), precision: self.precision };
        out.trim();
        out
    }
}

/// `out[i + j] += a[i] * b[j]` for every stored `a[i]` and every `(j, b[j])`
/// in `support`, dropping products past the end of `out`.
fn mul_into<C: Coefficient>(out: &mut [C], a: &[C], support: &[(usize, &C)]) {
    let cap = out.len() - 1;
    for (i, ai) in a.iter().enumerate().take(cap + 1) {
        if ai.is_zero() {
            continue;
        }
        for &(j, bj) in support {
            if i + j > cap {
                break;
            }
            out[i + j] = out[i + j].add_ref(&ai.mul_ref(bj));
        }
    }
}

/// Least degree with a nonzero coefficient.
///
/// An exact zero polynomial has infinite order. If every known coefficient
/// of a truncated series vanishes the result is a lower bound, one past
/// the precision.
pub fn order<C: Coefficient>(s: &TruncatedSeries<C>) -> SeriesOrder {
    match s.coeffs.iter().position(|c| !c.is_zero()) {
        Some(k) => SeriesOrder::Finite(k),
        None => match s.precision {
            Precision::Exact => SeriesOrder::Infinite,
            Precision::Degree(n) => SeriesOrder::AtLeast(n + 1),
        },
    }
}

/// `outer(inner(z))` by Horner's rule with truncating multiplications.
///
/// The result is known through the smaller of the two precisions; two exact
/// polynomials compose exactly.
pub fn compose<C: Coefficient>(outer: &TruncatedSeries<C>, inner: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    if !inner.has_zero_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    let precision = outer.precision.min(inner.precision);
    let cap = match precision {
        Precision::Exact => outer.degree_bound() * inner.degree_bound(),
        Precision::Degree(n) => n,
    };
    let zero = outer.template().zero_like();
    let support: Vec<(usize, &C)> =
        inner.coeffs.iter().enumerate().take(cap + 1).filter(|(_, c)| !c.is_zero()).collect();

    let top = outer.degree_bound().min(cap);
    let mut acc = vec![zero.clone(); cap + 1];
    acc[0] = outer.coeffs[top].clone();
    for k in (0..top).rev() {
        let mut next = vec![zero.clone(); cap + 1];
        mul_into(&mut next, &acc, &support);
        next[0] = next[0].add_ref(&outer.coeffs[k]);
        acc = next;
    }
    let mut out = TruncatedSeries { coeffs: acc, precision };
    out.trim();
    Ok(out)
}

/// The `m`-fold composition of `g` with itself; `m = 0` gives `z`.
pub fn iterate<C: Coefficient>(g: &TruncatedSeries<C>, m: u64) -> Result<TruncatedSeries<C>> {
    if !g.has_zero_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    if m == 0 {
        let id = TruncatedSeries::identity(g.template());
        return Ok(match g.precision {
            Precision::Exact => id,
            Precision::Degree(n) => id.truncate(n),
        });
    }
    let mut acc = g.clone();
    for _ in 1..m {
        acc = compose(&acc, g)?;
    }
    Ok(acc)
}

pub(crate) fn check_tangent<C: Coefficient>(g: &TruncatedSeries<C>) -> Result<()> {
    if !g.has_zero_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    match g.coeff(1) {
        Some(c) if c.is_one() => Ok(()),
        Some(c) => Err(Error::WrongLinearCoefficient { expected: "1".into(), found: format!("{c:?}") }),
        None => Err(Error::InsufficientPrecision { needed: 1, have: 0 }),
    }
}

/// `D_1 = g - z` and `D_m = D_(m-1)(g) - D_(m-1)`; `D_m` equals `g^m - z`
/// whenever `m` is the characteristic of the coefficient ring.
pub fn delta<C: Coefficient>(g: &TruncatedSeries<C>, m: u64) -> Result<TruncatedSeries<C>> {
    check_tangent(g)?;
    if m == 0 {
        return Err(Error::Unsupported("difference level must be at least 1".into()));
    }
    let mut d = g.sub(&TruncatedSeries::identity(g.template()));
    for _ in 1..m {
        d = compose(&d, g)?.sub(&d);
    }
    Ok(d)
}

/// Every `D_k` for `k = 1..=m`, index 0 holding `D_1`.
pub fn delta_levels<C: Coefficient>(g: &TruncatedSeries<C>, m: u64) -> Result<Vec<TruncatedSeries<C>>> {
    check_tangent(g)?;
    let mut out = Vec::with_capacity(m as usize);
    let mut d = g.sub(&TruncatedSeries::identity(g.template()));
    for _ in 0..m {
        let next = compose(&d, g)?.sub(&d);
        out.push(std::mem::replace(&mut d, next));
    }
    Ok(out)
}

impl<C: Coefficient + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let text = c.to_string();
            let text = if text.contains([' ', '+']) || text[1..].contains('-') { format!("({text})") } else { text };
            match (k, c.is_one()) {
                (0, _) => write!(f, "{text}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{text}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{text}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Precision::Degree(n) = self.precision {
            write!(f, " + O(z^{})", n + 1)?;
        }
        Ok(())
    }
}
