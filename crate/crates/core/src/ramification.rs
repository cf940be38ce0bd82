//! Lower ramification numbers by brute-force iteration.
//!
//! `i_n(g)` is one less than the order of `g^(p^n)(z) - z`. The iterate is
//! computed as `n` successive `p`-fold self-compositions at a fixed working
//! precision; when every known coefficient of the difference vanishes the
//! result is reported as a lower bound, never as infinity.

use serde::Serialize;

use crate::error::{Error, ExtrapolationHypothesis, Result};
use crate::field::{FieldElement, Prime};
use crate::series::{check_tangent, delta, iterate, SeriesOrder, TruncatedSeries};

/// A lower ramification number as far as the working precision can tell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RamificationNumber {
    Exact(u64),
    /// Every coefficient up to the working precision vanished.
    AtLeast(u64),
    /// The series is exactly the identity; every iterate is too.
    Identity,
}

impl RamificationNumber {
    pub fn exact(self) -> Option<u64> {
        match self {
            RamificationNumber::Exact(i) => Some(i),
            _ => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, RamificationNumber::Exact(_))
    }

    /// The value, exact or a lower bound; `None` for the identity.
    pub fn value(self) -> Option<u64> {
        match self {
            RamificationNumber::Exact(i) | RamificationNumber::AtLeast(i) => Some(i),
            RamificationNumber::Identity => None,
        }
    }

    /// Whether this is known to be exactly `target`. A lower bound above
    /// `target` settles the question negatively.
    pub fn equals(self, target: u64) -> Option<bool> {
        match self {
            RamificationNumber::Exact(i) => Some(i == target),
            RamificationNumber::AtLeast(i) if i > target => Some(false),
            RamificationNumber::AtLeast(_) => None,
            RamificationNumber::Identity => Some(false),
        }
    }

    fn from_order(order: SeriesOrder) -> Self {
        match order {
            SeriesOrder::Finite(k) => RamificationNumber::Exact(k as u64 - 1),
            SeriesOrder::AtLeast(k) => RamificationNumber::AtLeast(k as u64 - 1),
            SeriesOrder::Infinite => RamificationNumber::Identity,
        }
    }
}

impl std::fmt::Display for RamificationNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RamificationNumber::Exact(i) => write!(f, "{i}"),
            RamificationNumber::AtLeast(i) => write!(f, ">={i}"),
            RamificationNumber::Identity => write!(f, "identity"),
        }
    }
}

/// `1 + p + ... + p^n`
pub fn geometric_sum(p: u64, n: u32) -> u64 {
    (0..=n).map(|k| p.pow(k)).sum()
}

/// `2 (1 + p + ... + p^n)`, the sequence of a 2-ramified series.
pub fn two_ramified_value(p: u64, n: u32) -> u64 {
    2 * geometric_sum(p, n)
}

/// Default working precision for levels up to `n`: `2(1 + p + ... + p^n) + 2`.
pub fn working_precision(p: Prime, n: u32) -> usize {
    (two_ramified_value(p.get(), n) + 2) as usize
}

fn is_exact_identity(g: &TruncatedSeries<FieldElement>) -> bool {
    g.is_exact() && g.sub(&TruncatedSeries::identity(&g.coeffs()[0])).order() == SeriesOrder::Infinite
}

/// All `i_0 ..= i_{n_max}` from one chain of `p`-fold iterations.
fn levels(g: &TruncatedSeries<FieldElement>, n_max: u32, precision: usize) -> Result<Vec<RamificationNumber>> {
    check_tangent(g)?;
    if is_exact_identity(g) {
        return Ok(vec![RamificationNumber::Identity; n_max as usize + 1]);
    }
    let p = g.coeffs()[0].modulus();
    let id = TruncatedSeries::identity(&p.zero());
    let mut h = g.truncate(precision);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        if n > 0 {
            h = iterate(&h, p.get())?;
        }
        out.push(RamificationNumber::from_order(h.sub(&id).order()));
    }
    Ok(out)
}

/// `i_n(g)`, computed at `precision` (default [`working_precision`]).
pub fn lower_ramification(
    g: &TruncatedSeries<FieldElement>,
    n: u32,
    precision: Option<usize>,
) -> Result<RamificationNumber> {
    let p = g.coeffs()[0].modulus();
    let precision = precision.unwrap_or_else(|| working_precision(p, n));
    Ok(*levels(g, n, precision)?.last().expect("at least one level"))
}

/// `i_1(g)` through the difference recurrence: one less than the order of
/// the `p`-th difference series.
pub fn first_ramification_via_delta(
    g: &TruncatedSeries<FieldElement>,
    precision: Option<usize>,
) -> Result<RamificationNumber> {
    check_tangent(g)?;
    if is_exact_identity(g) {
        return Ok(RamificationNumber::Identity);
    }
    let p = g.coeffs()[0].modulus();
    let precision = precision.unwrap_or_else(|| working_precision(p, 1));
    Ok(RamificationNumber::from_order(delta(&g.truncate(precision), p.get())?.order()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub n: u32,
    /// The value, or its lower bound when `exact` is false; null for the identity.
    pub i: Option<u64>,
    pub exact: bool,
    /// Congruence with the previous level; null at level 0 or when either
    /// level is not exact.
    pub sen: Option<bool>,
    #[serde(skip)]
    pub number: RamificationNumber,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationReport {
    pub p: Prime,
    pub series: String,
    pub precision: usize,
    pub identity: bool,
    pub levels: Vec<Level>,
    pub two_ramified_pattern: bool,
}

impl RamificationReport {
    pub fn numbers(&self) -> Vec<RamificationNumber> {
        self.levels.iter().map(|l| l.number).collect()
    }
}

/// `i_n ≡ i_(n-1) (mod p^n)`.
pub fn sen_congruence(prev: u64, next: u64, p: Prime, n: u32) -> bool {
    let modulus = p.get().pow(n);
    prev % modulus == next % modulus
}

/// Sen's congruence between consecutive levels; `None` at level 0 and
/// wherever either level is not exact.
pub fn sen_check(report: &RamificationReport) -> Vec<Option<bool>> {
    sen_verdicts(report.p, &report.numbers())
}

fn sen_verdicts(p: Prime, numbers: &[RamificationNumber]) -> Vec<Option<bool>> {
    let mut out = vec![None];
    for (n, pair) in numbers.windows(2).enumerate() {
        out.push(match (pair[0], pair[1]) {
            (RamificationNumber::Exact(a), RamificationNumber::Exact(b)) => Some(sen_congruence(a, b, p, n as u32 + 1)),
            _ => None,
        });
    }
    out
}

/// The report for levels `0..=n_max`.
pub fn ramification_sequence(
    g: &TruncatedSeries<FieldElement>,
    n_max: u32,
    precision: Option<usize>,
    description: impl Into<String>,
) -> Result<RamificationReport> {
    let p = g.coeffs()[0].modulus();
    let precision = precision.unwrap_or_else(|| working_precision(p, n_max));
    let numbers = levels(g, n_max, precision)?;
    let sen = sen_verdicts(p, &numbers);
    let two_ramified_pattern =
        numbers.iter().enumerate().all(|(n, i)| i.exact() == Some(two_ramified_value(p.get(), n as u32)));
    let levels = numbers
        .iter()
        .zip(sen)
        .enumerate()
        .map(|(n, (&number, sen))| Level { n: n as u32, i: number.value(), exact: number.is_exact(), sen, number })
        .collect();
    Ok(RamificationReport {
        p,
        series: description.into(),
        precision,
        identity: numbers.first() == Some(&RamificationNumber::Identity),
        levels,
        two_ramified_pattern,
    })
}

/// `i_n = i_0 + (p^n - 1)/(p - 1) (i_1 - i_0)`, valid when `p` does not
/// divide `i_0` and `i_1 < (p^2 - p + 1) i_0`.
pub fn laubie_saine_extrapolate(i0: u64, i1: u64, p: Prime, n: u32) -> Result<u64> {
    let q = p.get();
    if i0.is_multiple_of(q) {
        return Err(Error::HypothesisViolated(ExtrapolationHypothesis::PrimeDividesFirst));
    }
    let bound = (q as u128 * q as u128 - q as u128 + 1) * i0 as u128;
    if i1 as u128 >= bound {
        return Err(Error::HypothesisViolated(ExtrapolationHypothesis::SecondTooLarge));
    }
    if i1 < i0 {
        return Err(Error::HypothesisViolated(ExtrapolationHypothesis::Decreasing));
    }
    let overflow = || Error::Unsupported(format!("i_{n} overflows u64"));
    let geometric = (0..n).try_fold(0u64, |acc, k| q.checked_pow(k).and_then(|t| acc.checked_add(t)));
    geometric.and_then(|s| s.checked_mul(i1 - i0)).and_then(|t| t.checked_add(i0)).ok_or_else(overflow)
}
