//! Closed-form classification of 2-ramified series.
//!
//! For `g(z) = z(1 + a1 z + a2 z^2 + a3 z^3 + a4 z^4 + ...)` over `F_p`,
//! `p` odd, `g` is 2-ramified exactly when `a1 = 0`, `a2 != 0` and
//! `3/2 a2^3 + a3^2 - a2 a4 != 0`. The same quantity, times `a2^(p-2)`, is
//! the coefficient of `z^(2p+3)` in `g^p(z) - z`, and every lower
//! coefficient of that difference vanishes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::series::{check_tangent, iterate, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    TwoRamified,
    NotTwoRamified,
    Rejected,
}

/// Why a series is not 2-ramified, or why it was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// `a1 != 0`, so `i_0 = 1`.
    LinearTermNonzero,
    /// `a2 = 0` (with `a1 = 0`), so `i_0 > 2`.
    QuadraticTermZero,
    /// The closed-form criterion vanishes.
    CriterionZero,
    /// The series is the identity; no ramification numbers exist.
    Identity,
    /// `p = 2`, outside the range of the criterion.
    EvenPrime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub p: Prime,
    pub verdict: Verdict,
    /// `None` only when `p = 2`, where `3/2` does not exist.
    pub criterion_value: Option<FieldElement>,
    pub reasons: Vec<Reason>,
    /// `[a1, a2, a3, a4]`.
    pub coefficients: [FieldElement; 4],
}

impl Classification {
    pub fn is_two_ramified(&self) -> bool {
        self.verdict == Verdict::TwoRamified
    }

    fn rejected(p: Prime, reason: Reason, coefficients: [FieldElement; 4], value: Option<FieldElement>) -> Self {
        Classification { p, verdict: Verdict::Rejected, criterion_value: value, reasons: vec![reason], coefficients }
    }
}

fn modulus(g: &TruncatedSeries<FieldElement>) -> Prime {
    g.coeffs()[0].modulus()
}

/// `[a1, a2, a3, a4]`, the coefficients of `z^2 ..= z^5`.
fn leading_coefficients(g: &TruncatedSeries<FieldElement>) -> Result<[FieldElement; 4]> {
    if !g.is_known_through(5) {
        return Err(Error::InsufficientPrecision { needed: 5, have: g.degree_bound() });
    }
    let c = |k| g.coeff(k).expect("known through degree 5");
    Ok([c(2), c(3), c(4), c(5)])
}

fn is_exactly(g: &TruncatedSeries<FieldElement>, linear: FieldElement) -> bool {
    g.is_exact() && g.degree_bound() == 1 && g.coeffs()[1] == linear
}

/// `3/2 a2^3 + a3^2 - a2 a4` in `F_p`, `p` odd.
pub fn criterion_value(a2: FieldElement, a3: FieldElement, a4: FieldElement) -> FieldElement {
    let p = a2.modulus();
    let three_halves = p.element(3) / p.element(2);
    three_halves * a2 * a2 * a2 + a3 * a3 - a2 * a4
}

/// Decide whether `g` is 2-ramified from `a1 .. a4` alone.
///
/// Errors when `g` is not tangent to the identity or is known only below
/// degree 5. `p = 2` and the identity series are returned as rejected.
pub fn classify_two_ramified(g: &TruncatedSeries<FieldElement>) -> Result<Classification> {
    check_tangent(g)?;
    let p = modulus(g);
    let coefficients = leading_coefficients(g)?;
    if !p.is_odd() {
        return Ok(Classification::rejected(p, Reason::EvenPrime, coefficients, None));
    }
    let [a1, a2, a3, a4] = coefficients;
    let value = criterion_value(a2, a3, a4);
    if is_exactly(g, p.one()) {
        return Ok(Classification::rejected(p, Reason::Identity, coefficients, Some(value)));
    }
    let mut reasons = Vec::new();
    if a1 != p.zero() {
        reasons.push(Reason::LinearTermNonzero);
    } else if a2 == p.zero() {
        reasons.push(Reason::QuadraticTermZero);
    }
    if value == p.zero() {
        reasons.push(Reason::CriterionZero);
    }
    let verdict = if reasons.is_empty() { Verdict::TwoRamified } else { Verdict::NotTwoRamified };
    Ok(Classification { p, verdict, criterion_value: Some(value), reasons, coefficients })
}

/// The predicted leading term of `g^p(z) - z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    pub exponent: usize,
    pub coefficient: FieldElement,
}

/// `(2p + 3, a2^(p-2) (3/2 a2^3 + a3^2 - a2 a4))`.
pub fn predict_leading_term(g: &TruncatedSeries<FieldElement>) -> Result<LeadingTerm> {
    check_tangent(g)?;
    let p = modulus(g).require_odd()?;
    let [a1, a2, a3, a4] = leading_coefficients(g)?;
    if a1 != p.zero() {
        return Err(Error::Precondition("the coefficient of z^2 must vanish".into()));
    }
    let e = p.get() - 2;
    let coefficient = crate::ring::Coefficient::pow(&a2, e) * criterion_value(a2, a3, a4);
    Ok(LeadingTerm { exponent: 2 * p.get() as usize + 3, coefficient })
}

/// The prediction next to the brute-force coefficients of `g^p(z) - z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTermCheck {
    pub predicted: LeadingTerm,
    /// Coefficient of `z^(2p+3)` in the computed `g^p - z`.
    pub computed: FieldElement,
    /// Every coefficient of `g^p - z` below `z^(2p+3)` is zero.
    pub lower_terms_vanish: bool,
    pub agrees: bool,
}

/// Compare [`predict_leading_term`] with the actual `p`-fold iterate.
pub fn check_leading_term(g: &TruncatedSeries<FieldElement>) -> Result<LeadingTermCheck> {
    let predicted = predict_leading_term(g)?;
    let p = modulus(g);
    let k = predicted.exponent;
    let it = iterate(&g.truncate(k), p.get())?;
    let diff = it.sub(&TruncatedSeries::identity(&p.zero()));
    let lower_terms_vanish = (0..k).all(|j| diff.coeff(j).is_some_and(|c| c == p.zero()));
    let computed = diff.coeff(k).expect("iterate known through the predicted degree");
    Ok(LeadingTermCheck {
        predicted,
        computed,
        lower_terms_vanish,
        agrees: lower_terms_vanish && computed == predicted.coefficient,
    })
}

/// Outcome of [`random_self_test`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTest {
    pub p: Prime,
    pub seed: u64,
    pub cases: usize,
    /// `[a2, a3, a4]` of every case whose prediction disagreed.
    pub mismatches: Vec<[u64; 3]>,
}

impl SelfTest {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Check [`predict_leading_term`] against brute force on `cases` random
/// series `z + a2 z^3 + a3 z^4 + a4 z^5` with `a2 != 0`, seeded.
pub fn random_self_test(p: Prime, cases: usize, seed: u64) -> Result<SelfTest> {
    use rand::{Rng, SeedableRng};
    use rayon::prelude::*;

    let p = p.require_odd()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let q = p.get();
    let draws: Vec<[u64; 3]> =
        (0..cases).map(|_| [rng.gen_range(1..q), rng.gen_range(0..q), rng.gen_range(0..q)]).collect();
    let results: Vec<Result<bool>> = draws
        .par_iter()
        .map(|&[a2, a3, a4]| {
            let coeffs = [0, 1, 0, a2, a3, a4].map(|c| FieldElement::new(c, p));
            Ok(check_leading_term(&TruncatedSeries::polynomial(coeffs.to_vec()))?.agrees)
        })
        .collect();
    let mut mismatches = Vec::new();
    for (draw, ok) in draws.into_iter().zip(results) {
        if !ok? {
            mismatches.push(draw);
        }
    }
    Ok(SelfTest { p, seed, cases, mismatches })
}

fn check_involutive_linear(f: &TruncatedSeries<FieldElement>) -> Result<()> {
    if !f.has_zero_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    let p = modulus(f);
    match f.coeff(1) {
        Some(c) if c == -p.one() => Ok(()),
        Some(c) => Err(Error::WrongLinearCoefficient { expected: "-1".into(), found: c.to_string() }),
        None => Err(Error::InsufficientPrecision { needed: 1, have: 0 }),
    }
}

/// `(a1^2 + a2)` and `(11 a1^4 + 25 a1^2 a2 + 12 a1 a3 + 6 a2^2 + 4 a4)`.
fn involution_factors(a: [FieldElement; 4]) -> (FieldElement, FieldElement) {
    let [a1, a2, a3, a4] = a;
    let p = a1.modulus();
    let k = |n| p.element(n);
    let a1sq = a1 * a1;
    let first = a1sq + a2;
    let second = k(11) * a1sq * a1sq + k(25) * a1sq * a2 + k(12) * a1 * a3 + k(6) * a2 * a2 + k(4) * a4;
    (first, second)
}

/// Decide whether `f o f` is 2-ramified for `f(z) = -z + a1 z^2 + ...`.
pub fn classify_involution_square(f: &TruncatedSeries<FieldElement>) -> Result<Classification> {
    check_involutive_linear(f)?;
    let p = modulus(f);
    let coefficients = leading_coefficients(f)?;
    if !p.is_odd() {
        return Ok(Classification::rejected(p, Reason::EvenPrime, coefficients, None));
    }
    let (first, second) = involution_factors(coefficients);
    let value = first * second;
    if is_exactly(f, -p.one()) {
        return Ok(Classification::rejected(p, Reason::Identity, coefficients, Some(value)));
    }
    let mut reasons = Vec::new();
    if first == p.zero() {
        reasons.push(Reason::QuadraticTermZero);
    }
    if value == p.zero() {
        reasons.push(Reason::CriterionZero);
    }
    let verdict = if reasons.is_empty() { Verdict::TwoRamified } else { Verdict::NotTwoRamified };
    Ok(Classification { p, verdict, criterion_value: Some(value), reasons, coefficients })
}

/// `f o f` through degree 5 from `a1 .. a4`:
/// `z - 2(a1^2 + a2) z^3 + (a1^3 + a1 a2) z^4 + (3 a2^2 - 6 a1 a3 - a1^2 a2 - 2 a4) z^5`.
pub fn expand_involution_square(f: &TruncatedSeries<FieldElement>) -> Result<TruncatedSeries<FieldElement>> {
    check_involutive_linear(f)?;
    let p = modulus(f);
    let [a1, a2, a3, a4] = leading_coefficients(f)?;
    let k = |n| p.element(n);
    let coeffs = vec![
        p.zero(),
        p.one(),
        p.zero(),
        k(-2) * (a1 * a1 + a2),
        a1 * a1 * a1 + a1 * a2,
        k(3) * a2 * a2 - k(6) * a1 * a3 - a1 * a1 * a2 - k(2) * a4,
    ];
    Ok(TruncatedSeries::truncated(coeffs, 5))
}
