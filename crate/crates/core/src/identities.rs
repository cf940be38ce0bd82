//! Double factorials and the finite sums `R_n`, `T_n`, `S_n(alpha, beta)`.
//!
//! Each sum is evaluated from its defining expression as an exact rational
//! and, where one exists, compared against its closed form. The reductions
//! at `n = p` are what make the leading coefficient of `g^p - z` computable.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::field::Prime;
use crate::rational::{padic_valuation, Rational, Valuation};

/// `n!! = n (n-2) (n-4) ...`, with `0!! = 1!! = 1`.
pub fn double_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k >= 2 {
        acc *= k;
        k -= 2;
    }
    acc
}

fn df(n: u64) -> Rational {
    Rational::from_int(double_factorial(n))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// `R_n = (2n-1)!! * sum_{r=1}^{n} prod_{j=r+1}^{n} 2j/(2j-1)`.
pub fn r_sum(n: u64) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    // walk r downward so each product extends the previous one
    let mut prod = Rational::one();
    let mut sum = Rational::zero();
    for r in (1..=n).rev() {
        sum = sum + prod.clone();
        let j = r as i64;
        prod = prod * frac(2 * j, 2 * j - 1);
    }
    df(2 * n - 1) * sum
}

/// `(2n+1)!! - (2n)!!`.
pub fn r_closed(n: u64) -> BigInt {
    double_factorial(2 * n + 1) - double_factorial(2 * n)
}

/// `T_n = (2n+1)!! * sum_{j=1}^{n} (2j)!!/(2j+1)!!`.
pub fn t_sum(n: u64) -> Rational {
    let mut ratio = Rational::one();
    let mut sum = Rational::zero();
    for j in 1..=n as i64 {
        ratio = ratio * frac(2 * j, 2 * j + 1);
        sum = sum + ratio.clone();
    }
    df(2 * n + 1) * sum
}

/// `(2n+2)!! - 2 (2n+1)!!`.
pub fn t_closed(n: u64) -> BigInt {
    double_factorial(2 * n + 2) - 2 * double_factorial(2 * n + 1)
}

/// `S_n(alpha, beta) = (2n+1)!! * sum_{j=1}^{n} (alpha j + beta)/(2j+1)`.
pub fn s_sum_n(n: u64, alpha: i64, beta: i64) -> Rational {
    // each (2n+1)!!/(2j+1) is an integer, so the sum never leaves Z
    let prefactor = double_factorial(2 * n + 1);
    let mut sum = BigInt::zero();
    for j in 1..=n as i64 {
        sum += &prefactor / BigInt::from(2 * j + 1) * (alpha * j + beta);
    }
    Rational::from_int(sum)
}

/// `S_p(alpha, beta)` for an odd prime `p`; it lies in `Z_p` and reduces to
/// `alpha/2 - beta`.
pub fn s_sum(p: Prime, alpha: i64, beta: i64) -> Result<Rational> {
    let p = p.require_odd()?;
    Ok(s_sum_n(p.get(), alpha, beta))
}

/// The individual terms `(2n+1)!! (alpha j + beta)/(2j+1)`, `j = 1..=n`.
pub fn s_terms(n: u64, alpha: i64, beta: i64) -> Vec<Rational> {
    let prefactor = df(2 * n + 1);
    (1..=n as i64).map(|j| prefactor.clone() * frac(alpha * j + beta, 2 * j + 1)).collect()
}

/// `(2p+1)!!/p`, whose reduction mod `p` is `-1` by Wilson's theorem.
pub fn wilson_constant(p: Prime) -> Result<Rational> {
    let p = p.require_odd()?;
    Ok(df(2 * p.get() + 1) / Rational::from_int(p.get()))
}

/// One line of the identity report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub range: String,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl IdentityCheck {
    fn from_cases(identity: &str, range: String, results: Vec<Option<String>>) -> Self {
        let cases = results.len();
        let failures: Vec<String> = results.into_iter().flatten().collect();
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        IdentityCheck { identity: identity.into(), range, status, cases, failures }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Independent route for double factorials: `(2k)!! = 2^k k!` and
/// `(2k+1)!! = (2k+1)! / (2^k k!)`.
fn double_factorial_by_factorials(n: u64) -> BigInt {
    let fact = |m: u64| (1..=m).fold(BigInt::one(), |acc, i| acc * i);
    let k = n / 2;
    let even = (BigInt::one() << k) * fact(k);
    if n.is_multiple_of(2) {
        even
    } else {
        fact(n) / even
    }
}

/// Check every identity for `n <= max_n` and every odd prime `p <= max_p`.
pub fn verify_identities(max_n: u64, max_p: u64) -> Vec<IdentityCheck> {
    let ns: Vec<u64> = (1..=max_n).collect();
    let primes = Prime::odd_primes_up_to(max_p);
    let n_range = format!("n = 1..={max_n}");
    let p_range = format!("odd p <= {max_p}");
    let ab_range = format!("odd p <= {max_p}, alpha, beta in -10..=10");
    let mut out = Vec::new();

    out.push(IdentityCheck::from_cases(
        "double factorial recurrence",
        format!("n = 0..={}", 2 * max_n + 2),
        (0..=2 * max_n + 2)
            .into_par_iter()
            .map(|n| {
                let v = double_factorial(n);
                let ok = v == double_factorial_by_factorials(n)
                    && (n >= 2 || v == BigInt::one())
                    && (n < 2 || v == double_factorial(n - 2) * n);
                (!ok).then(|| format!("n = {n}"))
            })
            .collect(),
    ));

    out.push(IdentityCheck::from_cases(
        "R_n = (2n+1)!! - (2n)!!",
        n_range.clone(),
        ns.par_iter().map(|&n| (r_sum(n) != Rational::from_int(r_closed(n))).then(|| format!("n = {n}"))).collect(),
    ));

    out.push(IdentityCheck::from_cases(
        "T_n = (2n+2)!! - 2(2n+1)!!",
        n_range,
        ns.par_iter().map(|&n| (t_sum(n) != Rational::from_int(t_closed(n))).then(|| format!("n = {n}"))).collect(),
    ));

    out.push(IdentityCheck::from_cases(
        "R_p = T_p = 0 mod p",
        p_range.clone(),
        primes
            .par_iter()
            .map(|&p| {
                let r = Rational::from_int(r_closed(p.get())).reduce(p);
                let t = Rational::from_int(t_closed(p.get())).reduce(p);
                let ok = matches!((r, t), (Ok(r), Ok(t)) if r.residue() == 0 && t.residue() == 0);
                (!ok).then(|| format!("p = {p}"))
            })
            .collect(),
    ));

    let pairs: Vec<(Prime, i64, i64)> =
        primes.iter().flat_map(|&p| (-10..=10).flat_map(move |a| (-10..=10).map(move |b| (p, a, b)))).collect();
    out.push(IdentityCheck::from_cases(
        "S_p(alpha, beta) in Z_p and reduces to alpha/2 - beta",
        ab_range,
        pairs
            .par_iter()
            .map(|&(p, a, b)| {
                let s = s_sum(p, a, b).expect("odd prime");
                let expected = p.element(a) / p.element(2) - p.element(b);
                let ok = s.valuation(p).is_nonnegative() && s.reduce(p).ok() == Some(expected);
                (!ok).then(|| format!("p = {p}, alpha = {a}, beta = {b}"))
            })
            .collect(),
    ));

    out.push(IdentityCheck::from_cases(
        "only the j = (p-1)/2 term of S_p has valuation 0",
        p_range.clone(),
        primes
            .par_iter()
            .map(|&p| {
                let n = p.get();
                // alpha = 1, beta = 0 keeps alpha j + beta prime to p
                let bad: Vec<usize> = s_terms(n, 1, 0)
                    .iter()
                    .enumerate()
                    .filter(|(i, t)| {
                        let j = *i as u64 + 1;
                        let v = padic_valuation(t, p);
                        if j == (n - 1) / 2 {
                            v != Valuation::Finite(0)
                        } else {
                            v < Valuation::Finite(1)
                        }
                    })
                    .map(|(i, _)| i + 1)
                    .collect();
                (!bad.is_empty()).then(|| format!("p = {p}, j = {bad:?}"))
            })
            .collect(),
    ));

    out.push(IdentityCheck::from_cases(
        "(2p+1)!!/p = -1 mod p",
        p_range,
        primes
            .par_iter()
            .map(|&p| {
                let c = wilson_constant(p).expect("odd prime");
                let ok = c.valuation(p) == Valuation::Finite(0) && c.reduce(p).ok() == Some(-p.one());
                (!ok).then(|| format!("p = {p}"))
            })
            .collect(),
    ));

    out
}
