//! End-to-end acceptance checks. Every comparison is exact.

mod common;

use std::time::Instant;

use ramify::census::{census, CensusOptions};
use ramify::criterion::{
    check_leading_term, classify_involution_square, classify_two_ramified, expand_involution_square, Verdict,
};
use ramify::error::Error;
use ramify::field::{FieldElement, Prime};
use ramify::identities::{r_closed, r_sum, s_sum, t_closed, t_sum, verify_identities, wilson_constant};
use ramify::poly::MultiPoly;
use ramify::ramification::{laubie_saine_extrapolate, lower_ramification, two_ramified_value, RamificationNumber};
use ramify::rational::{reduce_mod_p, Rational, Valuation};
use ramify::recurrence::{abc_closed, abc_iterate, c_p_reduction, def_closed};
use ramify::series::{compose, delta_levels, TruncatedSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn series(p: Prime, coeffs: &[u64]) -> TruncatedSeries<FieldElement> {
    TruncatedSeries::polynomial(coeffs.iter().map(|&c| FieldElement::new(c, p)).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// f = -z + z^2: i_1(f o f) = 2(1 + p) exactly when p != 11.
fn example_reproduction() -> Outcome {
    let primes = Prime::odd_primes_up_to(50);
    for &p in &primes {
        let q = p.get();
        let f = series(p, &[0, q - 1, 1]);
        let g = compose(&f, &f).map_err(err)?;
        let i1 = lower_ramification(&g, 1, None).map_err(err)?;
        let hit = i1 == RamificationNumber::Exact(two_ramified_value(q, 1));
        ensure(hit == (q != 11), || format!("p = {q}: i1 = {i1}"))?;

        let raw: Vec<u64> = (0..=5).map(|k| g.coeff(k).unwrap().residue()).collect();
        let oracle = common::ramification(&raw, q, 1, 2 * q as usize + 4);
        ensure(oracle == i1.exact(), || format!("p = {q}: reference i1 = {oracle:?}, library {i1}"))?;

        let theorem = classify_two_ramified(&g).map_err(err)?;
        let corollary = classify_involution_square(&f).map_err(err)?;
        ensure(theorem.criterion_value == Some(p.element(-11)), || format!("p = {q}: theorem value"))?;
        ensure(corollary.criterion_value == Some(p.element(11)), || format!("p = {q}: corollary value"))?;
        ensure(theorem.is_two_ramified() == hit && corollary.is_two_ramified() == hit, || {
            format!("p = {q}: classifiers disagree with brute force")
        })?;
    }
    Ok(format!("{} primes, exception only at 11", primes.len()))
}

/// Coefficient of z^(2p+3) in g^p - z against a2^(p-2) (3/2 a2^3 + a3^2 - a2 a4).
fn leading_term() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut cases = 0;
    for q in [3u64, 5, 7, 11, 13] {
        let p = prime(q);
        for _ in 0..200 {
            let (a2, a3, a4) = (rng.gen_range(1..q), rng.gen_range(0..q), rng.gen_range(0..q));
            let g = series(p, &[0, 1, 0, a2, a3, a4]);
            let check = check_leading_term(&g).map_err(err)?;
            let expected = common::pow_mod(a2, q - 2, q) * common::criterion(a2, a3, a4, q) % q;
            let k = 2 * q as usize + 3;
            let direct = common::iterate_power(&[0, 1, 0, a2, a3, a4], q, 1, k);
            ensure(direct[2..k].iter().all(|&c| c == 0) && direct[k] == expected, || {
                format!("p = {q}, a = ({a2}, {a3}, {a4}): reference iterate")
            })?;
            ensure(check.agrees && check.computed.residue() == expected, || {
                format!("p = {q}, a = ({a2}, {a3}, {a4}): {check:?}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} random series"))
}

/// Exhaustive census: the closed-form verdict matches brute-force i_1.
fn census_equivalence() -> Outcome {
    let mut rows_checked = 0;
    for q in [3u64, 5] {
        let mut opts = CensusOptions::new(prime(q));
        opts.second_level = q == 3;
        let rows = census(&opts).map_err(err)?;
        ensure(rows.len() as u64 == (q - 1) * q * q, || format!("p = {q}: row count"))?;
        for r in &rows {
            ensure(r.agreement, || format!("p = {q}: disagreement at {r:?}"))?;
            let oracle = common::ramification(&[0, 1, r.a1, r.a2, r.a3, r.a4], q, 1, 2 * q as usize + 4);
            let brute = oracle == Some(two_ramified_value(q, 1));
            ensure(brute == (r.verdict == Verdict::TwoRamified), || format!("p = {q}: reference at {r:?}"))?;
            if q == 3 && r.verdict == Verdict::TwoRamified {
                ensure(r.i2 == Some(RamificationNumber::Exact(two_ramified_value(3, 2))), || {
                    format!("p = 3: level two at {r:?}")
                })?;
            }
        }
        rows_checked += rows.len();
    }
    Ok(format!("{rows_checked} rows, level two confirmed at p = 3"))
}

fn identities() -> Outcome {
    for n in 1..=200 {
        ensure(r_sum(n) == Rational::from(r_closed(n)), || format!("R at n = {n}"))?;
        ensure(t_sum(n) == Rational::from(t_closed(n)), || format!("T at n = {n}"))?;
    }
    let primes = Prime::odd_primes_up_to(97);
    for &p in &primes {
        let q = p.get();
        ensure(r_sum(q).valuation(p) >= Valuation::Finite(1), || format!("R_p at p = {q}"))?;
        ensure(t_sum(q).valuation(p) >= Valuation::Finite(1), || format!("T_p at p = {q}"))?;
        for alpha in -10..=10 {
            for beta in -10..=10 {
                let s = s_sum(p, alpha, beta).map_err(err)?;
                let expected = p.element(alpha) / p.element(2) - p.element(beta);
                ensure(reduce_mod_p(&s, p).map_err(err)? == expected, || format!("S at p = {q}, ({alpha}, {beta})"))?;
            }
        }
        let w = wilson_constant(p).map_err(err)?;
        ensure(reduce_mod_p(&w, p).map_err(err)? == p.element(-1), || format!("Wilson at p = {q}"))?;
    }
    let report = verify_identities(200, 97);
    ensure(report.iter().all(|c| c.passed()), || format!("{report:?}"))?;
    Ok(format!("n <= 200, {} primes, {} report entries", primes.len(), report.len()))
}

fn symbolic_agreement() -> Outcome {
    for m in 1..=25 {
        let closed = abc_closed(m);
        ensure(abc_iterate(m) == closed, || format!("iteration vs closed form at m = {m}"))?;
        ensure(def_closed(m).total() == closed.c, || format!("D + E + F at m = {m}"))?;
    }
    let zero = MultiPoly::zero();
    let one = MultiPoly::constant(Rational::one());
    let g =
        TruncatedSeries::polynomial(vec![zero.clone(), one, zero, MultiPoly::x2(), MultiPoly::x3(), MultiPoly::x4()])
            .truncate(15);
    for (i, d) in delta_levels(&g, 6).map_err(err)?.iter().enumerate() {
        let m = i as u64 + 1;
        let k = 2 * m as usize + 1;
        let s = abc_closed(m);
        ensure((1..k).all(|j| d.coeff(j).unwrap().is_zero()), || format!("low terms at m = {m}"))?;
        ensure(d.coeff(k).unwrap() == s.a && d.coeff(k + 1).unwrap() == s.b && d.coeff(k + 2).unwrap() == s.c, || {
            format!("composition at m = {m}")
        })?;
    }
    for q in [3u64, 5, 7, 11, 13] {
        let p = prime(q);
        let r = abc_closed(q).reduce(p).map_err(err)?;
        let inner = MultiPoly::parse("3/2*x2^3 + x3^2 - x2*x4").map_err(err)?;
        let shift = MultiPoly::parse(&format!("x2^{}", q - 2)).map_err(err)?;
        let target = (shift * inner).reduce(p).map_err(err)?;
        ensure(r.a.is_zero() && r.b.is_zero(), || format!("A_p, B_p at p = {q}"))?;
        ensure(r.c == target && c_p_reduction(p).map_err(err)? == target, || format!("C_p at p = {q}"))?;
    }
    Ok("m <= 25 (composition m <= 6), reductions at 5 primes".into())
}

fn random_tangent(rng: &mut ChaCha8Rng, q: u64, degree: usize) -> Vec<u64> {
    let mut c = vec![0, 1];
    c.extend((2..=degree).map(|_| rng.gen_range(0..q)));
    c
}

fn sen_congruence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut exact = 0;
    for q in [3u64, 5, 7] {
        let p = prime(q);
        for _ in 0..200 {
            let c = random_tangent(&mut rng, q, 8);
            let g = series(p, &c);
            if g.degree_bound() == 1 {
                continue;
            }
            let i0 = lower_ramification(&g, 0, Some(8)).map_err(err)?;
            let cap = match i0 {
                RamificationNumber::Exact(a) => (q as usize + 1) * (a as usize + 2),
                _ => continue,
            };
            let i1 = lower_ramification(&g, 1, Some(cap)).map_err(err)?;
            if let (Some(a), Some(b)) = (i0.exact(), i1.exact()) {
                ensure(a % q == b % q, || format!("p = {q}, {c:?}: i0 = {a}, i1 = {b}"))?;
                exact += 1;
            }
        }
    }
    ensure(exact >= 400, || format!("only {exact} exact pairs"))?;

    let q = 3;
    let p = prime(q);
    for case in 0..50 {
        let i0 = if case % 2 == 0 { 3 } else { 6 };
        let mut c = vec![0u64; 14];
        c[1] = 1;
        c[i0 + 1] = rng.gen_range(1..q);
        for x in c.iter_mut().skip(i0 + 2) {
            *x = rng.gen_range(0..q);
        }
        let g = series(p, &c);
        let cap = 3 * i0 * 2 + 4;
        let n0 = lower_ramification(&g, 0, Some(13)).map_err(err)?;
        let n1 = lower_ramification(&g, 1, Some(cap)).map_err(err)?;
        ensure(n0 == RamificationNumber::Exact(i0 as u64), || format!("{c:?}: i0 = {n0}"))?;
        ensure(n1 == RamificationNumber::Exact(3 * i0 as u64), || format!("{c:?}: i1 = {n1}"))?;
        ensure(common::ramification(&c, q, 1, cap) == Some(3 * i0 as u64), || format!("{c:?}: reference"))?;
    }
    Ok(format!("{exact} exact pairs, 50 cases with p | i0"))
}

fn extrapolation() -> Outcome {
    let mut checked = 0;
    for (q, with_a1) in [(3u64, true), (5, false)] {
        let mut opts = CensusOptions::new(prime(q));
        opts.with_a1 = with_a1;
        opts.second_level = true;
        for r in census(&opts).map_err(err)? {
            let (Some(i0), Some(i1), Some(RamificationNumber::Exact(i2))) =
                (r.numbers[0].exact(), r.numbers[1].exact(), r.i2)
            else {
                continue;
            };
            match laubie_saine_extrapolate(i0, i1, prime(q), 2) {
                Ok(predicted) => {
                    ensure(predicted == i2, || format!("p = {q}, {r:?}: predicted {predicted}, found {i2}"))?;
                    checked += 1;
                }
                Err(Error::HypothesisViolated(_)) => {}
                Err(e) => return Err(err(e)),
            }
        }
    }
    ensure(checked > 0, || "no row met the hypotheses".into())?;
    Ok(format!("{checked} rows with exact i0, i1, i2"))
}

fn involution_square() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut two = 0;
    for q in [3u64, 5, 7, 11] {
        let p = prime(q);
        for _ in 0..500 {
            let mut c = vec![0, q - 1];
            c.extend((2..=7).map(|_| rng.gen_range(0..q)));
            let f = series(p, &c);
            let sq = compose(&f, &f).map_err(err)?;
            ensure(expand_involution_square(&f).map_err(err)? == sq.truncate(5), || {
                format!("p = {q}, {c:?}: expansion")
            })?;
            let verdict = classify_involution_square(&f).map_err(err)?.verdict;
            let i1 = lower_ramification(&sq, 1, None).map_err(err)?;
            let brute = i1.equals(two_ramified_value(q, 1)).ok_or_else(|| format!("p = {q}, {c:?}: undecided {i1}"))?;
            ensure(brute == (verdict == Verdict::TwoRamified), || format!("p = {q}, {c:?}: {verdict:?} vs i1 = {i1}"))?;
            ensure(classify_two_ramified(&sq).map_err(err)?.verdict == verdict, || format!("p = {q}, {c:?}: direct"))?;
            two += usize::from(brute);
        }
    }
    Ok(format!("2000 random f, {two} squares two-ramified"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 example reproduction", example_reproduction),
        ("2 leading term", leading_term),
        ("3 census equivalence", census_equivalence),
        ("4 identities", identities),
        ("5 symbolic agreement", symbolic_agreement),
        ("6 sen congruence", sen_congruence),
        ("7 extrapolation", extrapolation),
        ("8 involution square", involution_square),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
