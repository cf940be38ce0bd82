//! First-order linear difference equations and the triangular system for the
//! three leading coefficients of the iterated differences.
//!
//! For `g = z(1 + x2 z^2 + x3 z^3 + x4 z^4)` the `m`-th difference series
//! starts `A_m z^(2m+1) + B_m z^(2m+2) + C_m z^(2m+3)`, and one composition
//! with `g` maps `(A_m, B_m, C_m)` through a lower-triangular matrix. This
//! module iterates that matrix, evaluates the closed forms, and reduces the
//! result at `m = p`.

use num_bigint::BigInt;

use crate::error::Result;
use crate::field::{FieldElement, Prime};
use crate::identities::double_factorial;
use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;
use crate::ring::Coefficient;

/// `y_(n+1) = multiplier(n) y_n + forcing(n)` with `y_start = initial`.
pub struct DiffEq<'a, V> {
    pub multiplier: Box<dyn Fn(i64) -> V + Send + Sync + 'a>,
    pub forcing: Box<dyn Fn(i64) -> V + Send + Sync + 'a>,
    pub initial: V,
    pub start: i64,
}

impl<'a, V: Coefficient> DiffEq<'a, V> {
    pub fn new(
        multiplier: impl Fn(i64) -> V + Send + Sync + 'a,
        forcing: impl Fn(i64) -> V + Send + Sync + 'a,
        initial: V,
        start: i64,
    ) -> Self {
        DiffEq { multiplier: Box::new(multiplier), forcing: Box::new(forcing), initial, start }
    }

    /// `y_n` by stepping the recurrence forward from `start`.
    pub fn iterate_forward(&self, n: i64) -> Option<V> {
        if n < self.start {
            return None;
        }
        let mut y = self.initial.clone();
        for k in self.start..n {
            y = (self.multiplier)(k).mul_ref(&y).add_ref(&(self.forcing)(k));
        }
        Some(y)
    }
}

/// `y_n` from the product-sum formula
///
/// ```text
/// y_n = [prod_{j=n0}^{n-1} f(j)] y0 + sum_{r=n0}^{n-1} [prod_{j=r+1}^{n-1} f(j)] g(r)
/// ```
///
/// Returns `None` when `n` precedes the start index.
pub fn solve_linear<V: Coefficient>(eq: &DiffEq<'_, V>, n: i64) -> Option<V> {
    if n < eq.start {
        return None;
    }
    let one = eq.initial.one_like();
    let product = |from: i64, to: i64| -> V { (from..to).fold(one.clone(), |acc, j| acc.mul_ref(&(eq.multiplier)(j))) };
    let mut y = product(eq.start, n).mul_ref(&eq.initial);
    for r in eq.start..n {
        y = y.add_ref(&product(r + 1, n).mul_ref(&(eq.forcing)(r)));
    }
    Some(y)
}

/// `(A_m, B_m, C_m)` at level `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcState {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub m: u64,
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_int(n)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn df(n: u64) -> Rational {
    Rational::from_int(double_factorial(n))
}

/// `coef * x2^e2 * x3^e3 * x4^e4`
fn mono(coef: Rational, e2: u32, e3: u32, e4: u32) -> MultiPoly {
    MultiPoly::term(coef, Monomial([e2, e3, e4]))
}

fn konst(n: i64) -> MultiPoly {
    MultiPoly::constant(int(n))
}

fn binomial2(n: i64) -> i64 {
    n * (n - 1) / 2
}

impl AbcState {
    /// `(A_1, B_1, C_1) = (x2, x3, x4)`.
    pub fn initial() -> Self {
        AbcState { a: MultiPoly::x2(), b: MultiPoly::x3(), c: MultiPoly::x4(), m: 1 }
    }
}

/// One application of the lower-triangular matrix.
///
/// The `C` row uses `binom(2m+1, 2) x2^2 + (2m+1) x4` for the coefficient of
/// `A_m`, which is the same polynomial as `(m x2^2 + x4)(2m+1)`.
pub fn abc_step(s: &AbcState) -> AbcState {
    let m = s.m as i64;
    let (x2, x3, x4) = (MultiPoly::x2(), MultiPoly::x3(), MultiPoly::x4());
    let a = x2.scale(&int(2 * m + 1)) * s.a.clone();
    let b = x3.scale(&int(2 * m + 1)) * s.a.clone() + x2.scale(&int(2 * m + 2)) * s.b.clone();
    let a_source = (x2.clone() * x2.clone()).scale(&int(binomial2(2 * m + 1))) + x4.scale(&int(2 * m + 1));
    let c = a_source * s.a.clone() + x3.scale(&int(2 * m + 2)) * s.b.clone() + x2.scale(&int(2 * m + 3)) * s.c.clone();
    AbcState { a, b, c, m: s.m + 1 }
}

/// `(A_m, B_m, C_m)` by `m - 1` matrix steps from the initial condition.
pub fn abc_iterate(m: u64) -> AbcState {
    assert!(m >= 1, "levels start at 1");
    let mut s = AbcState::initial();
    while s.m < m {
        s = abc_step(&s);
    }
    s
}

/// The three parts of `C_m = D_m + E_m + F_m` from their closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefSplit {
    pub d: MultiPoly,
    pub e: MultiPoly,
    pub f: MultiPoly,
    pub m: u64,
}

impl DefSplit {
    pub fn total(&self) -> MultiPoly {
        self.d.clone() + self.e.clone() + self.f.clone()
    }

    /// `(D_1, E_1, F_1) = (0, x4, 0)`.
    pub fn initial() -> Self {
        DefSplit { d: MultiPoly::zero(), e: MultiPoly::x4(), f: MultiPoly::zero(), m: 1 }
    }
}

/// `D_m = x2^(m+1) (2m+1)!! sum_{j<=m} (j-1)/(2j+1)`,
/// `E_m = x2^(m-1) x4 (2m+1)!! sum_{j<=m} 1/(2j+1)`,
/// `F_m = x2^(m-2) x3^2 (2m+1)!! sum_{j<=m} [2j/(2j+1) - (2j)!!/(2j+1)!!]`.
///
/// `m = 1` returns the initial condition, since `F_1` would carry `x2^-1`.
pub fn def_closed(m: u64) -> DefSplit {
    assert!(m >= 1, "levels start at 1");
    if m == 1 {
        return DefSplit::initial();
    }
    let pre = df(2 * m + 1);
    let mut sum_d = Rational::zero();
    let mut sum_e = Rational::zero();
    let mut sum_f = Rational::zero();
    for j in 1..=m as i64 {
        sum_d = sum_d + frac(j - 1, 2 * j + 1);
        sum_e = sum_e + frac(1, 2 * j + 1);
        let ratio = df(2 * j as u64) / df(2 * j as u64 + 1);
        sum_f = sum_f + frac(2 * j, 2 * j + 1) - ratio;
    }
    let m32 = m as u32;
    DefSplit {
        d: mono(pre.clone() * sum_d, m32 + 1, 0, 0),
        e: mono(pre.clone() * sum_e, m32 - 1, 0, 1),
        f: mono(pre * sum_f, m32 - 2, 2, 0),
        m,
    }
}

/// The forcing terms `d(m), e(m), f(m)` of the split recurrences.
pub fn def_forcing(m: u64) -> (MultiPoly, MultiPoly, MultiPoly) {
    let m32 = m as u32;
    let odd = df(2 * m + 1);
    let d = mono(odd.clone() * int(m), m32 + 2, 0, 0);
    let e = mono(odd.clone(), m32, 0, 1);
    let f = if m == 0 {
        MultiPoly::zero()
    } else {
        let r = odd - df(2 * m);
        mono(int(2 * (m + 1)) * r, m32 - 1, 2, 0)
    };
    (d, e, f)
}

/// One step of each split recurrence: `X_(m+1) = x2 (2m+3) X_m + x(m)`.
pub fn def_step(s: &DefSplit) -> DefSplit {
    let mult = MultiPoly::x2().scale(&int(2 * s.m + 3));
    let (d, e, f) = def_forcing(s.m);
    DefSplit {
        d: mult.clone() * s.d.clone() + d,
        e: mult.clone() * s.e.clone() + e,
        f: mult * s.f.clone() + f,
        m: s.m + 1,
    }
}

/// `(A_m, B_m, C_m)` from the closed forms.
pub fn abc_closed(m: u64) -> AbcState {
    assert!(m >= 1, "levels start at 1");
    if m == 1 {
        return AbcState::initial();
    }
    let m32 = m as u32;
    let a = mono(df(2 * m - 1), m32, 0, 0);
    let b = mono(df(2 * m + 1) - df(2 * m), m32 - 1, 1, 0);
    let c = def_closed(m).total();
    AbcState { a, b, c, m }
}

/// `C_p` written through the sums of the identities module:
/// `x2^(p+1) S_p(1,-1) + x2^(p-1) x4 S_p(0,1) + x2^(p-2) x3^2 (S_p(2,0) - T_p)`.
pub fn c_level_via_sums(n: u64) -> MultiPoly {
    use crate::identities::{s_sum_n, t_sum};
    assert!(n >= 2, "x2^(n-2) needs n >= 2");
    let n32 = n as u32;
    mono(s_sum_n(n, 1, -1), n32 + 1, 0, 0)
        + mono(s_sum_n(n, 0, 1), n32 - 1, 0, 1)
        + mono(s_sum_n(n, 2, 0) - t_sum(n), n32 - 2, 2, 0)
}

/// `(A_m, B_m, C_m)` reduced modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedAbc {
    pub a: MultiPoly<FieldElement>,
    pub b: MultiPoly<FieldElement>,
    pub c: MultiPoly<FieldElement>,
}

impl AbcState {
    pub fn reduce(&self, p: Prime) -> Result<ReducedAbc> {
        Ok(ReducedAbc { a: self.a.reduce(p)?, b: self.b.reduce(p)?, c: self.c.reduce(p)? })
    }
}

/// `x2^(p-2) (3/2 x2^3 + x3^2 - x2 x4)` over `F_p`, the reduction of `C_p`.
pub fn c_p_reduction(p: Prime) -> Result<MultiPoly<FieldElement>> {
    let p = p.require_odd()?;
    let e = p.get() as u32 - 2;
    let inner = MultiPoly::from_terms([
        (Monomial([3, 0, 0]), p.element(3) / p.element(2)),
        (Monomial([0, 2, 0]), p.one()),
        (Monomial([1, 0, 1]), -p.one()),
    ]);
    Ok(inner.shift(Monomial([e, 0, 0])))
}

/// The `m = 2` level written out, for display and tests.
pub fn level_two() -> AbcState {
    AbcState {
        a: konst(3) * MultiPoly::x2() * MultiPoly::x2(),
        b: konst(7) * MultiPoly::x2() * MultiPoly::x3(),
        c: MultiPoly::parse("3*x2^3 + 4*x3^2 + 8*x2*x4").expect("valid literal"),
        m: 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{delta_levels, TruncatedSeries};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn solve_linear_examples() {
        let v = MultiPoly::parse("x2 - 1/2*x3").unwrap();
        let z = v.zero_like();
        let o = v.one_like();
        let eq = DiffEq::new(move |_| o.clone(), move |_| z.clone(), v.clone(), 0);
        for n in 0..6 {
            assert_eq!(solve_linear(&eq, n).unwrap(), v);
        }

        let eq = DiffEq::new(|n| MultiPoly::x2().scale(&q(2 * n + 1)), |_| MultiPoly::zero(), MultiPoly::x2(), 1);
        for m in 1..10u64 {
            let expected = mono(df(2 * m - 1), m as u32, 0, 0);
            assert_eq!(solve_linear(&eq, m as i64).unwrap(), expected, "m = {m}");
        }

        let eq = DiffEq::new(|_| q(2), |_| q(1), q(0), 0);
        let steps: Vec<Rational> = (0..=4).map(|n| eq.iterate_forward(n).unwrap()).collect();
        assert_eq!(steps, vec![q(0), q(1), q(3), q(7), q(15)]);
        assert_eq!(solve_linear(&eq, 4).unwrap(), q(15));
        assert!(solve_linear(&eq, -1).is_none());
    }

    #[test]
    fn matrix_row_forms_agree() {
        for m in 0..100i64 {
            assert_eq!(binomial2(2 * m + 1), m * (2 * m + 1));
        }
    }

    #[test]
    fn step_examples() {
        let s2 = abc_step(&AbcState::initial());
        assert_eq!(s2, level_two());
        assert_eq!(s2.c.to_string(), "3*x2^3 + 8*x2*x4 + 4*x3^2");
        for m in 1..12u64 {
            let s = abc_iterate(m);
            assert_eq!(s.a, mono(df(2 * m - 1), m as u32, 0, 0));
            assert_eq!(s.b, mono(df(2 * m + 1) - df(2 * m), m as u32 - 1, 1, 0));
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(abc_closed(1), AbcState::initial());
        let c2 = def_closed(2);
        assert_eq!(c2.d.to_string(), "3*x2^3");
        assert_eq!(c2.e.to_string(), "8*x2*x4");
        assert_eq!(c2.f.to_string(), "4*x3^2");
        assert_eq!(abc_closed(2), level_two());

        let r5 = abc_closed(5).reduce(p(5)).unwrap();
        assert!(r5.a.is_zero());
        assert!(r5.b.is_zero());
        assert_eq!(r5.c.to_string(), "4*x2^6 + 4*x2^4*x4 + x2^3*x3^2");
        assert_eq!(r5.c, c_p_reduction(p(5)).unwrap());
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(c_p_reduction(p(3)).unwrap().to_string(), "2*x2^2*x4 + x2*x3^2");
        let c7 = c_p_reduction(p(7)).unwrap();
        let p7 = p(7);
        let vals = crate::poly::VarValues::new(p7.one(), p7.zero(), p7.zero());
        assert_eq!(c7.evaluate(&vals, p7.zero()).residue(), 5);
        assert!(c_p_reduction(p(2)).is_err());
    }

    #[test]
    fn split_initial_matches_closed_form_sums() {
        // the closed-form sums also give (0, x4, 0) at m = 1 once x2^-1 * 0 is dropped
        let sum_f: Rational = frac(2, 3) - df(2) / df(3);
        assert!(sum_f.is_zero());
        assert_eq!(df(3) * frac(1, 3), q(1));
    }

    #[test]
    fn split_recurrences_hold() {
        let mut s = DefSplit::initial();
        for m in 1..=25u64 {
            assert_eq!(s, def_closed(m), "m = {m}");
            let next = def_step(&s);
            // the three pieces add up to the C recurrence
            let c_rec = MultiPoly::x2().scale(&q(2 * m as i64 + 3)) * s.total() + {
                let (d, e, f) = def_forcing(m);
                d + e + f
            };
            assert_eq!(next.total(), c_rec);
            s = next;
        }
    }

    #[test]
    fn c_via_sums() {
        for n in 2..15 {
            assert_eq!(abc_closed(n).c, c_level_via_sums(n), "n = {n}");
        }
    }

    #[test]
    fn iteration_closed_and_composition_agree() {
        let one = MultiPoly::constant(Rational::one());
        let z = MultiPoly::zero();
        let g = TruncatedSeries::polynomial(vec![z.clone(), one, z, MultiPoly::x2(), MultiPoly::x3(), MultiPoly::x4()])
            .truncate(15);
        let levels = delta_levels(&g, 6).unwrap();
        for (i, d) in levels.iter().enumerate() {
            let m = i as u64 + 1;
            let k = 2 * m as usize + 1;
            let s = abc_closed(m);
            assert_eq!(d.order(), crate::series::SeriesOrder::Finite(k));
            assert_eq!(d.coeff(k).unwrap(), s.a, "A at m = {m}");
            assert_eq!(d.coeff(k + 1).unwrap(), s.b, "B at m = {m}");
            assert_eq!(d.coeff(k + 2).unwrap(), s.c, "C at m = {m}");
            assert_eq!(abc_iterate(m), s);
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..9, 1i64..5).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn formula_matches_forward_iteration_over_q(
            fs in prop::collection::vec(small_rational(), 12),
            gs in prop::collection::vec(small_rational(), 12),
            y0 in small_rational(),
            n0 in 0i64..4,
            len in 0i64..8,
        ) {
            let (fa, ga) = (fs.clone(), gs.clone());
            let eq = DiffEq::new(
                move |j| fa[j as usize].clone(),
                move |j| ga[j as usize].clone(),
                y0,
                n0,
            );
            prop_assert_eq!(solve_linear(&eq, n0 + len), eq.iterate_forward(n0 + len));
        }

        #[test]
        fn formula_matches_forward_iteration_over_polys(
            cs in prop::collection::vec((-5i64..5, 0u32..2, 0u32..2, 0u32..2), 6),
            n in 1i64..6,
        ) {
            let poly = |i: usize| mono(q(cs[i].0), cs[i].1, cs[i].2, cs[i].3);
            let (f1, f2, g1, g2, y0) = (poly(0), poly(1), poly(2), poly(3), poly(4) + poly(5));
            let eq = DiffEq::new(
                move |j| f1.clone() + f2.scale(&q(j)),
                move |j| g1.scale(&q(j * j)) - g2.clone(),
                y0,
                0,
            );
            prop_assert_eq!(solve_linear(&eq, n), eq.iterate_forward(n));
        }
    }

    #[test]
    fn b_closed_form_is_r_times_monomial() {
        for m in 1..20u64 {
            let r = crate::identities::r_sum(m);
            let b = abc_closed(m).b;
            assert_eq!(b, mono(r, m as u32 - 1, 1, 0));
            assert_eq!(crate::identities::r_closed(m), double_factorial(2 * m + 1) - double_factorial(2 * m));
        }
    }
}
