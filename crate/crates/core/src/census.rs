//! Exhaustive sweep of `g(z) = z + a1 z^2 + a2 z^3 + a3 z^4 + a4 z^5` over
//! `F_p`, comparing the closed-form verdict with brute-force `i_1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::criterion::{classify_two_ramified, Verdict};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::ramification::{lower_ramification, two_ramified_value, working_precision, RamificationNumber};
use crate::series::TruncatedSeries;

pub const DEFAULT_MAX_ROWS: usize = 100_000;

pub const CSV_HEADER: &str = "p,a1,a2,a3,a4,i0,i0_exact,i1,i1_exact,verdict,criterion_value,agreement";

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub p: Prime,
    /// Also sweep `a1` over `F_p`; otherwise `a1 = 0`.
    pub with_a1: bool,
    pub max_rows: usize,
    /// Also compute `i_2` (needs a larger working precision).
    pub second_level: bool,
}

impl CensusOptions {
    pub fn new(p: Prime) -> Self {
        CensusOptions { p, with_a1: false, max_rows: DEFAULT_MAX_ROWS, second_level: false }
    }

    /// Number of rows the sweep would produce.
    pub fn row_count(&self) -> usize {
        let q = self.p.get() as usize;
        let a1 = if self.with_a1 { q } else { 1 };
        a1.saturating_mul(q - 1).saturating_mul(q).saturating_mul(q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub p: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub a4: u64,
    pub i0: Option<u64>,
    pub i0_exact: bool,
    pub i1: Option<u64>,
    pub i1_exact: bool,
    /// Present when the sweep asked for the second level.
    #[serde(skip)]
    pub i2: Option<RamificationNumber>,
    pub verdict: Verdict,
    pub criterion_value: u64,
    pub agreement: bool,
    #[serde(skip)]
    pub numbers: [RamificationNumber; 2],
}

impl CensusRow {
    pub fn series(&self) -> TruncatedSeries<FieldElement> {
        let p = Prime::new(self.p).expect("census rows carry a prime");
        row_series(p, [self.a1, self.a2, self.a3, self.a4])
    }

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        let verdict = match self.verdict {
            Verdict::TwoRamified => "two-ramified",
            Verdict::NotTwoRamified => "not-two-ramified",
            Verdict::Rejected => "rejected",
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.a1,
            self.a2,
            self.a3,
            self.a4,
            opt(self.i0),
            self.i0_exact,
            opt(self.i1),
            self.i1_exact,
            verdict,
            self.criterion_value,
            self.agreement
        )
    }
}

fn row_series(p: Prime, a: [u64; 4]) -> TruncatedSeries<FieldElement> {
    let mut coeffs = vec![p.zero(), p.one()];
    coeffs.extend(a.iter().map(|&x| FieldElement::new(x, p)));
    TruncatedSeries::polynomial(coeffs)
}

fn evaluate(opts: &CensusOptions, a: [u64; 4]) -> Result<CensusRow> {
    let p = opts.p;
    let g = row_series(p, a);
    let class = classify_two_ramified(&g)?;
    let levels = if opts.second_level { 2 } else { 1 };
    let precision = working_precision(p, levels);
    let i0 = lower_ramification(&g, 0, Some(precision))?;
    let i1 = lower_ramification(&g, 1, Some(precision))?;
    let i2 = if opts.second_level { Some(lower_ramification(&g, 2, Some(precision))?) } else { None };
    let agreement = i1.equals(two_ramified_value(p.get(), 1)) == Some(class.is_two_ramified());
    Ok(CensusRow {
        p: p.get(),
        a1: a[0],
        a2: a[1],
        a3: a[2],
        a4: a[3],
        i0: i0.value(),
        i0_exact: i0.is_exact(),
        i1: i1.value(),
        i1_exact: i1.is_exact(),
        i2,
        verdict: class.verdict,
        criterion_value: class.criterion_value.map_or(0, |c| c.residue()),
        agreement,
        numbers: [i0, i1],
    })
}

/// All rows, in lexicographic order of `(a1, a2, a3, a4)`, with `a2 != 0`.
pub fn census(opts: &CensusOptions) -> Result<Vec<CensusRow>> {
    let p = opts.p.require_odd()?;
    let rows = opts.row_count();
    if rows > opts.max_rows {
        return Err(Error::SweepTooLarge { rows, cap: opts.max_rows });
    }
    let q = p.get();
    let a1_range = if opts.with_a1 { 0..q } else { 0..1 };
    let mut keys = Vec::with_capacity(rows);
    for a1 in a1_range {
        for a2 in 1..q {
            for a3 in 0..q {
                for a4 in 0..q {
                    keys.push([a1, a2, a3, a4]);
                }
            }
        }
    }
    // `collect` on an indexed parallel iterator keeps the input order.
    keys.into_par_iter().map(|a| evaluate(opts, a)).collect()
}

pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv());
        out.push('\n');
    }
    out
}
