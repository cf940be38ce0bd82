use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ramify::census::{census, to_csv, CensusOptions, DEFAULT_MAX_ROWS};
use ramify::criterion::{
    check_leading_term, classify_involution_square, classify_two_ramified, random_self_test, Verdict,
};
use ramify::error::{Error, Result};
use ramify::field::Prime;
use ramify::identities::verify_identities;
use ramify::literal::parse_series;
use ramify::ramification::ramification_sequence;
use ramify::recurrence::abc_closed;
use ramify::series::compose;

/// Lower ramification numbers of power series over prime fields.
#[derive(Parser)]
#[command(name = "ramify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide 2-ramification from the leading coefficients.
    Classify {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        /// The series has linear coefficient -1; classify its square.
        #[arg(long)]
        involution: bool,
    },
    /// Brute-force lower ramification numbers i_0 .. i_levels.
    Ramify {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        /// Analyse the series composed with itself.
        #[arg(long)]
        square: bool,
        #[arg(long, default_value_t = 1)]
        levels: u32,
        /// Working precision; required when `--levels` exceeds 2.
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Predict the leading term of g^p(z) - z and check it by iteration.
    Predict {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "random")]
        series: Option<String>,
        /// Check this many random series instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print A_m, B_m, C_m.
    Symbolic {
        #[arg(long)]
        level: u64,
        /// Reduce the coefficients modulo this prime.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Check the combinatorial identities and print a JSON report.
    VerifyIdentities {
        #[arg(long, default_value_t = 200)]
        max_n: u64,
        #[arg(long, default_value_t = 97)]
        max_p: u64,
    },
    /// Sweep every z + a1 z^2 + a2 z^3 + a3 z^4 + a4 z^5 with a2 != 0.
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        with_a1: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
        max_rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

const SUCCESS: u8 = 0;
const NEGATIVE: u8 = 1;
const INVALID: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INVALID)
        }
    }
}

fn prime(p: Option<u64>) -> Result<Option<Prime>> {
    p.map(Prime::new).transpose()
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::TwoRamified => SUCCESS,
        Verdict::NotTwoRamified => NEGATIVE,
        Verdict::Rejected => INVALID,
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Classify { p, series, involution } => {
            let (_, g) = parse_series(&series, prime(p)?)?;
            let c = if involution { classify_involution_square(&g)? } else { classify_two_ramified(&g)? };
            println!("{}", json(&c));
            Ok(verdict_code(c.verdict))
        }
        Command::Ramify { p, series, square, levels, precision } => {
            if levels > 2 && precision.is_none() {
                return Err(Error::Precondition("--precision is required above two levels".into()));
            }
            let (_, mut g) = parse_series(&series, prime(p)?)?;
            if square {
                g = compose(&g, &g)?;
            }
            let report = ramification_sequence(&g, levels, precision, g.to_string())?;
            println!("{}", json(&report));
            Ok(SUCCESS)
        }
        Command::Predict { p, series, random, seed } => {
            if let Some(cases) = random {
                let p = prime(p)?.ok_or_else(|| Error::Precondition("--random needs --p".into()))?;
                let t = random_self_test(p, cases, seed)?;
                println!("{}", json(&t));
                return Ok(if t.passed() { SUCCESS } else { NEGATIVE });
            }
            let series = series.expect("clap requires --series without --random");
            let (_, g) = parse_series(&series, prime(p)?)?;
            let check = check_leading_term(&g)?;
            println!("{}", json(&check));
            Ok(if check.agrees { SUCCESS } else { NEGATIVE })
        }
        Command::Symbolic { level, modulus } => {
            if level == 0 {
                return Err(Error::Precondition("--level must be at least 1".into()));
            }
            let s = abc_closed(level);
            match prime(modulus)? {
                Some(p) => {
                    let r = s.reduce(p)?;
                    print_levels(level, &r.a, &r.b, &r.c);
                }
                None => print_levels(level, &s.a, &s.b, &s.c),
            }
            Ok(SUCCESS)
        }
        Command::VerifyIdentities { max_n, max_p } => {
            let checks = verify_identities(max_n, max_p);
            println!("{}", json(&checks));
            Ok(if checks.iter().all(|c| c.passed()) { SUCCESS } else { NEGATIVE })
        }
        Command::Census { p, with_a1, max_rows, format } => {
            let opts = CensusOptions { p: Prime::new(p)?, with_a1, max_rows, second_level: false };
            let rows = census(&opts)?;
            match format {
                Format::Csv => print!("{}", to_csv(&rows)),
                Format::Json => println!("{}", json(&rows)),
            }
            Ok(if rows.iter().all(|r| r.agreement) { SUCCESS } else { NEGATIVE })
        }
    }
}

fn print_levels(m: u64, a: &impl std::fmt::Display, b: &impl std::fmt::Display, c: &impl std::fmt::Display) {
    println!("A_{m} = {a}");
    println!("B_{m} = {b}");
    println!("C_{m} = {c}");
}
