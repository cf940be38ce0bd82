//! Classify a few series from their first coefficients.
//!
//! `cargo run --example classify_series -- "p=7; g = z - 2*z^3 + z^4"`

use ramify::criterion::classify_two_ramified;
use ramify::literal::parse_series;

fn main() -> ramify::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["p=7; g = z - 2*z^3 + z^4", "p=11; z - 2*z^3 + z^4", "p=5; z + z^3", "p=3; z + z^3", "p=5; z + z^2"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for src in inputs {
        let (_, g) = parse_series(&src, None)?;
        let c = classify_two_ramified(&g)?;
        println!(
            "{src:<28} value {:<3} {:?} {:?}",
            c.criterion_value.map(|v| v.residue()).unwrap_or(0),
            c.verdict,
            c.reasons
        );
    }
    Ok(())
}
