//! Every z + a2 z^3 + a3 z^4 + a4 z^5 over F_5, closed form against brute force.

use ramify::census::{census, to_csv, CensusOptions};
use ramify::criterion::Verdict;
use ramify::field::Prime;

fn main() -> ramify::error::Result<()> {
    let rows = census(&CensusOptions::new(Prime::new(5)?))?;
    let two = rows.iter().filter(|r| r.verdict == Verdict::TwoRamified).count();
    let agree = rows.iter().filter(|r| r.agreement).count();
    print!("{}", to_csv(&rows[..6]));
    println!("...\n{} rows, {two} two-ramified, {agree} in agreement", rows.len());
    Ok(())
}
