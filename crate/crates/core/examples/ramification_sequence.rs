//! Brute-force i_0, i_1, i_2 and the Sen congruence between them.

use ramify::literal::parse_series;
use ramify::ramification::ramification_sequence;
use ramify::series::compose;

fn main() -> ramify::error::Result<()> {
    let (p, f) = parse_series("p=3; -z + z^2", None)?;
    let g = compose(&f, &f)?;
    let report = ramification_sequence(&g, 2, None, g.to_string())?;
    println!("p = {p}, g = {}", report.series);
    for level in &report.levels {
        println!("  i_{} = {}  sen: {:?}", level.n, level.number, level.sen);
    }
    println!("2-ramified pattern: {}", report.two_ramified_pattern);

    let (_, h) = parse_series("p=3; z + z^4", None)?;
    let report = ramification_sequence(&h, 1, None, "z + z^4")?;
    println!("p = 3, g = z + z^4: {:?}", report.numbers());
    Ok(())
}
