//! Predict i_2 from i_0 and i_1, then check it by iterating 9 times.

use ramify::error::Error;
use ramify::literal::parse_series;
use ramify::ramification::{laubie_saine_extrapolate, lower_ramification};

fn main() -> ramify::error::Result<()> {
    for src in ["z + z^2", "z + z^3 + z^5", "z + 2*z^3 + z^4", "z + z^4", "z + z^3"] {
        let (p, g) = parse_series(src, Some(ramify::field::Prime::new(3)?))?;
        let i: Vec<_> = (0..=2).map(|n| lower_ramification(&g, n, Some(60))).collect::<Result<_, _>>()?;
        let (Some(i0), Some(i1)) = (i[0].exact(), i[1].exact()) else {
            println!("{src:<18} i = {i:?}: not exact");
            continue;
        };
        match laubie_saine_extrapolate(i0, i1, p, 2) {
            Ok(pred) => println!("{src:<18} i0 = {i0}, i1 = {i1}: predicted i2 = {pred}, computed {}", i[2]),
            Err(Error::HypothesisViolated(h)) => println!("{src:<18} i0 = {i0}, i1 = {i1}: {h}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
