//! The first nonzero term of g^p(z) - z, predicted and computed.

use ramify::criterion::{check_leading_term, random_self_test};
use ramify::field::Prime;
use ramify::literal::parse_series;

fn main() -> ramify::error::Result<()> {
    for src in ["p=5; z + z^3", "p=3; z + z^3", "p=7; z - 2*z^3 + z^4"] {
        let (_, g) = parse_series(src, None)?;
        let c = check_leading_term(&g)?;
        println!(
            "{src:<22} z^{}: predicted {}, computed {}, lower terms vanish: {}",
            c.predicted.exponent, c.predicted.coefficient, c.computed, c.lower_terms_vanish
        );
    }
    for p in [3, 5, 7, 11, 13] {
        let t = random_self_test(Prime::new(p)?, 100, 1)?;
        println!("p = {p:>2}: {} random series, {} mismatches", t.cases, t.mismatches.len());
    }
    Ok(())
}
