//! f(z) = -z + z^2: its square is 2-ramified for every odd prime except 11.

use ramify::criterion::classify_involution_square;
use ramify::field::Prime;
use ramify::literal::parse_series;
use ramify::ramification::{lower_ramification, two_ramified_value};
use ramify::series::compose;

fn main() -> ramify::error::Result<()> {
    println!("{:>3}  {:>10}  {:>5}  {:>8}", "p", "criterion", "i1", "2(1+p)");
    for p in Prime::odd_primes_up_to(30) {
        let (_, f) = parse_series("-z + z^2", Some(p))?;
        let class = classify_involution_square(&f)?;
        let i1 = lower_ramification(&compose(&f, &f)?, 1, None)?;
        println!(
            "{:>3}  {:>10}  {:>5}  {:>8}  {:?}",
            p.get(),
            class.criterion_value.map(|c| c.to_string()).unwrap_or_default(),
            i1.to_string(),
            two_ramified_value(p.get(), 1),
            class.verdict
        );
    }
    Ok(())
}
