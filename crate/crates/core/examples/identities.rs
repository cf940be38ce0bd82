//! Double-factorial identities, summarized.

use ramify::identities::{r_closed, r_sum, verify_identities};

fn main() {
    for n in 1..=5 {
        println!("R_{n} = {} = {}", r_sum(n), r_closed(n));
    }
    for check in verify_identities(200, 97) {
        println!("{:?}  {:<55} {} ({} cases)", check.status, check.identity, check.range, check.cases);
    }
}
