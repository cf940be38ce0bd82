//! A_m, B_m, C_m over Q and their reductions at m = p.

use ramify::field::Prime;
use ramify::recurrence::{abc_closed, abc_iterate, c_p_reduction};

fn main() -> ramify::error::Result<()> {
    for m in 1..=4 {
        let s = abc_iterate(m);
        assert_eq!(s, abc_closed(m));
        println!("m = {m}\n  A = {}\n  B = {}\n  C = {}", s.a, s.b, s.c);
    }
    for p in [3u64, 5, 7] {
        let q = Prime::new(p)?;
        let r = abc_closed(p).reduce(q)?;
        println!("mod {p}: A = {}, B = {}, C = {}", r.a, r.b, r.c);
        assert_eq!(r.c, c_p_reduction(q)?);
    }
    Ok(())
}
