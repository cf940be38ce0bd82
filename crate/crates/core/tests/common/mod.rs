//! Plain `u64` reference arithmetic for cross-checking the library.
#![allow(dead_code)]

/// Composition `f(g(z))` truncated after degree `n`, coefficients mod `p`.
pub fn compose(f: &[u64], g: &[u64], p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    let mut power = vec![0u64; n + 1];
    power[0] = 1;
    for (k, &c) in f.iter().enumerate().take(n + 1) {
        if k > 0 {
            let mut next = vec![0u64; n + 1];
            for (i, &a) in power.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in g.iter().enumerate().take(n + 1 - i) {
                    next[i + j] = (next[i + j] + a * b) % p;
                }
            }
            power = next;
        }
        if c != 0 {
            for (o, &a) in out.iter_mut().zip(&power) {
                *o = (*o + c * a) % p;
            }
        }
    }
    out
}

/// `g^(p^n)`, truncated after degree `cap`.
pub fn iterate_power(g: &[u64], p: u64, n: u32, cap: usize) -> Vec<u64> {
    let mut cur: Vec<u64> = (0..=cap).map(|k| g.get(k).copied().unwrap_or(0) % p).collect();
    for _ in 0..n {
        let base = cur.clone();
        for _ in 1..p {
            cur = compose(&cur, &base, p, cap);
        }
    }
    cur
}

/// `i_n(g)` if it is visible below degree `cap`.
pub fn ramification(g: &[u64], p: u64, n: u32, cap: usize) -> Option<u64> {
    let it = iterate_power(g, p, n, cap);
    (0..=cap).find(|&k| it[k] != if k == 1 { 1 } else { 0 }).map(|k| k as u64 - 1)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `x / y mod p` by Fermat.
pub fn div_mod(x: u64, y: u64, p: u64) -> u64 {
    x % p * pow_mod(y, p - 2, p) % p
}

/// `3/2 a2^3 + a3^2 - a2 a4 mod p`.
pub fn criterion(a2: u64, a3: u64, a4: u64, p: u64) -> u64 {
    let t = div_mod(3, 2, p) * pow_mod(a2, 3, p) % p;
    (t + a3 * a3 % p + p - a2 * a4 % p) % p
}

pub fn residue(n: i64, p: u64) -> u64 {
    n.rem_euclid(p as i64) as u64
}
