//! The prime field `F_p`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::Coefficient;

/// A prime modulus, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Like [`Prime::new`] but additionally rejects `p = 2`.
    pub fn odd(p: u64) -> Result<Self> {
        Self::new(p)?.require_odd()
    }

    pub fn require_odd(self) -> Result<Self> {
        if self.0 == 2 {
            Err(Error::EvenPrime)
        } else {
            Ok(self)
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    pub fn element(self, n: i64) -> FieldElement {
        FieldElement::from_i64(n, self)
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { residue: 0, modulus: self }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { residue: 1 % self.0, modulus: self }
    }

    /// All residues `0..p` in increasing order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.0).map(move |r| FieldElement { residue: r, modulus: self })
    }

    /// The odd primes `3 ..= bound`.
    pub fn odd_primes_up_to(bound: u64) -> Vec<Prime> {
        (3..=bound).filter(|&n| is_prime(n)).map(Prime).collect()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are a
/// certificate for every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A residue class modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    residue: u64,
    modulus: Prime,
}

impl FieldElement {
    pub fn new(residue: u64, modulus: Prime) -> Self {
        FieldElement { residue: residue % modulus.0, modulus }
    }

    pub fn from_i64(n: i64, modulus: Prime) -> Self {
        let p = modulus.0 as i128;
        let r = (n as i128).rem_euclid(p) as u64;
        FieldElement { residue: r, modulus }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    /// The representative in `(-p/2, p/2]`.
    pub fn signed(self) -> i64 {
        let p = self.modulus.0;
        if self.residue > p / 2 {
            self.residue as i64 - p as i64
        } else {
            self.residue as i64
        }
    }

    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: x^(p-2) = x^-1
        let p = self.modulus.0;
        Ok(FieldElement { residue: pow_mod(self.residue, p - 2, p), modulus: self.modulus })
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs.inv()?)
    }

    fn check(self, rhs: Self) {
        assert_eq!(self.modulus, rhs.modulus, "field elements from different prime fields");
    }
}

/// Multiplicative inverse in `F_p`.
pub fn field_inv(x: FieldElement) -> Result<FieldElement> {
    x.inv()
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.residue)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        let p = self.modulus.0;
        let s = self.residue as u128 + rhs.residue as u128;
        FieldElement { residue: (s % p as u128) as u64, modulus: self.modulus }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let r = if self.residue == 0 { 0 } else { self.modulus.0 - self.residue };
        FieldElement { residue: r, modulus: self.modulus }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement { residue: mul_mod(self.residue, rhs.residue, self.modulus.0), modulus: self.modulus }
    }
}

/// Panics on division by zero; use [`FieldElement::checked_div`] otherwise.
impl Div for FieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("division by zero in F_p")
    }
}

impl Coefficient for FieldElement {
    fn zero_like(&self) -> Self {
        self.modulus.zero()
    }

    fn one_like(&self) -> Self {
        self.modulus.one()
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn int_like(&self, n: i64) -> Self {
        FieldElement::from_i64(n, self.modulus)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        *self + *rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        *self - *rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
}
