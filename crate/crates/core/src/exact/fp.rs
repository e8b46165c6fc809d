//! Prime fields F_p with word-sized modulus.

use super::ring::Ring;
use crate::error::{Error, Result};

/// Deterministic Miller-Rabin for `u64`. The listed bases decide primality
/// for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Element of the prime field F_p. The modulus travels with the element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    /// Reduces `v` mod `p`; rejects composite moduli.
    pub fn new(p: u64, v: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::usage(format!("modulus {p} is not prime")));
        }
        Ok(Fp { p, v: v % p })
    }

    /// Same ring as `self`, value reduced mod p. Skips the primality check.
    pub fn make(&self, v: u64) -> Self {
        Fp { p: self.p, v: v % self.p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Multiplicative inverse by Fermat. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero in F_{}", self.p);
        Fp {
            p: self.p,
            v: pow_mod_u64(self.v, self.p - 2, self.p),
        }
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { p: self.p, v: 1 % self.p }
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed moduli {} and {}", self.p, rhs.p);
        let mut v = self.v + rhs.v;
        if v >= self.p {
            v -= self.p;
        }
        Fp { p: self.p, v }
    }
    fn neg(&self) -> Self {
        Fp {
            p: self.p,
            v: if self.v == 0 { 0 } else { self.p - self.v },
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed moduli {} and {}", self.p, rhs.p);
        Fp {
            p: self.p,
            v: mul_mod_u64(self.v, rhs.v, self.p),
        }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn embed_i64(&self, v: i64) -> Self {
        let r = v.rem_euclid(self.p as i64) as u64;
        Fp { p: self.p, v: r }
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_spot_checks() {
        let primes = [2u64, 3, 5, 7, 1_000_000_007, 18_446_744_073_709_551_557];
        for p in primes {
            assert!(is_prime_u64(p), "{p} should be prime");
        }
        let composites = [0u64, 1, 4, 2024, 341, 561, 3_215_031_751];
        for c in composites {
            assert!(!is_prime_u64(c), "{c} should be composite");
        }
    }

    #[test]
    fn field_inverse() {
        let x = Fp::new(10_007, 1234).unwrap();
        assert_eq!(x.mul(&x.inv()).value(), 1);
        assert!(Fp::new(10, 3).is_err());
    }

    #[test]
    fn embed_handles_negatives() {
        let one = Fp::new(7, 1).unwrap();
        assert_eq!(one.embed_i64(-1).value(), 6);
        assert_eq!(one.embed_i64(-14).value(), 0);
    }
}
