//! Scalar types and the ring abstraction the algebra layer is generic over.
//!
//! - [`Int`], [`Rat`]: arbitrary-precision integers and reduced rationals
//! - [`Ring`]: the minimal commutative-ring interface shared by `Int`, `Rat`,
//!   [`crate::exact::Fp`], [`crate::exact::CycElem`], and truncated series
//! - parsing/formatting helpers used at the CLI boundary, where every number
//!   crosses as a decimal string

use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer, the universal integer scalar.
pub type Int = num_bigint::BigInt;

/// Exact rational number. Always stored reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Commutative-ring operations, element-carried.
///
/// Elements of parametric rings (prime fields, cyclotomic quotients) carry
/// their ring parameters, so "the zero of the same ring as `self`" is the
/// primitive everything else is built from. Operations on elements of
/// different rings of the same type are programming errors and panic.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Embed a small integer into the ring of `self`.
    fn embed_i64(&self, v: i64) -> Self;
}

impl Ring for Int {
    fn zero_like(&self) -> Self {
        Int::zero()
    }
    fn one_like(&self) -> Self {
        Int::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn embed_i64(&self, v: i64) -> Self {
        Int::from(v)
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn embed_i64(&self, v: i64) -> Self {
        Rat::from_integer(Int::from(v))
    }
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Reduced rational n/d. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| Error::usage(format!("not a decimal integer: {s:?}")))
}

/// Parse `"a/b"` or a bare integer `"a"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if Zero::is_zero(&den) {
                return Err(Error::domain(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Canonical wire form of a rational: `"num/den"`, denominator always shown.
pub fn rat_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Size guard for exact powers, in bits of the result. Large enough to
/// evaluate every identity in scope, small enough to fail fast on requests
/// that could never finish.
pub const MAX_POW_BITS: u64 = 1 << 27;

/// `base^exp` with an explicit bound on the result size.
pub fn int_pow(base: &Int, exp: u64) -> Result<Int> {
    if exp == 0 {
        return Ok(Int::one());
    }
    let bits = base.magnitude().bits().max(1);
    if bits.saturating_mul(exp) > MAX_POW_BITS {
        return Err(Error::too_large(format!(
            "{}-bit base raised to exponent {exp} exceeds the {MAX_POW_BITS}-bit limit",
            bits
        )));
    }
    let exp32 = u32::try_from(exp)
        .map_err(|_| Error::too_large(format!("exponent {exp} out of range")))?;
    Ok(Pow::pow(base, exp32))
}

/// `x^exp` for a reduced rational; exactness is preserved because powers of
/// coprime integers stay coprime.
pub fn rat_pow(x: &Rat, exp: u64) -> Result<Rat> {
    let num = int_pow(x.numer(), exp)?;
    let den = int_pow(x.denom(), exp)?;
    Ok(Rat::new(num, den))
}

/// `base^exp` in `u64`, or a `TooLarge` error on overflow.
pub fn u64_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::too_large(format!("{base}^{exp} overflows u64")))
}

/// Floor of a nonnegative-denominator rational as an `Int`.
pub fn rat_floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

pub fn int_to_u64(x: &Int) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::too_large(format!("{x} does not fit in u64")))
}

pub fn int_sign(x: &Int) -> i8 {
    if Zero::is_zero(x) {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_wire_format_always_shows_denominator() {
        assert_eq!(rat_string(&rat(3, 1)), "3/1");
        assert_eq!(rat_string(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn parse_rat_accepts_both_forms() {
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rat("-3/9").unwrap(), rat(-1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x/2").is_err());
    }

    #[test]
    fn int_pow_guards_size() {
        assert_eq!(int_pow(&int(2), 10).unwrap(), int(1024));
        assert_eq!(int_pow(&int(0), 0).unwrap(), int(1));
        let huge = int_pow(&Int::from(u64::MAX), u64::MAX);
        assert!(matches!(huge, Err(Error::TooLarge(_))));
    }
}
