//! Dense univariate polynomials over any [`Ring`].

use super::ring::Ring;
use crate::error::{Error, Result};

/// Polynomial with coefficients indexed by degree. The zero polynomial is the
/// empty list; otherwise the last stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map(Ring::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// `c * X^e`.
    pub fn monomial(e: usize, c: R) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Horner evaluation. The zero polynomial evaluates to the zero of the
    /// ring of `x`.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Long division by a monic divisor; returns `(quotient, remainder)`.
    /// Monic keeps the computation in the ring (no inverses needed).
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::usage("division by the zero polynomial"))?;
        let lead = &divisor.coeffs[d];
        if *lead != lead.one_like() {
            return Err(Error::usage("divisor is not monic"));
        }
        if self.coeffs.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let zero = self.coeffs[0].zero_like();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero; rem.len() - d];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + d].clone();
            if top.is_zero() {
                continue;
            }
            for i in 0..=d {
                rem[shift + i] = rem[shift + i].sub(&top.mul(&divisor.coeffs[i]));
            }
            quot[shift] = top;
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }
}

impl<R: Ring + std::fmt::Display> std::fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*n")?,
                _ => write!(f, "({c})*n^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{int, Int};

    fn p(coeffs: &[i64]) -> Poly<Int> {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn mul_and_eval_agree() {
        let a = p(&[1, 1]); // 1 + n
        let b = p(&[-1, 1]); // -1 + n
        let prod = a.mul(&b); // n^2 - 1
        assert_eq!(prod, p(&[-1, 0, 1]));
        for x in -3i64..=3 {
            assert_eq!(prod.eval(&int(x)), int(x * x - 1));
        }
    }

    #[test]
    fn monic_division_recovers_quotient_and_remainder() {
        let num = p(&[2, 0, 3, 1]); // 2 + 3n^2 + n^3
        let div = p(&[-1, 1]); // n - 1
        let (q, r) = num.div_rem_monic(&div).unwrap();
        assert_eq!(q.mul(&div).add(&r), num);
        assert!(r.degree().unwrap_or(0) < 1);
        assert!(num.div_rem_monic(&p(&[1, 2])).is_err());
    }
}
