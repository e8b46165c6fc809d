//! The cyclotomic quotient ring Z[Y]/(Y^m - 1).
//!
//! A root of unity of order dividing m is represented symbolically by the
//! class of Y, so an identity verified here holds simultaneously for every
//! complex omega with omega^m = 1. The quotient is by Y^m - 1 rather than a
//! cyclotomic polynomial: the ring is not a domain, but it covers all
//! rotation amounts h at once.

use super::poly::Poly;
use super::ring::{Int, Ring};
use crate::error::{Error, Result};

/// Element sum c_i Y^i of Z[Y]/(Y^m - 1), stored as exactly m coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CycElem {
    m: usize,
    coeffs: Vec<Int>,
}

impl CycElem {
    pub fn zero(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::usage("cyclotomic order m must be positive"));
        }
        Ok(CycElem {
            m,
            coeffs: vec![Int::from(0); m],
        })
    }

    pub fn one(m: usize) -> Result<Self> {
        Self::monomial(m, 0, Int::from(1))
    }

    /// `c * Y^e`, exponent reduced mod m.
    pub fn monomial(m: usize, e: u64, c: Int) -> Result<Self> {
        let mut z = Self::zero(m)?;
        let idx = (e % m as u64) as usize;
        z.coeffs[idx] = c;
        Ok(z)
    }

    pub fn from_coeffs(m: usize, coeffs: Vec<Int>) -> Result<Self> {
        if m == 0 {
            return Err(Error::usage("cyclotomic order m must be positive"));
        }
        if coeffs.len() != m {
            return Err(Error::usage(format!(
                "expected exactly {m} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycElem { m, coeffs })
    }

    pub fn root_order(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Add `c * Y^e` in place, exponent reduced mod m.
    pub fn add_monomial(&mut self, e: u64, c: &Int) {
        let idx = (e % self.m as u64) as usize;
        self.coeffs[idx] += c;
    }

    /// Wire form: the m coefficients as decimal strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Lift to a plain polynomial in Y (degree < m).
    pub fn to_poly(&self) -> Poly<Int> {
        Poly::new(self.coeffs.clone())
    }
}

impl Ring for CycElem {
    fn zero_like(&self) -> Self {
        CycElem::zero(self.m).unwrap()
    }
    fn one_like(&self) -> Self {
        CycElem::one(self.m).unwrap()
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m, "mixed cyclotomic orders {} and {}", self.m, rhs.m);
        CycElem {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
    fn neg(&self) -> Self {
        CycElem {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m, "mixed cyclotomic orders {} and {}", self.m, rhs.m);
        let mut out = vec![Int::from(0); self.m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if Ring::is_zero(b) {
                    continue;
                }
                let k = (i + j) % self.m;
                out[k] += a * b;
            }
        }
        CycElem { m: self.m, coeffs: out }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn embed_i64(&self, v: i64) -> Self {
        let mut z = CycElem::zero(self.m).unwrap();
        z.coeffs[0] = Int::from(v);
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::int;

    #[test]
    fn exponents_fold_mod_m() {
        let y2 = CycElem::monomial(4, 2, int(1)).unwrap();
        let y4 = y2.mul(&y2);
        assert_eq!(y4, CycElem::one(4).unwrap()); // Y^4 = 1
    }

    #[test]
    fn strict_coefficient_length() {
        assert!(CycElem::from_coeffs(3, vec![int(1), int(2)]).is_err());
        assert!(CycElem::zero(0).is_err());
    }

    #[test]
    fn mul_matches_polynomial_remainder() {
        // Dual route: reduce the plain polynomial product mod Y^m - 1 by
        // long division and compare against the cyclic convolution.
        for m in 1usize..=8 {
            let u = CycElem::from_coeffs(m, (0..m).map(|i| int(i as i64 + 1)).collect()).unwrap();
            let v = CycElem::from_coeffs(m, (0..m).map(|i| int((i as i64).pow(2) - 3)).collect())
                .unwrap();
            let cyc = u.mul(&v);

            let mut modulus = vec![int(-1)];
            modulus.extend(std::iter::repeat(int(0)).take(m - 1));
            modulus.push(int(1));
            let modulus = Poly::new(modulus); // Y^m - 1
            let (_, rem) = u.to_poly().mul(&v.to_poly()).div_rem_monic(&modulus).unwrap();

            let mut expect = vec![int(0); m];
            for (i, c) in rem.coeffs().iter().enumerate() {
                expect[i] = c.clone();
            }
            assert_eq!(cyc.coeffs(), &expect[..], "m = {m}");
        }
    }
}
