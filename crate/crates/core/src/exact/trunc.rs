//! Truncated formal power series over a generic coefficient ring.
//!
//! A series of order N stores exactly the coefficients of X^0 .. X^{N-1};
//! arithmetic never reads or writes beyond the truncation order. The series
//! in scope are lacunary but orders stay small enough that dense storage is
//! the simpler correct choice.

use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Zero series of the given order; `template` fixes the coefficient ring.
    pub fn zero(order: usize, template: &R) -> Result<Self> {
        if order == 0 {
            return Err(Error::usage("truncation order must be positive"));
        }
        Ok(TruncSeries {
            coeffs: vec![template.zero_like(); order],
        })
    }

    /// Constant one, mod X^order.
    pub fn one(order: usize, template: &R) -> Result<Self> {
        let mut s = Self::zero(order, template)?;
        s.coeffs[0] = template.one_like();
        Ok(s)
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("truncation order must be positive"));
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: R) {
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::usage(format!(
                "mismatched truncation orders {} and {}",
                self.order(),
                rhs.order()
            )));
        }
        if self.coeffs[0].zero_like() != rhs.coeffs[0].zero_like() {
            return Err(Error::usage("mismatched coefficient rings"));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// First index at which the two series differ, if any.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .position(|(a, b)| a != b)
    }
}

/// Cauchy product truncated to the common order of `s` and `t`.
pub fn series_mul<R: Ring>(s: &TruncSeries<R>, t: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    s.check_compatible(t)?;
    let n = s.order();
    let mut out = TruncSeries::zero(n, &s.coeffs[0])?;
    for (i, a) in s.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in t.coeffs.iter().take(n - i).enumerate() {
            if b.is_zero() {
                continue;
            }
            out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
        }
    }
    Ok(out)
}

/// The geometric block u*X^e / (1 - u*X^e) = sum_{t >= 1} u^t X^{te},
/// truncated to the given order. The coefficient of X^{te} is u^t and every
/// other coefficient is zero.
pub fn series_inv_geometric<R: Ring>(u: &R, e: u64, order: u64) -> Result<TruncSeries<R>> {
    if e == 0 {
        return Err(Error::usage(
            "geometric block needs exponent e >= 1 (unit constant term in the denominator)",
        ));
    }
    if order == 0 {
        return Err(Error::usage("truncation order must be positive"));
    }
    let order = usize::try_from(order)
        .map_err(|_| Error::too_large(format!("truncation order {order} out of range")))?;
    let mut out = TruncSeries::zero(order, u)?;
    let mut power = u.clone();
    let mut idx = e as u128;
    while idx < order as u128 {
        out.coeffs[idx as usize] = power.clone();
        idx += e as u128;
        if idx < order as u128 {
            power = power.mul(u);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cyclo::CycElem;
    use crate::exact::ring::{int, Int};

    fn s(coeffs: &[i64]) -> TruncSeries<Int> {
        TruncSeries::from_coeffs(coeffs.iter().map(|&c| int(c)).collect()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = s(&[1, 1, 0]); // 1 + X
        let b = s(&[1, -1, 0]); // 1 - X
        assert_eq!(series_mul(&a, &b).unwrap(), s(&[1, 0, -1]));
    }

    #[test]
    fn order_mismatch_is_a_usage_error() {
        let a = s(&[1, 1]);
        let b = s(&[1, 1, 1]);
        assert!(matches!(series_mul(&a, &b), Err(Error::Usage(_))));
    }

    #[test]
    fn geometric_block_small_cases() {
        // u = 1, e = 2, N = 7: X^2 + X^4 + X^6
        assert_eq!(
            series_inv_geometric(&int(1), 2, 7).unwrap(),
            s(&[0, 0, 1, 0, 1, 0, 1])
        );
        // exponent beyond the truncation order gives the zero series
        assert!(series_inv_geometric(&int(1), 8, 5).unwrap().is_zero());
        assert!(series_inv_geometric(&int(1), 0, 5).is_err());
    }

    #[test]
    fn geometric_block_over_cyclotomic_ring() {
        // u = Y^2 in Z[Y]/(Y^4 - 1), e = 2, N = 5: Y^2 X^2 + X^4
        let u = CycElem::monomial(4, 2, int(1)).unwrap();
        let got = series_inv_geometric(&u, 2, 5).unwrap();
        let zero = CycElem::zero(4).unwrap();
        let mut expect = TruncSeries::zero(5, &zero).unwrap();
        expect.set_coeff(2, u.clone());
        expect.set_coeff(4, CycElem::one(4).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn telescoping_product_over_cyclotomic_ring() {
        // (1 - Y X) * sum_{j < N} Y^j X^j = 1 mod X^N in Z[Y]/(Y^4 - 1).
        let n = 12usize;
        let one = CycElem::one(4).unwrap();
        let y = CycElem::monomial(4, 1, int(1)).unwrap();

        let mut lhs = TruncSeries::one(n, &one).unwrap();
        lhs.set_coeff(1, y.neg());

        let mut geom = TruncSeries::zero(n, &one).unwrap();
        let mut p = one.clone();
        for j in 0..n {
            geom.set_coeff(j, p.clone());
            p = p.mul(&y);
        }

        let prod = series_mul(&lhs, &geom).unwrap();
        assert_eq!(prod, TruncSeries::one(n, &one).unwrap());
    }
}
