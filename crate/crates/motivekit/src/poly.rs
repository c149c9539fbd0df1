//! Dense integer polynomials in one variable `t`.
//!
//! Coefficients are `i64` with the constant term first. The canonical form
//! carries no trailing zeros, so structural equality is polynomial equality.
//! Exact division is provided for divisors with unit leading coefficient,
//! which covers every quotient taken in this crate.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (the −∞ sentinel).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i64, |acc, &c| acc.checked_mul(x).and_then(|v| v.checked_add(c)).expect("overflow in eval"))
    }

    /// Substitute `t ↦ t^k`. `k = 0` collapses to the value at 1.
    pub fn substitute_power(&self, k: usize) -> Self {
        if k == 0 {
            return Self::constant(self.eval(1));
        }
        let mut coeffs = vec![0; self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::new(coeffs)
    }

    /// `t^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Euclidean division by a divisor whose leading coefficient is ±1,
    /// returning `(quotient, remainder)` with `deg r < deg d`. Exact over ℤ
    /// precisely because the leading coefficient is a unit.
    pub fn div_rem_unit(&self, d: &Self) -> Result<(Self, Self)> {
        let lead = d.leading_coeff();
        if lead != 1 && lead != -1 {
            return Err(Error::Precondition(
                "division requires a divisor with leading coefficient ±1".into(),
            ));
        }
        let dd = d.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem[rem.len() - 1] * lead; // lead is ±1, so this is lead⁻¹·r
            if q != 0 {
                quot[k] = q;
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    let idx = k + i;
                    rem[idx] = rem[idx].checked_sub(q.checked_mul(dc).expect("overflow")).expect("overflow");
                }
            }
            debug_assert_eq!(rem.last(), Some(&0));
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Whether `d` divides `self` exactly (divisor must have unit lead).
    pub fn divisible_by(&self, d: &Self) -> Result<bool> {
        Ok(self.div_rem_unit(d)?.1.is_zero())
    }

    /// Coefficients all ≥ 0 (vacuously true for zero).
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Palindromic coefficient sequence.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(a.checked_mul(b).expect("overflow"))
                    .expect("overflow");
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if k == 0 {
                    write!(f, "{c}")?;
                } else if c == 1 {
                    write!(f, "t")?;
                } else if c == -1 {
                    write!(f, "-t")?;
                } else {
                    write!(f, "{c}*t")?;
                }
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                first = false;
            } else {
                let sign = if c < 0 { " - " } else { " + " };
                let a = c.unsigned_abs();
                write!(f, "{sign}")?;
                if k == 0 {
                    write!(f, "{a}")?;
                } else {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = IntPolynomial::new(vec![1, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::new(vec![0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::new(vec![1, 1]); // 1 + t
        let q = IntPolynomial::new(vec![-1, 1]); // -1 + t
        assert_eq!(&p * &q, IntPolynomial::new(vec![-1, 0, 1]));
        assert_eq!(&p + &q, IntPolynomial::new(vec![0, 2]));
        assert_eq!(&p - &p, IntPolynomial::zero());
    }

    #[test]
    fn division_by_unit_lead() {
        // t³ = t·(t² − 1) + t
        let p = IntPolynomial::monomial(1, 3);
        let d = IntPolynomial::new(vec![-1, 0, 1]);
        let (q, r) = p.div_rem_unit(&d).unwrap();
        assert_eq!(q, IntPolynomial::monomial(1, 1));
        assert_eq!(r, IntPolynomial::monomial(1, 1));
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn division_rejects_nonunit_lead() {
        let p = IntPolynomial::one();
        let d = IntPolynomial::new(vec![0, 2]);
        assert!(p.div_rem_unit(&d).is_err());
    }

    #[test]
    fn substitution_and_display() {
        let p = IntPolynomial::new(vec![1, 1, 2]);
        assert_eq!(p.substitute_power(2), IntPolynomial::new(vec![1, 0, 1, 0, 2]));
        assert_eq!(p.to_string(), "1 + t + 2*t^2");
        assert_eq!(IntPolynomial::new(vec![0, -1, 0, 3]).to_string(), "-t + 3*t^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
