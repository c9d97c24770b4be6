//! Dense polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Every q-character, Kostka–Foulkes polynomial, and Gaussian binomial in
//! this crate lives here. Degrees stay below `N(N-1)/2 ≈ 91` at the scales
//! we verify, so a dense coefficient vector is both simpler and faster than
//! a sparse map.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// Polynomial in `q`, coefficient of `q^i` at index `i`, trailing zeros
/// trimmed. Serializes as a low-to-high JSON array of decimal strings so
/// arbitrary-precision coefficients survive any consumer.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c · q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        QPoly::monomial(BigInt::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience for tests and tables: coefficients from `i64`s.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Adds `c · q^e` in place.
    pub fn add_term(&mut self, c: &BigInt, e: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        self.trim();
    }

    /// Evaluation at `q = 1`: the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient reversal relative to exponent `top`:
    /// `q^top · p(1/q)`. Fails if `deg p > top`, since the result would
    /// not be a polynomial.
    pub fn reversed(&self, top: usize) -> Result<QPoly> {
        if let Some(d) = self.degree() {
            if d > top {
                return Err(Error::domain(format!(
                    "cannot reverse a degree-{d} polynomial at exponent {top}"
                )));
            }
        }
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[top - e] = c.clone();
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Whether the coefficient list is palindromic (Gaussian binomials are).
    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self == &self.reversed(d).expect("degree fits"),
        }
    }

    /// Exact division. The quotient is required to have integer
    /// coefficients and zero remainder; anything else reports an internal
    /// error, because every division this crate performs is guaranteed
    /// exact by a hook-length or Vandermonde argument.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::internal("exact division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = divisor.degree().expect("nonzero");
        let nd = self.degree().expect("nonzero");
        if nd < dd {
            return Err(Error::internal("exact division left a remainder"));
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for e in (0..=nd - dd).rev() {
            let c = rem[e + dd].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(c, lead.clone());
            if !r.is_zero() {
                return Err(Error::internal("non-integral quotient in exact division"));
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let t = dc * &q;
                rem[e + i] -= t;
            }
            quot[e] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("exact division left a remainder"));
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// `[n]_q = 1 + q + … + q^{n-1}`.
    pub fn q_int(n: usize) -> QPoly {
        QPoly::from_coeffs(vec![BigInt::one(); n])
    }

    /// Coefficients as decimal strings, low to high.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        let coeffs = strings
            .iter()
            .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = QPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, QPoly::from_ints(&[1, 2]));
    }

    #[test]
    fn arithmetic() {
        let a = QPoly::from_ints(&[1, 1]); // 1 + q
        let b = QPoly::from_ints(&[1, -1]); // 1 - q
        assert_eq!(&a * &b, QPoly::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, QPoly::from_ints(&[2]));
        assert_eq!(&a - &a, QPoly::zero());
    }

    #[test]
    fn exact_division() {
        // [4]_q / [2]_q = 1 + q^2
        let n = QPoly::q_int(4);
        let d = QPoly::q_int(2);
        assert_eq!(n.div_exact(&d).unwrap(), QPoly::from_ints(&[1, 0, 1]));
        // inexact division is an internal error
        let bad = QPoly::from_ints(&[1, 1, 1]);
        assert!(matches!(
            bad.div_exact(&QPoly::from_ints(&[1, 1])),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn reversal() {
        let p = QPoly::from_ints(&[0, 0, 1, 0, 1]); // q^2 + q^4
        let r = p.reversed(6).unwrap(); // q^6 (q^-2 + q^-4) = q^4 + q^2
        assert_eq!(r, p);
        let s = QPoly::from_ints(&[0, 1]); // q
        assert_eq!(s.reversed(1).unwrap(), QPoly::one());
        assert!(s.reversed(0).is_err());
    }

    #[test]
    fn display() {
        let p = QPoly::from_ints(&[1, 1, 2, 1, 1]);
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_ints(&[-2, 0, 1]).to_string(), "-2 + q^2");
    }

    #[test]
    fn serde_decimal_strings() {
        let p = QPoly::from_ints(&[1, 0, 3]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","0","3"]"#);
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
