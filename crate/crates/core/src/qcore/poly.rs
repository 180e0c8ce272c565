use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// A polynomial in `q` with integer coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// has an empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = QPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
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

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Horner evaluation in any [`Scalar`].
    pub fn eval<F: Scalar>(&self, q: &F) -> F {
        let mut acc = F::from_i64(0);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&F::from_bigint(c));
        }
        acc
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.eval(&q)
    }

    /// Exact division; `None` when `d` does not divide `self` in `Z[q]`.
    pub fn div_exact(&self, d: &QPolynomial) -> Option<QPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPolynomial::from_coeffs(quot))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `q^k - 1` for `k >= 1`.
fn q_pow_minus_one(k: usize) -> QPolynomial {
    let mut p = QPolynomial::monomial(k);
    p.coeffs[0] -= 1;
    p
}

/// Gaussian binomial `[a, b]_q`.
///
/// Zero when `b < 0` or `a < b`; an error when `a < 0`.
pub fn q_binomial(a: i64, b: i64) -> Result<QPolynomial> {
    if a < 0 {
        return Err(Error::InvalidArgument(format!(
            "q-binomial top index must be nonnegative, got {a}"
        )));
    }
    if b < 0 || a < b {
        return Ok(QPolynomial::zero());
    }
    let b = b.min(a - b) as usize;
    let a = a as usize;
    let mut p = QPolynomial::one();
    for s in 1..=b {
        let num = &p * &q_pow_minus_one(s + a - b);
        p = num
            .div_exact(&q_pow_minus_one(s))
            .expect("partial Gaussian products are polynomials");
    }
    Ok(p)
}
