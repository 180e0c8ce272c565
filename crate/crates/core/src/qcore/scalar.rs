type FBig = dashu_float::FBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field operations needed by the residue and determinant formulas.
pub trait Scalar: Clone {
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// Integer power; negative exponents invert.
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            Self::from_i64(1).div(self)
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Self::from_i64(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn powi(&self, e: i64) -> Self {
        f64::powf(*self, e as f64)
    }
}

/// Binary precision of [`Wide`] in bits.
pub const WIDE_PRECISION: usize = 384;

/// Binary floating point with [`WIDE_PRECISION`] bits of mantissa.
///
/// Used where residue sums of large alternating terms would lose every digit
/// in double precision.
#[derive(Clone, Debug)]
pub struct Wide(pub FBig);

impl Wide {
    pub fn from_f64(v: f64) -> Self {
        let f = FBig::try_from(v).expect("finite input");
        Wide(f.with_precision(WIDE_PRECISION).value())
    }
}

impl Scalar for Wide {
    fn from_i64(v: i64) -> Self {
        Wide(FBig::from(v).with_precision(WIDE_PRECISION).value())
    }
    fn from_bigint(v: &BigInt) -> Self {
        let (sign, digits) = v.to_u32_digits();
        let radix = Wide::from_i64(1 << 32);
        let mut acc = Wide::from_i64(0);
        for d in digits.iter().rev() {
            acc = acc.mul(&radix).add(&Wide::from_i64(*d as i64));
        }
        if sign == num_bigint::Sign::Minus {
            Wide::from_i64(0).sub(&acc)
        } else {
            acc
        }
    }
    fn add(&self, o: &Self) -> Self {
        Wide(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Wide(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Wide(&self.0 * &o.0)
    }
    fn div(&self, o: &Self) -> Self {
        Wide(&self.0 / &o.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == FBig::ZERO
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }
}

/// Parses `"p/q"`, `"p"` or a decimal such as `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let r = BigRational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

