use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::StartSequence;
use crate::error::{Error, Result};
use crate::qcore::{poly_det, q_binomial, QPolynomial, Scalar};

/// `A_{i,j} = [a_i + j, j]_q`, the single-path partition functions.
pub fn lgv_matrix(seq: &StartSequence) -> Vec<Vec<QPolynomial>> {
    let n = seq.n();
    seq.a()
        .iter()
        .map(|&ai| {
            (0..=n as i64)
                .map(|j| q_binomial(ai + j, j).expect("a_i + j >= 0"))
                .collect()
        })
        .collect()
}

/// `Z_n(q)` as a polynomial.
pub fn partition_det(seq: &StartSequence) -> QPolynomial {
    poly_det(&lgv_matrix(seq)).expect("LGV matrix is square")
}

pub(crate) fn check_q(q: &BigRational) -> Result<()> {
    if *q <= BigRational::zero() || q.is_one() {
        return Err(Error::InvalidArgument(format!(
            "q must be positive and different from 1, got {q}"
        )));
    }
    Ok(())
}

fn vandermonde<F: Scalar>(xs: &[F]) -> F {
    let mut acc = F::from_i64(1);
    for j in 0..xs.len() {
        for i in 0..j {
            acc = acc.mul(&xs[j].sub(&xs[i]));
        }
    }
    acc
}

/// `Z_n(q)` from the Vandermonde product.
pub fn partition_product(seq: &StartSequence, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    let n = seq.n() as i64;
    let top: Vec<BigRational> = seq.a().iter().map(|&a| q.powi(a)).collect();
    let bottom: Vec<BigRational> = (0..=n).map(|k| q.powi(k)).collect();
    let pre = q.powi(n * (n + 1) * (2 * n + 1) / 6);
    Ok(pre * vandermonde(&top) / vandermonde(&bottom))
}

/// Exponent `n(n+1)(3a_n+n+2)/6` relating `Z(a; q)` to `Z(ã; 1/q)`.
pub fn zident_prefactor_exponent(seq: &StartSequence) -> i64 {
    let n = seq.n() as i64;
    n * (n + 1) * (3 * seq.last() + n + 2) / 6
}

/// `Z_n(q)` as a polynomial from the Vandermonde product, multiplying and
/// dividing by one `q^k − 1` factor at a time. Much cheaper than
/// [`partition_det`] for large `n`.
pub fn partition_product_poly(seq: &StartSequence) -> QPolynomial {
    let a = seq.a();
    let n = seq.n() as i64;
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    let mut shift = n * (n + 1) * (2 * n + 1) / 6;
    for j in 0..a.len() {
        for i in 0..j {
            let k = (a[j] - a[i]) as usize;
            let mut out = vec![BigInt::zero(); c.len() + k];
            for (m, v) in c.iter().enumerate() {
                out[m + k] += v;
                out[m] -= v;
            }
            c = out;
            shift += a[i] - i as i64;
        }
    }
    for j in 1..=n {
        for i in 0..j {
            // P = Q (q^k − 1) gives Q_m = Q_{m−k} − P_m
            let k = (j - i) as usize;
            let mut quot = vec![BigInt::zero(); c.len() - k];
            for m in 0..quot.len() {
                let prev = if m >= k { quot[m - k].clone() } else { BigInt::zero() };
                quot[m] = prev - &c[m];
            }
            c = quot;
        }
    }
    QPolynomial::from_coeffs(c).shift(shift as usize)
}
