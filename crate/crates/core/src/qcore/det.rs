use super::QPolynomial;
use crate::error::{Error, Result};

/// Determinant of a square matrix over `Z[q]` by Bareiss elimination.
///
/// Every division is exact, so no fractions appear. A zero pivot is replaced
/// by swapping in a lower row with a nonzero entry.
pub fn poly_det(m: &[Vec<QPolynomial>]) -> Result<QPolynomial> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    let mut a: Vec<Vec<QPolynomial>> = m.to_vec();
    let mut prev = QPolynomial::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(QPolynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}
