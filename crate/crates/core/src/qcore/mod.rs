//! Exact q-arithmetic.
//!
//! - [`QPolynomial`]: polynomials in `q` with big-integer coefficients
//! - [`q_binomial`]: Gaussian binomial coefficients
//! - [`poly_det`]: fraction-free determinant over `Z[q]`
//! - [`Scalar`]: the small field interface shared by exact, double and wide evaluation

mod det;
mod poly;
mod scalar;

pub use det::poly_det;
pub use poly::{q_binomial, QPolynomial};
pub use scalar::{parse_rational, Scalar, Wide, WIDE_PRECISION};

/// Exact rationals with big-integer numerator and denominator.
pub type ExactRational = num_rational::BigRational;

/// Evaluates `p` at an exact rational point.
pub fn poly_eval(p: &QPolynomial, q: &ExactRational) -> ExactRational {
    p.eval(q)
}
