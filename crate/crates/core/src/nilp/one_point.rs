#![allow(non_snake_case)]

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{check_q, lgv_matrix, partition_det};
use super::StartSequence;
use crate::error::{Error, Result};
use crate::qcore::{poly_det, q_binomial, Scalar, Wide};

/// Residue sum shared by `H` and `H̃`.
///
/// Sums, over the poles `t = q^{a_k}` with `k` in `poles`, the residue of
/// `∏_s (t − q^{a_s})^{-1} ∏_{s∈shifts} (t q^{s−ℓ} − 1)`. `poles` must already
/// be in the order the terms should be accumulated.
fn residue_sum<F: Scalar>(a: &[i64], poles: &[usize], shifts: std::ops::Range<i64>, ell: i64, q: &F) -> F {
    let one = F::from_i64(1);
    let qa: Vec<F> = a.iter().map(|&v| q.powi(v)).collect();
    let mut total = F::from_i64(0);
    for &k in poles {
        let mut num = one.clone();
        for s in shifts.clone() {
            num = num.mul(&q.powi(a[k] + s - ell).sub(&one));
        }
        if num.is_zero() {
            continue;
        }
        let mut den = one.clone();
        for (s, qs) in qa.iter().enumerate() {
            if s != k {
                den = den.mul(&qa[k].sub(qs));
            }
        }
        total = total.add(&num.div(&den));
    }
    total
}

/// Pole indices with `a_k >= lo`, ordered by increasing `|q^{a_k}|`.
fn poles_from(a: &[i64], lo: i64, q_above_one: bool) -> Vec<usize> {
    let mut ks: Vec<usize> = (0..a.len()).filter(|&k| a[k] >= lo).collect();
    if !q_above_one {
        ks.reverse();
    }
    ks
}

fn h_generic<F: Scalar>(seq: &StartSequence, ell: i64, q: &F, q_above_one: bool, extended: bool) -> F {
    let n = seq.n() as i64;
    let lo = if extended { ell - n } else { ell };
    let poles = poles_from(seq.a(), lo, q_above_one);
    let pre = q.powi(n * ell - n * (n + 1) / 2);
    pre.mul(&residue_sum(seq.a(), &poles, 1..n + 1, ell, q))
}

fn check_ell(seq: &StartSequence, ell: i64) -> Result<()> {
    if ell < 0 || ell > seq.last() {
        return Err(Error::InvalidArgument(format!(
            "exit abscissa must lie in [0, {}], got {ell}",
            seq.last()
        )));
    }
    Ok(())
}

/// One-point function `H_{n,ℓ}(q)`: probability-like ratio for the top path
/// to cross the line `y = n` at abscissa `ℓ`, by residues.
pub fn one_point_H(seq: &StartSequence, ell: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    check_ell(seq, ell)?;
    Ok(h_generic(seq, ell, q, *q > BigRational::one(), false))
}

/// As [`one_point_H`] but summing over the larger pole set `a_k >= ℓ − n`.
pub fn one_point_H_extended(seq: &StartSequence, ell: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    check_ell(seq, ell)?;
    Ok(h_generic(seq, ell, q, *q > BigRational::one(), true))
}

/// `H_{n,ℓ}(q)` as a ratio of two LGV determinants.
pub fn one_point_H_det(seq: &StartSequence, ell: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    check_ell(seq, ell)?;
    let n = seq.n();
    let mut m = lgv_matrix(seq);
    for (i, row) in m.iter_mut().enumerate() {
        let top = seq.a()[i] + n as i64 - ell;
        row[n] = if top < 0 {
            Default::default()
        } else {
            q_binomial(top, n as i64)?.shift(n * ell as usize)
        };
    }
    let num = poly_det(&m)?.eval(q);
    let den = partition_det(seq).eval(q);
    Ok(num / den)
}

/// Dual one-point function `H̃_{n,ℓ}(q)`, defined for `n <= ℓ <= a_n + n`.
pub fn one_point_Htilde(seq: &StartSequence, ell: i64, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    let n = seq.n() as i64;
    if ell < n || ell > seq.last() + n {
        return Err(Error::InvalidArgument(format!(
            "dual exit abscissa must lie in [{n}, {}], got {ell}",
            seq.last() + n
        )));
    }
    let a = seq.a();
    let mut poles: Vec<usize> = (0..a.len()).filter(|&k| a[k] <= ell - n).collect();
    if *q < BigRational::one() {
        poles.reverse();
    }
    let pre = q.powi(n * ell - n * (n - 1) / 2);
    Ok(pre * residue_sum(a, &poles, 0..n, ell, q))
}

fn y_generic<F: Scalar>(ell: i64, r: i64, q: &F) -> F {
    let one = F::from_i64(1);
    let mut acc = q.powi(ell);
    for s in 1..=ell {
        acc = acc
            .mul(&q.powi(s + r - 1).sub(&one))
            .div(&q.powi(s).sub(&one));
    }
    acc
}

/// Free-trajectory weight `Y_{ℓ,r} = q^ℓ [ℓ+r−1, ℓ]_q` above the exit point.
pub fn free_weight_Y(ell: i64, r: i64, q: &BigRational) -> Result<BigRational> {
    if r < 1 || ell < 0 {
        return Err(Error::InvalidArgument(format!(
            "need ell >= 0 and r >= 1, got ell={ell}, r={r}"
        )));
    }
    let b = q_binomial(ell + r - 1, ell)?;
    Ok(q.powi(ell) * b.eval(q))
}

/// Dual free-trajectory weight `Ỹ_{ℓ,r} = q^{r(ℓ+1)+r(r−1)/2} [ℓ̃+r−1, ℓ̃]_q`, `ℓ̃ = a_n+n−ℓ`.
pub fn free_weight_Ytilde(ell: i64, r: i64, a_n: i64, n: i64, q: &BigRational) -> Result<BigRational> {
    if r < 1 || ell < n || ell > a_n + n {
        return Err(Error::InvalidArgument(format!(
            "need r >= 1 and {n} <= ell <= {}, got ell={ell}, r={r}",
            a_n + n
        )));
    }
    let lt = a_n + n - ell;
    let b = q_binomial(lt + r - 1, lt)?;
    Ok(q.powi(r * (ell + 1) + r * (r - 1) / 2) * b.eval(q))
}

/// `Σ_ℓ H_{n,ℓ} Y_{ℓ,r}`: partition function with the top endpoint moved up
/// by `r`, normalised by `Z_n`.
pub fn perturbed_partition(seq: &StartSequence, r: i64, q: &BigRational) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for ell in 0..=seq.last() {
        acc += one_point_H(seq, ell, q)? * free_weight_Y(ell, r, q)?;
    }
    Ok(acc)
}

/// Summands `H_{n,ℓ}(q) Y_{ℓ,r}(q)` for `ℓ = 0..=a_n` at a floating point `q`.
///
/// The residue terms cancel over many orders of magnitude once `q` is close
/// to 1, so the sums run in [`Wide`] precision and only the final values are
/// rounded to `f64`.
pub fn exit_weights(seq: &StartSequence, r: i64, q: f64) -> Result<Vec<f64>> {
    if !(q > 0.0) || q == 1.0 || !q.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "q must be positive, finite and different from 1, got {q}"
        )));
    }
    if r < 1 {
        return Err(Error::InvalidArgument(format!("r must be >= 1, got {r}")));
    }
    let qw = Wide::from_f64(q);
    Ok((0..=seq.last())
        .map(|ell| {
            let h = h_generic(seq, ell, &qw, q > 1.0, false);
            h.mul(&y_generic(ell, r, &qw)).to_f64()
        })
        .collect())
}

/// `H_{n,ℓ}(q)` for `ℓ = 0..=a_n` at a floating point `q`, summed in [`Wide`].
pub fn one_point_H_float(seq: &StartSequence, q: f64) -> Result<Vec<f64>> {
    if !(q > 0.0) || q == 1.0 || !q.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "q must be positive, finite and different from 1, got {q}"
        )));
    }
    let qw = Wide::from_f64(q);
    Ok((0..=seq.last())
        .map(|ell| h_generic(seq, ell, &qw, q > 1.0, false).to_f64())
        .collect())
}

/// Most likely exit abscissa `argmax_ℓ H_{n,ℓ} Y_{ℓ,r}`; ties go to the smallest `ℓ`.
pub fn most_likely_exit(seq: &StartSequence, r: i64, q: f64) -> Result<i64> {
    let w = exit_weights(seq, r, q)?;
    let mut best = 0;
    for (ell, v) in w.iter().enumerate() {
        if *v > w[best] {
            best = ell;
        }
    }
    Ok(best as i64)
}
