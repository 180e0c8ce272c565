use super::quad::integrate;
use super::{Piece, StartDensity};
use crate::error::{Error, Result};

const ATOL: f64 = 1e-13;

/// `S₀(t, ξ) = (ξ − ½) log 𝔮 + ∫₀¹ log |(t 𝔮^{u−ξ} − 1) / (t − 𝔮^{α(u)})| du`,
/// the `t`-dependent part of the one-point action.
pub fn action_s0(d: &StartDensity, qq: f64, t: f64, xi: f64) -> Result<f64> {
    let c = qq.ln();
    let theta = d.theta();
    let ub = d.u_breaks();
    let mut total = (xi - 0.5) * c;
    // log singularity where t 𝔮^{u−ξ} = 1
    let mut brk = Vec::new();
    if t > 0.0 {
        let us = xi - t.ln() / c;
        if us > 0.0 && us < 1.0 {
            brk.push(us);
        }
    }
    for (i, piece) in d.pieces().iter().enumerate() {
        let Piece::Linear { p, .. } = *piece else { continue };
        let (u0, u1, th0) = (ub[i], ub[i + 1], theta[i]);
        let inner: Vec<f64> = brk.iter().copied().filter(|&b| b > u0 && b < u1).collect();
        let f = |u: f64| {
            let num = (t * ((u - xi) * c).exp() - 1.0).abs().ln();
            let den = (t - ((th0 + p * (u - u0)) * c).exp()).abs().ln();
            num - den
        };
        total += integrate(f, u0, u1, &inner, ATOL)?;
    }
    if !total.is_finite() {
        return Err(Error::Domain(format!("S0 not finite at t = {t}, xi = {xi}")));
    }
    Ok(total)
}

/// `∫₀^b log |(𝔮^{u+z} − 1)/(𝔮^u − 1)| du`, with the `log u` endpoint
/// singularity integrated analytically.
fn free_integral(c: f64, b: f64, z: f64) -> Result<f64> {
    if b == 0.0 {
        return Ok(0.0);
    }
    if b < 0.0 {
        return Err(Error::Domain(format!("upper limit {b} is negative")));
    }
    let ez = (z * c).exp();
    let f = |u: f64| {
        let num = (ez * (u * c).exp() - 1.0).abs().ln();
        let den = if u == 0.0 { c.abs().ln() } else { ((u * c).exp_m1() / u).abs().ln() };
        num - den
    };
    let smooth = integrate(f, 0.0, b, &[], ATOL)?;
    Ok(smooth - (b * b.ln() - b))
}

/// `S₁(ξ, z) = ∫₀^ξ log |(𝔮^{u+z} − 1)/(𝔮^u − 1)| du`, the free-trajectory
/// action on the right branch.
pub fn action_s1(qq: f64, xi: f64, z: f64) -> Result<f64> {
    free_integral(qq.ln(), xi, z)
}

/// Left-branch free action
/// `S̃₁ = z(ξ + z/2) log 𝔮 + ∫₀^{α(1)+1−ξ} log |(𝔮^{u+z} − 1)/(𝔮^u − 1)| du`.
pub fn action_s1_tilde(d: &StartDensity, qq: f64, xi: f64, z: f64) -> Result<f64> {
    let c = qq.ln();
    Ok(z * (xi + 0.5 * z) * c + free_integral(c, d.alpha_one() + 1.0 - xi, z)?)
}

/// Relative step of the central differences below.
pub const FD_STEP: f64 = 1e-5;

/// `t ∂S₀/∂t` by central difference with step `FD_STEP · |t|`.
pub fn residual_t(d: &StartDensity, qq: f64, t: f64, xi: f64) -> Result<f64> {
    let h = FD_STEP * t.abs();
    let (sp, sm) = (action_s0(d, qq, t + h, xi)?, action_s0(d, qq, t - h, xi)?);
    Ok(t * (sp - sm) / (2.0 * h))
}

/// `∂(S₀ + S₁)/∂ξ` (right) or `∂(S₀ + S̃₁)/∂ξ` (left) by central difference
/// with step `FD_STEP`.
pub fn residual_xi(d: &StartDensity, qq: f64, t: f64, xi: f64, z: f64, left: bool) -> Result<f64> {
    let s = |xi: f64| -> Result<f64> {
        let s1 = if left { action_s1_tilde(d, qq, xi, z)? } else { action_s1(qq, xi, z)? };
        Ok(action_s0(d, qq, t, xi)? + s1)
    };
    Ok((s(xi + FD_STEP)? - s(xi - FD_STEP)?) / (2.0 * FD_STEP))
}
