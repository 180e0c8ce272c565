use super::arctic::Curve;
use super::domains::{Branch, TDomain};
use super::xfunc::{xeval, XEval};
use super::StartDensity;
use crate::error::{Error, Result};

/// Rescaled exit data of the perturbed top path: exit abscissa `ξ`, endpoint
/// shift `z`, and the free-trajectory coordinates `(μ, φ)` of its start.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingVars {
    pub xi: f64,
    pub z: f64,
    pub mu: f64,
    pub phi: f64,
}

fn check_qq(qq: f64) -> Result<f64> {
    if !(qq > 0.0 && qq.is_finite()) || qq == 1.0 {
        return Err(Error::InvalidArgument(format!(
            "qq must be positive, finite and different from 1, got {qq}"
        )));
    }
    Ok(qq.ln())
}

fn log_q(v: f64, c: f64, what: &str) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v.ln() / c)
    } else {
        Err(Error::Domain(format!("{what} = {v} is not positive")))
    }
}

/// `ξ` from `𝔮^ξ = t(𝔮x − 1)/(x − 1)`, shared by both branches.
fn xi_of(v: &XEval, c: f64, t: f64) -> Result<f64> {
    let (a, b) = (v.qx_minus_one(), v.x_minus_one());
    let ratio = t * a / b;
    if !(ratio > 0.0) || !ratio.is_finite() {
        return Err(Error::Domain(format!("q^xi = {ratio} is not positive")));
    }
    Ok((t.abs().ln() + a.abs().ln() - b.abs().ln()) / c)
}

/// Exit parameters on the right branch:
/// `𝔮^ξ = t(𝔮x − 1)/(x − 1)`, `𝔮^z = (t + x − 1)/(t 𝔮 x)`.
pub fn exit_params_right(d: &StartDensity, qq: f64, t: f64) -> Result<ScalingVars> {
    let c = check_qq(qq)?;
    let v = xeval(d, qq, t)?;
    let xi = xi_of(&v, c, t)?;
    // 𝔮^z = (1 + (x − 1)/t) / (𝔮x)
    let w = v.x_minus_one() / t;
    if !(w > -1.0) || v.sign < 0.0 {
        return Err(Error::Domain(format!("q^z is not positive at t = {t}")));
    }
    let z = (w.ln_1p() - v.log_qx) / c;
    Ok(ScalingVars { xi, z, mu: 0.0, phi: z })
}

/// Exit parameters on the left branch: `𝔮^ξ` as on the right,
/// `𝔮^z = t / (𝔮 (t x + 𝔮^{α(1)}(1 − x)))`.
pub fn exit_params_left(d: &StartDensity, qq: f64, t: f64) -> Result<ScalingVars> {
    let c = check_qq(qq)?;
    let v = xeval(d, qq, t)?;
    let xi = xi_of(&v, c, t)?;
    let x = v.x();
    let a1 = qq.powf(d.alpha_one());
    // 𝔮^z = 1 / (𝔮x (1 + 𝔮^{α(1)}(1 − x)/(t x)))
    let w = -a1 * v.x_minus_one() / (t * x);
    if !(w > -1.0) || v.sign < 0.0 {
        return Err(Error::Domain(format!("q^z is not positive at t = {t}")));
    }
    let z = -(w.ln_1p() + v.log_qx) / c;
    Ok(ScalingVars { xi, z, mu: d.alpha_one() + 1.0 + z, phi: z })
}

/// Tangent line of the family through parameter `t`:
/// `x 𝔮^Y + ((1 − x)/t) 𝔮^X = 1`, with `X` swept over `[0, α(1) + 1]`.
/// Abscissas where `Y` is not real are skipped.
pub fn tangent_curve(d: &StartDensity, qq: f64, t: f64, n_samples: usize) -> Result<Curve> {
    let c = check_qq(qq)?;
    let x = xeval(d, qq, t)?.x();
    let hi = d.alpha_one() + 1.0;
    let n = n_samples.max(2);
    let mut curve = Curve {
        points: Vec::with_capacity(n),
        domain: TDomain { lo: t, hi: t, branch: Branch::Right, sign_of_x: x.signum() },
        qq,
        skipped: Vec::new(),
    };
    for j in 0..n {
        let xx = hi * j as f64 / (n - 1) as f64;
        let arg = (1.0 - (1.0 - x) * (xx * c).exp() / t) / x;
        if arg > 0.0 {
            curve.points.push((t, xx, arg.ln() / c));
        } else {
            curve.skipped.push(xx);
        }
    }
    Ok(curve)
}

/// `Y` on the tangent line at `t` above abscissa `X`.
pub fn tangent_y(d: &StartDensity, qq: f64, t: f64, xx: f64) -> Result<f64> {
    let c = check_qq(qq)?;
    let x = xeval(d, qq, t)?.x();
    log_q((1.0 - (1.0 - x) * (xx * c).exp() / t) / x, c, "q^Y")
}

/// Most likely free trajectory from `(0, 1 + z)` to `(ξ, 1)`:
/// `(1 − 𝔮^X)/(1 − 𝔮^ξ) + (1 − 𝔮^{Y−1})/(1 − 𝔮^z) = 1`, `X ∈ [0, ξ]`.
pub fn geodesic(qq: f64, xi: f64, z: f64, n_samples: usize) -> Result<Curve> {
    let c = check_qq(qq)?;
    if !(xi > 0.0 && z > 0.0) {
        return Err(Error::InvalidArgument(format!("xi and z must be positive, got {xi}, {z}")));
    }
    let n = n_samples.max(2);
    let (exi, ez) = ((xi * c).exp_m1(), (z * c).exp_m1());
    let mut points = Vec::with_capacity(n);
    for j in 0..n {
        let xx = xi * j as f64 / (n - 1) as f64;
        let r = (xx * c).exp_m1() / exi;
        let y = 1.0 + (ez * (1.0 - r)).ln_1p() / c;
        points.push((xx, xx, y));
    }
    Ok(Curve {
        points,
        domain: TDomain { lo: 0.0, hi: xi, branch: Branch::Right, sign_of_x: 1.0 },
        qq,
        skipped: Vec::new(),
    })
}

/// Left-branch free trajectory from `(ξ, 1)` to `(α(1) + 1 + z, 1 + z)`:
/// the right-branch geodesic in reflected coordinates
/// `X′ = α(1) + Y − X`, `𝔮′ = 1/𝔮`, `ξ′ = α(1) + 1 − ξ`.
pub fn geodesic_left(alpha_one: f64, qq: f64, xi: f64, z: f64, n_samples: usize) -> Result<Curve> {
    let mut g = geodesic(1.0 / qq, alpha_one + 1.0 - xi, z, n_samples)?;
    for p in g.points.iter_mut() {
        p.1 = alpha_one + p.2 - p.1;
    }
    g.points.reverse();
    g.qq = qq;
    g.domain.branch = Branch::Left;
    Ok(g)
}
