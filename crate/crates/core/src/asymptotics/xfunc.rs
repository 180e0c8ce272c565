use super::quad::integrate;
use super::{Piece, StartDensity};
use crate::error::{Error, Result};

/// `x(t)` in logarithmic form, with the combinations the arctic formulas
/// need evaluated without cancellation near `t = 0` and `|t| → ∞`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct XEval {
    pub sign: f64,
    /// `log |x|`
    pub log_abs: f64,
    /// `log |𝔮 x|`, kept separately since `𝔮 x → 1` as `|t| → ∞`
    pub log_qx: f64,
    /// `t x′ / x`
    pub t_dlog: f64,
    /// `t x′/x + 1 − x`, i.e. `(t x′ + x(1 − x)) / x`
    pub e: f64,
    /// magnitude against which `e` cancels
    pub e_scale: f64,
}

impl XEval {
    pub fn x(&self) -> f64 {
        self.sign * self.log_abs.exp()
    }

    /// `𝔮 x − 1` without cancellation.
    pub fn qx_minus_one(&self) -> f64 {
        if self.sign > 0.0 {
            self.log_qx.exp_m1()
        } else {
            -self.log_qx.exp() - 1.0
        }
    }

    /// `x − 1` without cancellation.
    pub fn x_minus_one(&self) -> f64 {
        if self.sign > 0.0 {
            self.log_abs.exp_m1()
        } else {
            -self.log_abs.exp() - 1.0
        }
    }
}

/// `−w/(1−w) − ln(1−w)` for small `|w|`, by its power series.
fn h_series(w: f64) -> f64 {
    let mut acc = 0.0;
    let mut wk = w;
    for k in 2..40 {
        wk *= w;
        acc -= (k as f64 - 1.0) / k as f64 * wk;
        if wk.abs() < 1e-18 * acc.abs() {
            break;
        }
    }
    acc
}

/// `expm1(l) − l`, accurate for small `l`.
fn expm1_minus(l: f64) -> f64 {
    if l.abs() > 0.1 {
        return l.exp_m1() - l;
    }
    let mut term = l;
    let mut acc = 0.0;
    for k in 2..30 {
        term *= l / k as f64;
        acc += term;
        if term.abs() < 1e-18 * acc.abs() {
            break;
        }
    }
    acc
}

fn check_qq(qq: f64) -> Result<f64> {
    if !(qq > 0.0 && qq.is_finite()) || qq == 1.0 {
        return Err(Error::InvalidArgument(format!(
            "qq must be positive, finite and different from 1, got {qq}"
        )));
    }
    Ok(qq.ln())
}

pub(crate) fn xeval(d: &StartDensity, qq: f64, t: f64) -> Result<XEval> {
    let c = check_qq(qq)?;
    if !t.is_finite() {
        return Err(Error::Domain(format!("t must be finite, got {t}")));
    }
    let theta = d.theta();
    let poles: Vec<f64> = theta.iter().map(|th| (th * c).exp()).collect();
    let smallest = poles.iter().copied().fold(f64::INFINITY, f64::min);
    let near_zero = t.abs() <= 0.5 * smallest;
    let mut sign = 1.0;
    let mut log_abs = 0.0;
    let mut log_ratio = 0.0;
    let mut t_dlog = 0.0;
    let mut k = 0.0;
    for (i, piece) in d.pieces().iter().enumerate() {
        let Piece::Linear { p, .. } = *piece else { continue };
        let (a0, a1) = (poles[i], poles[i + 1]);
        let (r0, r1) = (t - a0, t - a1);
        if r0 == 0.0 || r1 == 0.0 {
            return Err(Error::Domain(format!("t = {t} is a breakpoint of x(t)")));
        }
        if (r0 < 0.0) != (r1 < 0.0) {
            if p != 1.0 {
                return Err(Error::Domain(format!(
                    "t = {t} lies inside a slope-{p} interval where x(t) is not real"
                )));
            }
            sign = -sign;
        }
        let inv_p = 1.0 / p;
        // t d/dt log((t − a1)/(t − a0)) = t (a1 − a0) / ((t − a1)(t − a0))
        let td = t * (a1 - a0) / (r1 * r0);
        let lr = if near_zero {
            (-t / a1).ln_1p() - (-t / a0).ln_1p()
        } else {
            let s = (a0 - a1) / r0;
            let lratio = if s.abs() < 0.5 { s.ln_1p() } else { (r1 / r0).abs().ln() };
            log_ratio += inv_p * lratio;
            lratio - (theta[i + 1] - theta[i]) * c
        };
        log_abs += inv_p * lr;
        t_dlog += inv_p * td;
        if near_zero {
            k += inv_p * (h_series_or_direct(t / a1) - h_series_or_direct(t / a0));
        }
    }
    let (e, e_scale) = if sign > 0.0 {
        let kk = if near_zero { k } else { t_dlog - log_abs };
        let em = expm1_minus(log_abs);
        (kk - em, kk.abs() + em.abs())
    } else {
        let one_minus_x = 1.0 + log_abs.exp();
        (t_dlog + one_minus_x, t_dlog.abs() + one_minus_x.abs())
    };
    let log_qx = if near_zero { log_abs + c } else { log_ratio };
    Ok(XEval {
        sign,
        log_abs,
        log_qx,
        t_dlog,
        e,
        e_scale,
    })
}

fn h_series_or_direct(w: f64) -> f64 {
    if w.abs() < 0.1 {
        h_series(w)
    } else {
        -w / (1.0 - w) - (-w).ln_1p()
    }
}

/// `x(t) = 𝔮^{-t ∫_0^1 du/(t − 𝔮^{α(u)})}` from the closed-form product.
///
/// Negative exactly when `t` lies inside the `𝔮^α`-range of a slope-1 piece.
pub fn x_of_t(d: &StartDensity, qq: f64, t: f64) -> Result<f64> {
    Ok(xeval(d, qq, t)?.x())
}

/// `dx/dt` from the logarithmic derivative of the closed form.
pub fn dx_dt(d: &StartDensity, qq: f64, t: f64) -> Result<f64> {
    let e = xeval(d, qq, t)?;
    Ok(e.x() * e.t_dlog / t)
}

/// `x(t)` by direct quadrature of its defining integral.
///
/// When `t` sits inside the range of a slope-1 piece the integral is taken
/// as a principal value and the sign is `−1` per such piece.
pub fn x_of_t_quadrature(d: &StartDensity, qq: f64, t: f64) -> Result<f64> {
    let c = check_qq(qq)?;
    let theta = d.theta();
    let ub = d.u_breaks();
    let mut total = 0.0;
    let mut sign = 1.0;
    for (i, piece) in d.pieces().iter().enumerate() {
        let Piece::Linear { p, .. } = *piece else { continue };
        let (u0, u1, th0) = (ub[i], ub[i + 1], theta[i]);
        let alpha = move |u: f64| th0 + p * (u - u0);
        let inside = t > 0.0 && {
            let ts = t.ln() / c;
            let (lo, hi) = if theta[i] < theta[i + 1] { (theta[i], theta[i + 1]) } else { (theta[i + 1], theta[i]) };
            ts > lo && ts < hi
        };
        if !inside {
            total += integrate(|u| 1.0 / (t - (alpha(u) * c).exp()), u0, u1, &[], 1e-14)?;
            continue;
        }
        if p != 1.0 {
            return Err(Error::Domain(format!("t = {t} lies inside a slope-{p} interval")));
        }
        sign = -sign;
        // near u*, t − 𝔮^{α(u)} ≈ −t c p (u − u*)
        let us = u0 + (t.ln() / c - th0) / p;
        let k = t * c * p;
        // t − 𝔮^{α(u)} = −t expm1(c p (u − u*)), regularised in closed form
        let reg = |u: f64| {
            let w = c * p * (u - us);
            if w == 0.0 {
                return 0.5 / t;
            }
            (1.0 / w - 1.0 / w.exp_m1()) / t
        };
        let smooth = integrate(reg, u0, u1, &[us], 1e-14)?;
        total += smooth - ((u1 - us) / (us - u0)).ln() / k;
    }
    Ok(sign * (-t * c * total).exp())
}
