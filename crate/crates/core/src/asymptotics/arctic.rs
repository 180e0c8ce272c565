use super::domains::TDomain;
use super::xfunc::xeval;
use super::StartDensity;
use crate::error::{Error, Result};

/// Relative size below which the arctic denominator counts as vanishing.
pub const SINGULAR_TOL: f64 = 1e-14;

/// Point `(X, Y)` of the arctic curve at parameter `t`:
///
/// `𝔮^X = t² x′ / (t x′ + x(1 − x))`, `𝔮^Y = (t x′ + 1 − x) / (t x′ + x(1 − x))`.
pub fn arctic_point(d: &StartDensity, qq: f64, t: f64) -> Result<(f64, f64)> {
    let (qx, qy) = arctic_powers(d, qq, t)?;
    if !(qx > 0.0 && qy > 0.0) {
        return Err(Error::Domain(format!("arctic point at t = {t} is not real")));
    }
    let c = qq.ln();
    Ok((qx.ln() / c, qy.ln() / c))
}

/// `(𝔮^X, 𝔮^Y)` at `t`, before taking logarithms.
pub fn arctic_powers(d: &StartDensity, qq: f64, t: f64) -> Result<(f64, f64)> {
    let v = xeval(d, qq, t)?;
    if v.e.abs() <= SINGULAR_TOL * v.e_scale || v.e == 0.0 {
        return Err(Error::Singular(t));
    }
    let x = v.x();
    let qx = t * v.t_dlog / v.e;
    let qy = if v.sign > 0.0 && v.log_abs.abs() < 0.5 {
        // near x = 1 the numerator is E + (x − 1) t x′/x
        1.0 / x + v.log_abs.exp_m1() * v.t_dlog / (x * v.e)
    } else if v.sign > 0.0 {
        (x * v.t_dlog - v.log_abs.exp_m1()) / (x * v.e)
    } else {
        (x * v.t_dlog + 1.0 - x) / (x * v.e)
    };
    Ok((qx, qy))
}

/// Residual of `x 𝔮^Y + ((1 − x)/t) 𝔮^X − 1` at an arctic point, relative to
/// the size of its terms.
pub fn envelope_residual(d: &StartDensity, qq: f64, t: f64) -> Result<f64> {
    let (qx, qy) = arctic_powers(d, qq, t)?;
    let v = xeval(d, qq, t)?;
    let a = v.x() * qy;
    let b = -v.x_minus_one() / t * qx;
    Ok((a + b - 1.0).abs() / (a.abs() + b.abs() + 1.0))
}

/// Residual of the `t`-derivative of the tangent family at the arctic point,
/// `x′ 𝔮^Y − (x′/t + (1 − x)/t²) 𝔮^X`, relative to its terms.
pub fn tangency_residual(d: &StartDensity, qq: f64, t: f64) -> Result<f64> {
    let (qx, qy) = arctic_powers(d, qq, t)?;
    let v = xeval(d, qq, t)?;
    let x = v.x();
    // multiply through by t/x: tL' 𝔮^Y − (tL' + (1 − x)/x) 𝔮^X / t
    let a = v.t_dlog * qy;
    let b1 = v.t_dlog * qx / t;
    let b2 = -v.x_minus_one() / x * qx / t;
    Ok((a - b1 - b2).abs() / (a.abs() + b1.abs() + b2.abs()))
}

/// A sampled piece of arctic curve.
#[derive(Clone, Debug)]
pub struct Curve {
    /// `(t, X, Y)` in increasing `t`.
    pub points: Vec<(f64, f64, f64)>,
    pub domain: TDomain,
    pub qq: f64,
    /// Parameter values dropped as singular or non-real.
    pub skipped: Vec<f64>,
}

impl Curve {
    pub fn xy(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|p| (p.1, p.2)).collect()
    }

    /// Splits the point sequence wherever consecutive points are further
    /// apart than `max_gap`.
    pub fn polylines(&self, max_gap: f64) -> Vec<Vec<(f64, f64)>> {
        let mut out: Vec<Vec<(f64, f64)>> = Vec::new();
        let mut cur: Vec<(f64, f64)> = Vec::new();
        for p in self.xy() {
            if let Some(last) = cur.last() {
                if (p.0 - last.0).hypot(p.1 - last.1) > max_gap {
                    out.push(std::mem::take(&mut cur));
                }
            }
            cur.push(p);
        }
        if !cur.is_empty() {
            out.push(cur);
        }
        out
    }

    /// Pairs of non-adjacent segments of the sampled polyline that cross.
    pub fn self_intersections(&self) -> Vec<(usize, usize)> {
        let xy = self.xy();
        let mut out = Vec::new();
        for i in 0..xy.len().saturating_sub(1) {
            for j in i + 2..xy.len() - 1 {
                if segments_cross(xy[i], xy[i + 1], xy[j], xy[j + 1]) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    let (d1, d2) = (orient(a, b, c), orient(a, b, d));
    let (d3, d4) = (orient(c, d, a), orient(c, d, b));
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Sampling controls for [`arctic_curve_with`].
#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    pub n_samples: usize,
    /// Reach toward infinite or zero ends, in units of `|log 𝔮|`.
    pub tau_cap: f64,
    /// Refine until consecutive points are at most this far apart.
    pub max_step: f64,
    /// Upper bound on points after refinement, as a multiple of `n_samples`.
    pub refine_factor: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { n_samples: 400, tau_cap: 40.0, max_step: 0.01, refine_factor: 8 }
    }
}

/// Samples the arctic curve over one `t` domain with default options.
pub fn arctic_curve(d: &StartDensity, qq: f64, dom: &TDomain, n_samples: usize) -> Curve {
    arctic_curve_with(d, qq, dom, SampleOptions { n_samples, ..Default::default() })
}

/// One sign-definite stretch of the domain: `t = sign · e^λ`, `λ ∈ (lo, hi)`,
/// with flags for which ends are genuine finite nonzero endpoints.
struct Stretch {
    sign: f64,
    lo: f64,
    hi: f64,
    lo_finite: bool,
    hi_finite: bool,
}

fn stretches(dom: &TDomain, reach: f64) -> Vec<Stretch> {
    let mut out = Vec::new();
    let mut push = |a: f64, b: f64| {
        // a < b, same sign or touching zero
        let sign = if a >= 0.0 && b > 0.0 { 1.0 } else { -1.0 };
        let (m0, m1) = if sign > 0.0 { (a, b) } else { (-b, -a) };
        let lo_finite = m0 > 0.0;
        let hi_finite = m1.is_finite();
        let lo = if lo_finite { m0.ln() } else if hi_finite { m1.ln() - reach } else { -reach };
        let hi = if hi_finite { m1.ln() } else if lo_finite { m0.ln() + reach } else { reach };
        out.push(Stretch { sign, lo, hi, lo_finite, hi_finite });
    };
    if dom.lo < 0.0 && dom.hi > 0.0 {
        push(dom.lo, 0.0);
        push(0.0, dom.hi);
    } else {
        push(dom.lo, dom.hi);
    }
    out
}

/// Samples the arctic curve over one `t` domain.
///
/// `t = ±e^λ` with `λ` on an affine grid, plus points approaching each
/// finite endpoint geometrically; unbounded ends reach `tau_cap |log 𝔮|`
/// (at least 40, at most 300) in `λ`. Intervals whose images are further
/// apart than `max_step` are bisected. Singular parameters are skipped.
pub fn arctic_curve_with(d: &StartDensity, qq: f64, dom: &TDomain, opts: SampleOptions) -> Curve {
    let n = opts.n_samples.max(2);
    let reach = (opts.tau_cap * qq.ln().abs()).clamp(40.0, 300.0);
    let mut lams: Vec<(usize, f64)> = Vec::new();
    let st = stretches(dom, reach);
    let per = n / st.len();
    for (si, s) in st.iter().enumerate() {
        let n_ends = s.lo_finite as usize + s.hi_finite as usize;
        let n_end = if n_ends == 0 { 0 } else { per / 4 };
        let n_mid = per - n_end * n_ends;
        let width = s.hi - s.lo;
        for j in 0..n_mid {
            lams.push((si, s.lo + width * (j as f64 + 0.5) / n_mid as f64));
        }
        let dmax = (0.5 * width).min(0.5);
        for j in 0..n_end {
            let frac = j as f64 / (n_end.max(2) - 1) as f64;
            let delta = (1e-15f64.ln() + frac * (dmax.ln() - 1e-15f64.ln())).exp();
            if s.lo_finite {
                lams.push((si, s.lo + delta.ln_1p()));
            }
            if s.hi_finite {
                lams.push((si, s.hi + (-delta).ln_1p()));
            }
        }
    }
    let t_of = |si: usize, lam: f64| st[si].sign * lam.exp();
    let eval = |t: f64| arctic_point(d, qq, t);

    let mut pts: Vec<(f64, Option<(f64, f64)>, usize, f64)> = lams
        .into_iter()
        .map(|(si, lam)| {
            let t = t_of(si, lam);
            (t, eval(t).ok(), si, lam)
        })
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts.dedup_by(|a, b| a.0 == b.0);

    let budget = n * opts.refine_factor;
    loop {
        let mut inserted = Vec::new();
        for w in pts.windows(2) {
            let (Some(p), Some(q)) = (w[0].1, w[1].1) else { continue };
            if w[0].2 != w[1].2 || (p.0 - q.0).hypot(p.1 - q.1) <= opts.max_step {
                continue;
            }
            let lam = 0.5 * (w[0].3 + w[1].3);
            let t = t_of(w[0].2, lam);
            if t != w[0].0 && t != w[1].0 {
                inserted.push((t, eval(t).ok(), w[0].2, lam));
            }
        }
        if inserted.is_empty() || pts.len() + inserted.len() > budget {
            break;
        }
        pts.extend(inserted);
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    let mut curve = Curve { points: Vec::new(), domain: *dom, qq, skipped: Vec::new() };
    for (t, v, _, _) in pts {
        match v {
            Some((x, y)) if x.is_finite() && y.is_finite() => curve.points.push((t, x, y)),
            _ => curve.skipped.push(t),
        }
    }
    curve
}

/// Every branch and window of the curve.
pub fn arctic_curves(d: &StartDensity, qq: f64, opts: SampleOptions) -> Result<Vec<Curve>> {
    Ok(super::t_domains(d, qq)?
        .iter()
        .map(|dom| arctic_curve_with(d, qq, dom, opts))
        .collect())
}
