use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use super::config::{Model, ModelConfig, QSpec, Task};
use super::csv::{fmt_f64, fmt_rational, Table};
use super::svg::{render, Layer};
use crate::asymptotics::{
    arctic_curve_with, dx_dt, envelope_residual, exit_params_left, exit_params_right, geodesic,
    geodesic_left, limit_curve, m_vertices, n_vertices, residual_t, residual_xi, t_domains,
    tangent_curve, window_limit, x_of_t, x_of_t_quadrature, Branch, LimitKind, SampleOptions,
    StartDensity, TDomain,
};
use crate::error::{Error, Result};
use crate::nilp::{
    dual_sequence, enumerate_configs, exit_weights, most_likely_exit, one_point_H, one_point_H_det,
    one_point_H_float, one_point_Htilde, partition_det, partition_product, partition_product_poly,
    zident_prefactor_exponent, StartSequence, MAX_ENUM_AN, MAX_ENUM_N,
};
use crate::qcore::{Scalar, Wide};
use crate::sampler::{estimate_burn_in, run_chain};

/// Largest `n` for which `exact` also expands the LGV determinant.
const DET_CHECK_MAX_N: usize = 10;

/// Output of a subcommand: named files plus a human-readable summary.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub files: Vec<(String, String)>,
    pub summary: Vec<String>,
    /// False when a verification check failed.
    pub ok: bool,
}

impl Report {
    fn new() -> Self {
        Report { ok: true, ..Default::default() }
    }

    fn file(&mut self, name: &str, contents: String) {
        self.files.push((name.to_string(), contents));
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.files.iter().find(|f| f.0 == name).map(|f| f.1.as_str())
    }
}

fn finite(cfg: &ModelConfig) -> Result<(&StartSequence, &QSpec)> {
    match &cfg.model {
        Model::Finite { seq, q } => Ok((seq, q)),
        Model::Scaled { .. } => Err(Error::InvalidArgument("this command needs a [finite] model".into())),
    }
}

fn scaled(cfg: &ModelConfig) -> Result<(&StartDensity, f64)> {
    match &cfg.model {
        Model::Scaled { density, qq } => Ok((density, *qq)),
        Model::Finite { .. } => Err(Error::InvalidArgument("this command needs a [scaled] model".into())),
    }
}

/// Partition function, one-point tables and exit weights of a finite model.
pub fn cmd_exact(cfg: &ModelConfig) -> Result<Report> {
    let (seq, q) = finite(cfg)?;
    let mut rep = Report::new();
    let z = partition_product_poly(seq);
    let mut t = Table::new(&["power", "coefficient"]);
    for (k, c) in z.coeffs().iter().enumerate() {
        t.push(vec![k.to_string(), c.to_string()]);
    }
    rep.file("partition.csv", t.to_csv());
    rep.summary.push(format!("sequence {seq}, Z has degree {}", z.degree().unwrap_or(0)));
    if seq.n() <= DET_CHECK_MAX_N {
        let same = partition_det(seq) == z;
        rep.summary.push(format!("determinant polynomial: {}", if same { "agrees" } else { "DISAGREES" }));
        rep.ok &= same;
    }

    let n = seq.n() as i64;
    let mut h = Table::new(&["ell", "H"]);
    let mut ht = Table::new(&["ell", "Htilde"]);
    match q {
        QSpec::Exact(qr) => {
            let zq = z.eval(qr);
            let prod = partition_product(seq, qr)?;
            rep.summary.push(format!("Z(q) = {}", fmt_rational(&zq)));
            rep.summary.push(format!("product formula: {}", if prod == zq { "agrees" } else { "DISAGREES" }));
            rep.ok &= prod == zq;
            let dual = partition_det(&dual_sequence(seq)).eval(&(BigRational::one() / qr));
            let zident = qr.powi(zident_prefactor_exponent(seq)) * dual == zq;
            rep.summary.push(format!("dual-sequence identity: {}", if zident { "holds" } else { "FAILS" }));
            rep.ok &= zident;
            for ell in 0..=seq.last() {
                h.push(vec![ell.to_string(), fmt_rational(&one_point_H(seq, ell, qr)?)]);
            }
            for ell in n..=seq.last() + n {
                ht.push(vec![ell.to_string(), fmt_rational(&one_point_Htilde(seq, ell, qr)?)]);
            }
        }
        QSpec::Root { .. } => {
            let qf = q.to_f64();
            let zw = z.eval(&Wide::from_f64(qf));
            rep.summary.push(format!("q = {}, ln Z(q) = {}", fmt_f64(qf), fmt_f64(zw.0.ln().to_f64().value())));
            for (ell, v) in one_point_H_float(seq, qf)?.iter().enumerate() {
                h.push(vec![ell.to_string(), fmt_f64(*v)]);
            }
            // H̃(q; a)_ℓ = H(1/q; ã)_{a_n+n−ℓ}
            let dual = one_point_H_float(&dual_sequence(seq), 1.0 / qf)?;
            for ell in n..=seq.last() + n {
                ht.push(vec![ell.to_string(), fmt_f64(dual[(seq.last() + n - ell) as usize])]);
            }
        }
    }
    rep.file("one_point.csv", h.to_csv());
    rep.file("one_point_dual.csv", ht.to_csv());

    let r = cfg.task.r;
    let w = exit_weights(seq, r, q.to_f64())?;
    let total: f64 = w.iter().sum();
    let mut e = Table::new(&["ell", "weight", "probability"]);
    for (ell, v) in w.iter().enumerate() {
        e.push(vec![ell.to_string(), fmt_f64(*v), fmt_f64(v / total)]);
    }
    rep.file("exit.csv", e.to_csv());
    rep.summary.push(format!("most likely exit for r = {r}: {}", most_likely_exit(seq, r, q.to_f64())?));
    Ok(rep)
}

fn burn_in_for(seq: &StartSequence, q: f64, task: &Task) -> u64 {
    if let Some(b) = task.burn_in {
        return b;
    }
    let pilot = (task.sweeps / 10).max(20);
    let (s, _) = run_chain(seq, q, pilot, 0, task.seed ^ 0x9e37_79b9_7f4a_7c15);
    estimate_burn_in(&s.area_series).min(task.sweeps / 2)
}

/// Monte Carlo run: density field and area series, plus the distance to the
/// exact distribution when the system is small enough to enumerate.
pub fn cmd_sample(cfg: &ModelConfig) -> Result<Report> {
    let (seq, q) = finite(cfg)?;
    let qf = q.to_f64();
    let task = &cfg.task;
    let burn = burn_in_for(seq, qf, task);
    let (summary, dens) = run_chain(seq, qf, task.sweeps, burn, task.seed);
    let mut rep = Report::new();
    let mut d = Table::new(&["x", "y", "count"]);
    for y in 0..dens.height {
        for x in 0..dens.width {
            d.push(vec![x.to_string(), y.to_string(), dens.get(x, y).to_string()]);
        }
    }
    rep.file("density.csv", d.to_csv());
    let mut a = Table::new(&["sweep", "area"]);
    for (k, v) in summary.area_series.iter().enumerate() {
        a.push(vec![k.to_string(), v.to_string()]);
    }
    rep.file("area.csv", a.to_csv());
    rep.summary.push(format!(
        "{} sweeps after {} burn-in, acceptance {:.4}",
        dens.sweeps,
        burn,
        summary.accepted as f64 / summary.proposals.max(1) as f64
    ));
    if seq.n() <= MAX_ENUM_N && seq.last() <= MAX_ENUM_AN {
        let tv = tv_to_exact(seq, qf, &summary.config_counts)?;
        rep.summary.push(format!("total variation to the exact distribution: {}", fmt_f64(tv)));
    }
    Ok(rep)
}

/// Total variation between visit counts and the exact `q^area` distribution.
pub fn tv_to_exact(
    seq: &StartSequence,
    q: f64,
    counts: &HashMap<crate::nilp::PathConfig, u64>,
) -> Result<f64> {
    let configs = enumerate_configs(seq, None)?;
    let wmax = configs.iter().map(|c| c.1).max().unwrap_or(0);
    let weights: Vec<f64> = configs.iter().map(|c| q.powi((c.1 - wmax) as i32)).collect();
    let z: f64 = weights.iter().sum();
    let total: u64 = counts.values().sum();
    let mut tv = 0.0;
    for ((c, _), w) in configs.iter().zip(&weights) {
        let emp = *counts.get(c).unwrap_or(&0) as f64 / total.max(1) as f64;
        tv += (emp - w / z).abs();
    }
    Ok(0.5 * tv)
}

fn selected(task: &Task, b: Branch) -> bool {
    let key = match b {
        Branch::Right => "right",
        Branch::Left => "left",
        Branch::Gap(_) | Branch::Filled(_) => "windows",
    };
    task.branches.iter().any(|s| s == key)
}

fn branch_of(doms: &[TDomain], t: f64) -> Option<Branch> {
    doms.iter().find(|d| d.contains(t)).map(|d| d.branch)
}

/// Arctic curve branches, tangent lines, free trajectories and an optional
/// SVG overlay.
pub fn cmd_arctic(cfg: &ModelConfig) -> Result<Report> {
    let (d, qq) = scaled(cfg)?;
    let task = &cfg.task;
    let doms = t_domains(d, qq)?;
    let opts = SampleOptions { n_samples: task.samples, ..Default::default() };
    let mut rep = Report::new();
    let mut layers = Vec::new();
    for dom in doms.iter().filter(|dm| selected(task, dm.branch)) {
        let c = arctic_curve_with(d, qq, dom, opts);
        let label = dom.branch.label();
        let mut t = Table::new(&["branch", "t", "X", "Y"]);
        for &(tt, x, y) in &c.points {
            t.push(vec![label.clone(), fmt_f64(tt), fmt_f64(x), fmt_f64(y)]);
        }
        rep.file(&format!("arctic_{label}.csv"), t.to_csv());
        rep.summary.push(format!("{label}: {} points, {} singular samples skipped", c.points.len(), c.skipped.len()));
        let crossings = c.self_intersections();
        if !crossings.is_empty() {
            rep.summary.push(format!("{label}: curve crosses itself {} times", crossings.len()));
        }
        let color = match dom.branch {
            Branch::Right => "#1f4fbf",
            Branch::Left => "#c0392b",
            _ => "#e67e22",
        };
        for pl in c.polylines(0.25) {
            layers.push(Layer { points: pl, color, width: 2.0, dashed: false });
        }
    }

    let mut z_max: f64 = 0.0;
    if !task.tangent_t.is_empty() {
        let mut t = Table::new(&["t", "X", "Y"]);
        for &tt in &task.tangent_t {
            let c = tangent_curve(d, qq, tt, task.samples)?;
            for &(_, x, y) in &c.points {
                t.push(vec![fmt_f64(tt), fmt_f64(x), fmt_f64(y)]);
            }
            z_max = z_max.max(c.points.iter().map(|p| p.2 - 1.0).fold(0.0, f64::max).min(2.0));
            layers.push(Layer { points: c.xy(), color: "#777777", width: 0.7, dashed: false });
        }
        rep.file("tangents.csv", t.to_csv());
    }
    if !task.geodesic_t.is_empty() {
        let mut t = Table::new(&["t", "xi", "z", "X", "Y"]);
        for &tt in &task.geodesic_t {
            let (s, c) = match branch_of(&doms, tt) {
                Some(Branch::Right) => {
                    let s = exit_params_right(d, qq, tt)?;
                    (s, geodesic(qq, s.xi, s.z, task.samples)?)
                }
                Some(Branch::Left) => {
                    let s = exit_params_left(d, qq, tt)?;
                    (s, geodesic_left(d.alpha_one(), qq, s.xi, s.z, task.samples)?)
                }
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "geodesic_t = {tt} is not on the right or left branch"
                    )))
                }
            };
            for &(_, x, y) in &c.points {
                t.push(vec![fmt_f64(tt), fmt_f64(s.xi), fmt_f64(s.z), fmt_f64(x), fmt_f64(y)]);
            }
            z_max = z_max.max(s.z);
            layers.push(Layer { points: c.xy(), color: "#2e8b57", width: 1.0, dashed: false });
        }
        rep.file("geodesics.csv", t.to_csv());
    }

    if task.svg {
        let a1 = d.alpha_one();
        let kind = if qq < 1.0 { LimitKind::QToZero } else { LimitKind::QToInfinity };
        if let Ok(lim) = limit_curve(d, kind) {
            for pl in lim {
                layers.push(Layer { points: pl, color: "#555555", width: 1.0, dashed: true });
            }
        }
        layers.push(Layer {
            points: vec![(0.0, 0.0), (a1, 0.0), (a1, 1.0), (0.0, 1.0), (0.0, 0.0)],
            color: "#000000",
            width: 1.0,
            dashed: false,
        });
        rep.file("arctic.svg", render(&layers, a1 + z_max, 1.0 + z_max));
    }
    Ok(rep)
}

/// Extreme-`𝔮` limit polylines and their vertices.
pub fn cmd_limits(cfg: &ModelConfig) -> Result<Report> {
    let (d, _) = scaled(cfg)?;
    let mut rep = Report::new();
    let mut t = Table::new(&["limit", "polyline", "X", "Y"]);
    for (kind, name) in [(LimitKind::QToZero, "q_to_0"), (LimitKind::QToInfinity, "q_to_inf")] {
        for (k, pl) in limit_curve(d, kind)?.iter().enumerate() {
            for p in pl {
                t.push(vec![name.into(), k.to_string(), fmt_f64(p.0), fmt_f64(p.1)]);
            }
        }
        for (m, dm) in t_domains(d, 2.0)?.iter().enumerate().skip(2) {
            let piece = match dm.branch {
                Branch::Gap(p) | Branch::Filled(p) => p,
                _ => continue,
            };
            for p in window_limit(d, piece, kind)? {
                t.push(vec![name.into(), format!("window{m}"), fmt_f64(p.0), fmt_f64(p.1)]);
            }
        }
    }
    rep.file("limits.csv", t.to_csv());
    let mut v = Table::new(&["i", "M_X", "M_Y", "N_X", "N_Y"]);
    for (i, (m, n)) in m_vertices(d).iter().zip(n_vertices(d)).enumerate() {
        v.push(vec![i.to_string(), fmt_f64(m.0), fmt_f64(m.1), fmt_f64(n.0), fmt_f64(n.1)]);
    }
    rep.file("vertices.csv", v.to_csv());
    rep.summary.push(format!("{} vertices", m_vertices(d).len()));
    Ok(rep)
}

struct Check {
    name: String,
    residual: f64,
    tol: f64,
}

/// Runs the identity and oracle checks that apply to the configured model
/// and reports each residual against its tolerance.
pub fn cmd_verify(cfg: &ModelConfig) -> Result<Report> {
    let checks = match &cfg.model {
        Model::Finite { seq, q } => verify_finite(seq, q)?,
        Model::Scaled { density, qq } => verify_scaled(density, *qq, cfg.task.samples)?,
    };
    let mut rep = Report::new();
    let mut t = Table::new(&["check", "status", "residual", "tolerance"]);
    for c in &checks {
        let pass = c.residual <= c.tol;
        rep.ok &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        rep.summary.push(format!("{status} {} (residual {:.3e}, tolerance {:.0e})", c.name, c.residual, c.tol));
        t.push(vec![c.name.clone(), status.into(), fmt_f64(c.residual), fmt_f64(c.tol)]);
    }
    rep.file("verify.csv", t.to_csv());
    Ok(rep)
}

fn verify_finite(seq: &StartSequence, q: &QSpec) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let Some(qr) = q.exact() else {
        let qf = q.to_f64();
        let h = one_point_H_float(seq, qf)?;
        out.push(Check { name: "H(0) = 1".into(), residual: (h[0] - 1.0).abs(), tol: 1e-12 });
        return Ok(out);
    };
    let bool_check = |name: &str, ok: bool| Check { name: name.into(), residual: if ok { 0.0 } else { 1.0 }, tol: 0.0 };
    let det = partition_det(seq);
    let zq = det.eval(qr);
    out.push(bool_check("determinant equals product formula", partition_product(seq, qr)? == zq));
    out.push(bool_check("determinant equals product polynomial", partition_product_poly(seq) == det));
    let dual = partition_det(&dual_sequence(seq)).eval(&(BigRational::one() / qr));
    out.push(bool_check("dual-sequence identity", qr.powi(zident_prefactor_exponent(seq)) * dual == zq));
    let n = seq.n() as i64;
    let mut routes = true;
    let mut compl = true;
    for ell in 0..=seq.last() {
        let h = one_point_H(seq, ell, qr)?;
        routes &= h == one_point_H_det(seq, ell, qr)?;
        if ell >= n + 1 && ell - 1 <= seq.last() + n {
            compl &= h + one_point_Htilde(seq, ell - 1, qr)? == BigRational::one();
        }
    }
    out.push(bool_check("one-point residue form equals determinant form", routes));
    out.push(bool_check("H(l) + Htilde(l-1) = 1", compl));
    if seq.n() <= MAX_ENUM_N && seq.last() <= MAX_ENUM_AN {
        let mut acc = BigRational::from_integer(0.into());
        for (_, area) in enumerate_configs(seq, None)? {
            acc += qr.powi(area);
        }
        out.push(bool_check("enumeration equals determinant", acc == zq));
    }
    Ok(out)
}

fn verify_scaled(d: &StartDensity, qq: f64, samples: usize) -> Result<Vec<Check>> {
    let per = (samples / 20).clamp(5, 40);
    let mut quad: f64 = 0.0;
    let mut fd: f64 = 0.0;
    let mut env: f64 = 0.0;
    let mut saddle: f64 = 0.0;
    for dom in t_domains(d, qq)? {
        for t in dom.interior_points(per) {
            env = env.max(envelope_residual(d, qq, t)?);
            let x = x_of_t(d, qq, t)?;
            if let Ok(xq) = x_of_t_quadrature(d, qq, t) {
                quad = quad.max((x - xq).abs() / x.abs());
            }
            // finite differences need a margin to the nearest singularity
            let margin = 1e-3 * t.abs();
            if !dom.contains(t - margin) || !dom.contains(t + margin) {
                continue;
            }
            let h = 1e-6 * t.abs();
            let an = dx_dt(d, qq, t)?;
            if (an * h).abs() > 1e-8 * x.abs() {
                let num = (x_of_t(d, qq, t + h)? - x_of_t(d, qq, t - h)?) / (2.0 * h);
                fd = fd.max((an - num).abs() / an.abs());
            }
            let s = match dom.branch {
                Branch::Right => exit_params_right(d, qq, t).map(|s| (s, false)),
                Branch::Left => exit_params_left(d, qq, t).map(|s| (s, true)),
                _ => continue,
            };
            // the exit point is only physical for z > 0, and runs off as z grows
            let Ok((s, left)) = s else { continue };
            if !(0.05..=3.0).contains(&s.z) {
                continue;
            }
            let r1 = residual_t(d, qq, t, s.xi)?.abs();
            let r2 = residual_xi(d, qq, t, s.xi, s.z, left)?.abs();
            saddle = saddle.max(r1).max(r2);
        }
    }
    Ok(vec![
        Check { name: "closed-form x(t) equals quadrature".into(), residual: quad, tol: 1e-8 },
        Check { name: "dx/dt equals finite differences".into(), residual: fd, tol: 1e-6 },
        Check { name: "arctic points lie on their tangent lines".into(), residual: env, tol: 1e-10 },
        Check { name: "saddle-point conditions".into(), residual: saddle, tol: 1e-6 },
    ])
}
