use num_rational::BigRational;
use serde::Deserialize;

use crate::asymptotics::StartDensity;
use crate::error::{Error, Result};
use crate::nilp::StartSequence;
use crate::qcore::parse_rational;

/// Finite-size weight: an exact rational, or `q = 𝔮^{1/n}` in floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum QSpec {
    Exact(BigRational),
    Root { qq: f64, n: usize },
}

impl QSpec {
    pub fn to_f64(&self) -> f64 {
        match self {
            QSpec::Exact(q) => crate::qcore::Scalar::to_f64(q),
            QSpec::Root { qq, n } => qq.powf(1.0 / *n as f64),
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            QSpec::Exact(q) => Some(q),
            QSpec::Root { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Finite { seq: StartSequence, q: QSpec },
    Scaled { density: StartDensity, qq: f64 },
}

/// Task parameters shared by all subcommands; unused ones are ignored.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Task {
    pub samples: usize,
    pub seed: u64,
    pub sweeps: u64,
    /// `None` estimates burn-in from a pilot run.
    pub burn_in: Option<u64>,
    /// Endpoint shift of the perturbed top path.
    pub r: i64,
    /// Branches to draw: any of `right`, `left`, `windows`.
    pub branches: Vec<String>,
    pub tangent_t: Vec<f64>,
    pub geodesic_t: Vec<f64>,
    pub out: Option<String>,
    pub svg: bool,
}

impl Default for Task {
    fn default() -> Self {
        Task {
            samples: 400,
            seed: 1,
            sweeps: 10_000,
            burn_in: None,
            r: 1,
            branches: vec!["right".into(), "left".into(), "windows".into()],
            tangent_t: Vec::new(),
            geodesic_t: Vec::new(),
            out: None,
            svg: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelConfig {
    pub model: Model,
    pub task: Task,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFinite {
    a: Vec<i64>,
    q: Option<String>,
    qq: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegment {
    gamma: f64,
    p: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJump {
    u: f64,
    delta: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScaled {
    qq: f64,
    segments: Vec<RawSegment>,
    #[serde(default)]
    jumps: Vec<RawJump>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    finite: Option<RawFinite>,
    scaled: Option<RawScaled>,
    #[serde(default)]
    task: Task,
}

fn split_errors(e: Error) -> Vec<String> {
    match e {
        Error::InvalidArgument(m) => m.split("; ").map(String::from).collect(),
        Error::Config(v) => v,
        other => vec![other.to_string()],
    }
}

/// Parses and validates a TOML model description.
///
/// Syntax problems give [`Error::Parse`] with the location; semantic problems
/// give [`Error::Config`] listing every violated field.
pub fn parse_config(text: &str) -> Result<ModelConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut errs = Vec::new();
    let model = match (raw.finite, raw.scaled) {
        (Some(_), Some(_)) => {
            errs.push("exactly one of [finite] and [scaled] must be given, found both".into());
            None
        }
        (None, None) => {
            errs.push("exactly one of [finite] and [scaled] must be given, found neither".into());
            None
        }
        (Some(f), None) => finite_model(f, &mut errs),
        (None, Some(s)) => scaled_model(s, &mut errs),
    };
    let t = &raw.task;
    if t.samples < 2 {
        errs.push(format!("task.samples must be at least 2, got {}", t.samples));
    }
    if t.sweeps == 0 {
        errs.push("task.sweeps must be positive".into());
    }
    if let Some(b) = t.burn_in {
        if b >= t.sweeps {
            errs.push(format!("task.burn_in ({b}) must be smaller than task.sweeps ({})", t.sweeps));
        }
    }
    if t.r < 1 {
        errs.push(format!("task.r must be at least 1, got {}", t.r));
    }
    for b in &t.branches {
        if !matches!(b.as_str(), "right" | "left" | "windows") {
            errs.push(format!("task.branches: unknown branch '{b}' (expected right, left or windows)"));
        }
    }
    for (name, ts) in [("tangent_t", &t.tangent_t), ("geodesic_t", &t.geodesic_t)] {
        if ts.iter().any(|v| !v.is_finite()) {
            errs.push(format!("task.{name} values must be finite"));
        }
    }
    match model {
        Some(model) if errs.is_empty() => Ok(ModelConfig { model, task: raw.task }),
        _ => Err(Error::Config(errs)),
    }
}

fn finite_model(f: RawFinite, errs: &mut Vec<String>) -> Option<Model> {
    let seq = StartSequence::new(f.a).map_err(|e| {
        errs.extend(split_errors(e).into_iter().map(|m| format!("finite.a: {m}")));
    });
    let q = match (f.q, f.qq) {
        (Some(_), Some(_)) => {
            errs.push("finite: give either q or qq, not both".into());
            None
        }
        (None, None) => {
            errs.push("finite: one of q or qq is required".into());
            None
        }
        (Some(s), None) => match parse_rational(&s) {
            Ok(q) => {
                let zero = BigRational::from_integer(0.into());
                let one = BigRational::from_integer(1.into());
                if q <= zero || q == one {
                    errs.push(format!("finite.q must be positive and different from 1, got {s}"));
                    None
                } else {
                    Some(QSpec::Exact(q))
                }
            }
            Err(e) => {
                errs.push(format!("finite.q: {e}"));
                None
            }
        },
        (None, Some(qq)) => {
            if !(qq > 0.0 && qq.is_finite()) || qq == 1.0 {
                errs.push(format!("finite.qq must be positive, finite and different from 1, got {qq}"));
                None
            } else {
                seq.as_ref().ok().map(|s| QSpec::Root { qq, n: s.n().max(1) })
            }
        }
    };
    match (seq, q) {
        (Ok(seq), Some(q)) => Some(Model::Finite { seq, q }),
        _ => None,
    }
}

fn scaled_model(s: RawScaled, errs: &mut Vec<String>) -> Option<Model> {
    if !(s.qq > 0.0 && s.qq.is_finite()) || s.qq == 1.0 {
        errs.push(format!("scaled.qq must be positive, finite and different from 1, got {}", s.qq));
    }
    let segs: Vec<(f64, f64)> = s.segments.iter().map(|g| (g.gamma, g.p)).collect();
    let jumps: Vec<(f64, f64)> = s.jumps.iter().map(|j| (j.u, j.delta)).collect();
    match StartDensity::new(&segs, &jumps) {
        Ok(density) if errs.is_empty() => Some(Model::Scaled { density, qq: s.qq }),
        Ok(_) => None,
        Err(e) => {
            errs.extend(split_errors(e).into_iter().map(|m| format!("scaled: {m}")));
            None
        }
    }
}
