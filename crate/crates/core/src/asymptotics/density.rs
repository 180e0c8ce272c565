use crate::error::{Error, Result};

/// One piece of a piecewise linear start density.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    /// `α` grows with slope `p` over a `u`-interval of width `gamma`.
    Linear { gamma: f64, p: f64 },
    /// `α` jumps by `delta` (a gap in the starting points).
    Jump { delta: f64 },
}

/// Scaled starting abscissas `a_{un} ≈ n α(u)`, with `α` piecewise linear
/// and possibly discontinuous.
#[derive(Clone, Debug, PartialEq)]
pub struct StartDensity {
    pieces: Vec<Piece>,
    /// `α` at the end of each piece, with a leading `0`.
    theta: Vec<f64>,
    /// `u` at the end of each piece, with a leading `0`.
    u: Vec<f64>,
}

const TOL: f64 = 1e-9;

impl StartDensity {
    /// Builds a density from `(γ_i, p_i)` segments and `(u_m, δ_m)` jumps.
    ///
    /// Every violated constraint is reported, not just the first.
    pub fn new(segments: &[(f64, f64)], jumps: &[(f64, f64)]) -> Result<Self> {
        let mut errs = Vec::new();
        if segments.is_empty() {
            errs.push("at least one segment is required".to_string());
        }
        for (i, &(g, p)) in segments.iter().enumerate() {
            if !(g > 0.0 && g.is_finite()) {
                errs.push(format!("segment {} width must be positive, got {g}", i + 1));
            }
            if !(p >= 1.0 && p.is_finite()) {
                errs.push(format!("segment {} slope must be >= 1, got {p}", i + 1));
            }
        }
        let total: f64 = segments.iter().map(|s| s.0).sum();
        if !segments.is_empty() && (total - 1.0).abs() > TOL {
            errs.push(format!("segment widths must sum to 1, got {total}"));
        }
        let mut bounds = Vec::new();
        let mut acc = 0.0;
        for s in segments.iter().take(segments.len().saturating_sub(1)) {
            acc += s.0;
            bounds.push(acc);
        }
        let mut placed: Vec<(usize, f64)> = Vec::new();
        for &(um, dm) in jumps {
            if !(dm > 0.0 && dm.is_finite()) {
                errs.push(format!("jump height must be positive, got {dm}"));
            }
            match bounds.iter().position(|b| (b - um).abs() <= TOL) {
                Some(k) if !placed.iter().any(|(j, _)| *j == k) => placed.push((k, dm)),
                Some(_) => errs.push(format!("two jumps at u = {um}")),
                None => errs.push(format!(
                    "jump at u = {um} is not at an interior segment boundary"
                )),
            }
        }
        if !errs.is_empty() {
            return Err(Error::InvalidArgument(errs.join("; ")));
        }
        let mut pieces = Vec::new();
        for (i, &(gamma, p)) in segments.iter().enumerate() {
            push_linear(&mut pieces, gamma, p);
            if let Some((_, delta)) = placed.iter().find(|(k, _)| *k == i) {
                pieces.push(Piece::Jump { delta: *delta });
            }
        }
        let d = Self::from_pieces(pieces);
        d.check_edges()?;
        Ok(d)
    }

    fn from_pieces(pieces: Vec<Piece>) -> Self {
        let mut theta = vec![0.0];
        let mut u = vec![0.0];
        for p in &pieces {
            let (dt, du) = match *p {
                Piece::Linear { gamma, p } => (gamma * p, gamma),
                Piece::Jump { delta } => (delta, 0.0),
            };
            theta.push(theta.last().unwrap() + dt);
            u.push(u.last().unwrap() + du);
        }
        *u.last_mut().unwrap() = 1.0;
        StartDensity { pieces, theta, u }
    }

    fn check_edges(&self) -> Result<()> {
        let lin: Vec<f64> = self
            .pieces
            .iter()
            .filter_map(|p| match p {
                Piece::Linear { p, .. } => Some(*p),
                _ => None,
            })
            .collect();
        let edge_frozen = lin.first() == Some(&1.0) || lin.last() == Some(&1.0);
        let all_frozen = lin.iter().all(|&p| p == 1.0);
        if edge_frozen && !all_frozen {
            return Err(Error::Unsupported(
                "a slope-1 first or last segment (frozen edge) is only supported when every segment has slope 1".into(),
            ));
        }
        Ok(())
    }

    /// `α(u) = p u` on `[0, 1]`.
    pub fn linear(p: f64) -> Result<Self> {
        Self::new(&[(1.0, p)], &[])
    }

    /// Two slope-1 segments separated by a gap: the hexagon geometry with
    /// vertical side `γ₁` and horizontal side `δ₂`.
    pub fn hexagon(gamma1: f64, delta2: f64) -> Result<Self> {
        Self::new(&[(gamma1, 1.0), (1.0 - gamma1, 1.0)], &[(gamma1, delta2)])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Values of `α` at piece ends, starting with `θ_0 = 0`.
    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Values of `u` at piece ends, starting with `0`.
    pub fn u_breaks(&self) -> &[f64] {
        &self.u
    }

    pub fn alpha_one(&self) -> f64 {
        *self.theta.last().unwrap()
    }

    /// `α(u)`, right-continuous at jumps.
    pub fn alpha(&self, u: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&u) {
            return Err(Error::Domain(format!("u must lie in [0, 1], got {u}")));
        }
        let mut val = 0.0;
        for (i, piece) in self.pieces.iter().enumerate() {
            match *piece {
                Piece::Jump { delta } => {
                    if u >= self.u[i] {
                        val += delta;
                    }
                }
                Piece::Linear { p, .. } => {
                    let lo = self.u[i];
                    let hi = self.u[i + 1];
                    if u > lo {
                        val += p * (u.min(hi) - lo);
                    }
                }
            }
        }
        Ok(val)
    }

    /// True for the two-slope-1-segments-and-a-gap geometry.
    pub fn is_hexagon(&self) -> bool {
        matches!(
            self.pieces.as_slice(),
            [Piece::Linear { p: p1, .. }, Piece::Jump { .. }, Piece::Linear { p: p3, .. }]
                if *p1 == 1.0 && *p3 == 1.0
        )
    }
}

/// Adjacent equal-slope segments describe the same `α`; merge them so that
/// breakpoints are genuine.
fn push_linear(pieces: &mut Vec<Piece>, gamma: f64, p: f64) {
    if let Some(Piece::Linear { gamma: g, p: q }) = pieces.last_mut() {
        if *q == p {
            *g += gamma;
            return;
        }
    }
    pieces.push(Piece::Linear { gamma, p });
}
