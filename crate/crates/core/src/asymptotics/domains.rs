use super::{Piece, StartDensity};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Right,
    Left,
    /// Window opened by the jump that is piece `m` of the density.
    Gap(usize),
    /// Window of the slope-1 piece `m`, where `x(t) < 0`.
    Filled(usize),
}

impl Branch {
    pub fn label(&self) -> String {
        match self {
            Branch::Right => "right".into(),
            Branch::Left => "left".into(),
            Branch::Gap(m) => format!("gap{m}"),
            Branch::Filled(m) => format!("filled{m}"),
        }
    }
}

/// An open interval of `t` on which `x(t)` is real with a fixed sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TDomain {
    pub lo: f64,
    pub hi: f64,
    pub branch: Branch,
    pub sign_of_x: f64,
}

impl TDomain {
    pub fn contains(&self, t: f64) -> bool {
        t > self.lo && t < self.hi
    }

    /// `n` deterministic points per sign-stretch, evenly spread in `ln |t|`
    /// and kept off the ends; infinite ends are cut 12 e-folds out.
    pub fn interior_points(&self, n: usize) -> Vec<f64> {
        let stretches = if self.lo < 0.0 && self.hi > 0.0 {
            vec![(self.lo, 0.0), (0.0, self.hi)]
        } else {
            vec![(self.lo, self.hi)]
        };
        let mut out = Vec::new();
        for (a, b) in stretches {
            let sign = if b > 0.0 { 1.0 } else { -1.0 };
            let (m0, m1) = if sign > 0.0 { (a, b) } else { (-b, -a) };
            let lo = if m0 > 0.0 { m0.ln() } else { m1.min(1e3).ln() - 12.0 };
            let hi = if m1.is_finite() { m1.ln() } else { m0.max(1e-3).ln() + 12.0 };
            for j in 0..n {
                let lam = lo + (hi - lo) * (j as f64 + 0.5) / n as f64;
                out.push(sign * lam.exp());
            }
        }
        out
    }
}

/// Admissible `t` intervals: the right and left branches plus one window
/// per jump and per slope-1 piece.
pub fn t_domains(d: &StartDensity, qq: f64) -> Result<Vec<TDomain>> {
    if !(qq > 0.0 && qq.is_finite()) || qq == 1.0 {
        return Err(Error::InvalidArgument(format!(
            "qq must be positive, finite and different from 1, got {qq}"
        )));
    }
    let end = qq.powf(d.alpha_one());
    let mut out = if qq > 1.0 {
        vec![
            TDomain { lo: end, hi: f64::INFINITY, branch: Branch::Right, sign_of_x: 1.0 },
            TDomain { lo: f64::NEG_INFINITY, hi: 1.0, branch: Branch::Left, sign_of_x: 1.0 },
        ]
    } else {
        vec![
            TDomain { lo: f64::NEG_INFINITY, hi: end, branch: Branch::Right, sign_of_x: 1.0 },
            TDomain { lo: 1.0, hi: f64::INFINITY, branch: Branch::Left, sign_of_x: 1.0 },
        ]
    };
    let theta = d.theta();
    for (m, piece) in d.pieces().iter().enumerate() {
        let (branch, sign) = match *piece {
            Piece::Jump { .. } => (Branch::Gap(m), 1.0),
            Piece::Linear { p, .. } if p == 1.0 => (Branch::Filled(m), -1.0),
            _ => continue,
        };
        let (a, b) = (qq.powf(theta[m]), qq.powf(theta[m + 1]));
        out.push(TDomain { lo: a.min(b), hi: a.max(b), branch, sign_of_x: sign });
    }
    Ok(out)
}
