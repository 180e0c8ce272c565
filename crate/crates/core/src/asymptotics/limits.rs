use super::{Piece, StartDensity};
use crate::error::{Error, Result};

pub type Polyline = Vec<(f64, f64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    QToZero,
    QToInfinity,
}

/// `N_i = (θ_i, u_i)`, the corners of the `𝔮 → ∞` left polyline.
pub fn n_vertices(d: &StartDensity) -> Vec<(f64, f64)> {
    d.theta().iter().zip(d.u_breaks()).map(|(&th, &u)| (th, u)).collect()
}

/// `M_i = (1 + θ_i − u_i, 1 − u_i)`, the corners of the `𝔮 → 0` right polyline.
pub fn m_vertices(d: &StartDensity) -> Vec<(f64, f64)> {
    d.theta().iter().zip(d.u_breaks()).map(|(&th, &u)| (1.0 + th - u, 1.0 - u)).collect()
}

/// Limit of the arctic curve as `𝔮 → 0` or `𝔮 → ∞`.
///
/// For `𝔮 → ∞`: the polyline through the `N_i` plus the segment
/// `(α(1), 1)–(α(1), 0)`. For `𝔮 → 0`: the polyline through the `M_i` plus
/// the diagonal `(0, 0)–(1, 1)`. The hexagon degenerates to three segments
/// meeting at one point.
pub fn limit_curve(d: &StartDensity, which: LimitKind) -> Result<Vec<Polyline>> {
    let lin: Vec<f64> = d
        .pieces()
        .iter()
        .filter_map(|p| if let Piece::Linear { p, .. } = p { Some(*p) } else { None })
        .collect();
    if lin.iter().all(|&p| p == 1.0) {
        if !d.is_hexagon() {
            return Err(Error::Unsupported("limit shape of an all-slope-1 density other than the hexagon".into()));
        }
        let th = d.theta();
        let (g1, g1d, top) = (th[1], th[2], th[3]);
        return Ok(match which {
            LimitKind::QToZero => {
                let c = (1.0, 1.0 - g1);
                vec![vec![(g1, 0.0), c], vec![c, (1.0, 1.0)], vec![c, (top, 1.0 - g1)]]
            }
            LimitKind::QToInfinity => {
                let c = (g1d, g1);
                vec![vec![(g1, g1), c], vec![(g1d, 0.0), c], vec![c, (top, 1.0)]]
            }
        });
    }
    let a1 = d.alpha_one();
    Ok(match which {
        LimitKind::QToInfinity => vec![n_vertices(d), vec![(a1, 1.0), (a1, 0.0)]],
        LimitKind::QToZero => vec![m_vertices(d), vec![(0.0, 0.0), (1.0, 1.0)]],
    })
}

/// Limit of the extra curve portion of the window opened by piece `m`
/// (a jump or an interior slope-1 piece): the border of the frozen strip,
/// `(θ_{m−1}, 0)–V_{m−1}–V_m–(θ_m, 0)` with `V = M` or `N`.
pub fn window_limit(d: &StartDensity, m: usize, which: LimitKind) -> Result<Polyline> {
    let pieces = d.pieces();
    match pieces.get(m) {
        Some(Piece::Jump { .. }) => {}
        Some(Piece::Linear { p, .. }) if *p == 1.0 => {}
        _ => return Err(Error::InvalidArgument(format!("piece {m} does not open a window"))),
    }
    let th = d.theta();
    let v = match which {
        LimitKind::QToZero => m_vertices(d),
        LimitKind::QToInfinity => n_vertices(d),
    };
    // piece m spans theta[m]..theta[m+1]
    Ok(vec![(th[m], 0.0), v[m], v[m + 1], (th[m + 1], 0.0)])
}
