//! Scaling limit: `x(t)`, admissible parameter domains, the arctic curve,
//! tangent lines, free trajectories, saddle checks and extreme-`𝔮` limits.

mod arctic;
mod density;
mod domains;
mod geom;
mod hausdorff;
mod limits;
pub mod quad;
mod saddle;
mod xfunc;

pub use arctic::{
    arctic_curve, arctic_curve_with, arctic_curves, arctic_point, arctic_powers, envelope_residual,
    tangency_residual, Curve, SampleOptions, SINGULAR_TOL,
};
pub use density::{Piece, StartDensity};
pub use domains::{t_domains, Branch, TDomain};
pub use geom::{exit_params_left, exit_params_right, geodesic, geodesic_left, tangent_curve, tangent_y, ScalingVars};
pub use hausdorff::{directed_hausdorff, hausdorff_distance};
pub use limits::{limit_curve, m_vertices, n_vertices, window_limit, LimitKind, Polyline};
pub use saddle::{action_s0, action_s1, action_s1_tilde, residual_t, residual_xi, FD_STEP};
pub use xfunc::{dx_dt, x_of_t, x_of_t_quadrature};
