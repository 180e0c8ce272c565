//! Finite-n exact model of the non-intersecting path system.
//!
//! Paths of the first family run from `(a_i, 0)` to `(0, i)` with west and
//! north steps; a north step at abscissa `x` carries weight `q^x`. Everything
//! here is exact over the rationals except [`most_likely_exit`], which runs
//! in wide binary floating point so that irrational `q` can be used.

mod one_point;
mod partition;
mod paths;
mod sequence;

pub use one_point::{
    exit_weights, free_weight_Y, free_weight_Ytilde, most_likely_exit, one_point_H,
    one_point_H_det, one_point_H_extended, one_point_H_float, one_point_Htilde, perturbed_partition,
};
pub use partition::{
    lgv_matrix, partition_det, partition_product, partition_product_poly, zident_prefactor_exponent,
};
pub use paths::{
    enumerate_configs, from_second_family, reflect_R, reflect_point, to_second_family,
    ExitSpec, Family, LatticePath, PathConfig, Step, MAX_ENUM_AN, MAX_ENUM_N,
};
pub use sequence::{dual_sequence, StartSequence};
