//! Metropolis sampling of first-family configurations with weight `q^{area}`.
//!
//! Moves are single corner flips (north-west to west-north and back), which
//! change the area by exactly one. Connectivity of the configuration space
//! under such flips is the usual rhombus-tiling flip connectivity.

mod chain;
mod state;

pub use chain::{estimate_burn_in, run_chain, ChainSummary, DensityField};
pub use state::{init_state, mc_step, Flip, InitMode, McState};
