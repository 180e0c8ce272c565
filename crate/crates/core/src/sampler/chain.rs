use std::collections::HashMap;

use super::{init_state, InitMode};
use crate::nilp::{PathConfig, StartSequence, MAX_ENUM_AN, MAX_ENUM_N};

/// North-step occupancy counts: `grid[y * width + x]` counts the sweeps in
/// which some path stepped north from `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityField {
    pub width: usize,
    pub height: usize,
    pub grid: Vec<u64>,
    pub sweeps: u64,
}

impl DensityField {
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.grid[y * self.width + x]
    }
}

#[derive(Clone, Debug, Default)]
pub struct ChainSummary {
    /// Area after each sweep, burn-in included.
    pub area_series: Vec<i64>,
    /// Visit counts per configuration after burn-in; only kept for systems
    /// small enough to enumerate.
    pub config_counts: HashMap<PathConfig, u64>,
    pub accepted: u64,
    pub proposals: u64,
}

/// Runs `sweeps` sweeps from the maximal-area state and records the last
/// `sweeps − burn_in` of them.
pub fn run_chain(
    seq: &StartSequence,
    q: f64,
    sweeps: u64,
    burn_in: u64,
    seed: u64,
) -> (ChainSummary, DensityField) {
    assert!(sweeps > burn_in, "sweeps must exceed burn_in");
    assert!(q > 0.0, "q must be positive");
    let mut st = init_state(seq, InitMode::MaxArea, seed);
    let track = seq.n() <= MAX_ENUM_N && seq.last() <= MAX_ENUM_AN;
    let width = seq.last() as usize + 1;
    let height = seq.n().max(1);
    let mut dens = DensityField {
        width,
        height,
        grid: vec![0; width * height],
        sweeps: 0,
    };
    let mut summary = ChainSummary {
        area_series: Vec::with_capacity(sweeps as usize),
        ..Default::default()
    };
    let per_sweep = st.sweep_len();
    for sweep in 0..sweeps {
        for _ in 0..per_sweep {
            if st.step(q) {
                summary.accepted += 1;
            }
        }
        summary.proposals += per_sweep as u64;
        summary.area_series.push(st.area);
        if sweep < burn_in {
            continue;
        }
        dens.sweeps += 1;
        for p in &st.config.paths {
            for (x, y) in p.north_steps() {
                dens.grid[y as usize * width + x as usize] += 1;
            }
        }
        if track {
            *summary.config_counts.entry(st.config.clone()).or_insert(0) += 1;
        }
    }
    (summary, dens)
}

/// Ten times the integrated autocorrelation time of `series`, with the
/// usual self-consistent window `M >= 5 τ`.
pub fn estimate_burn_in(series: &[i64]) -> u64 {
    let n = series.len();
    if n < 4 {
        return 0;
    }
    let mean = series.iter().sum::<i64>() as f64 / n as f64;
    let dev: Vec<f64> = series.iter().map(|&v| v as f64 - mean).collect();
    let c0 = dev.iter().map(|d| d * d).sum::<f64>() / n as f64;
    if c0 == 0.0 {
        return 0;
    }
    let mut tau = 1.0;
    for lag in 1..n / 2 {
        let c = dev[..n - lag].iter().zip(&dev[lag..]).map(|(a, b)| a * b).sum::<f64>() / n as f64;
        tau += 2.0 * c / c0;
        if lag as f64 >= 5.0 * tau {
            break;
        }
    }
    (10.0 * tau.max(1.0)).ceil() as u64
}
