//! Monte Carlo sampling with local corner flips, compared to the exact
//! Boltzmann distribution on a small system.
//!
//! `cargo run --release --example sampler`

use qarctic::nilp::StartSequence;
use qarctic::sampler::{estimate_burn_in, run_chain};
use qarctic::shell::tv_to_exact;

fn main() -> qarctic::Result<()> {
    let seq = StartSequence::new(vec![0, 1, 3])?;
    let q = 0.7;
    let (pilot, _) = run_chain(&seq, q, 2_000, 0, 1);
    let burn = estimate_burn_in(&pilot.area_series);
    let (summary, density) = run_chain(&seq, q, 200_000, burn, 2);
    let tv = tv_to_exact(&seq, q, &summary.config_counts)?;
    println!("burn-in {burn} sweeps, acceptance {:.3}", summary.accepted as f64 / summary.proposals as f64);
    println!("total variation to the exact distribution: {tv:.2e}");

    // occupation of lattice edges, top row first
    for y in (0..density.height).rev() {
        let row: Vec<String> = (0..density.width)
            .map(|x| format!("{:5.2}", density.get(x, y) as f64 / density.sweeps as f64))
            .collect();
        println!("{}", row.join(" "));
    }
    Ok(())
}
