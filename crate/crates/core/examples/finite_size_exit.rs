//! Tangent method at finite size: the most likely exit point of the top
//! path, moved up by `r = z n`, against the asymptotic prediction.
//!
//! `cargo run --release --example finite_size_exit`

use qarctic::asymptotics::*;
use qarctic::nilp::{most_likely_exit, StartSequence};

fn main() -> qarctic::Result<()> {
    let (qq, z) = (3.0f64, 0.5f64);
    let d = StartDensity::linear(2.0)?;
    let right = t_domains(&d, qq)?[0];
    // scan the branch for the t whose tangent line reaches height 1 + z
    let best = right
        .interior_points(2000)
        .into_iter()
        .filter_map(|t| exit_params_right(&d, qq, t).ok().map(|s| (t, s)))
        .min_by(|a, b| (a.1.z - z).abs().total_cmp(&(b.1.z - z).abs()))
        .expect("right branch has valid exit points");
    println!("asymptotic: t = {:.4}, xi = {:.4}", best.0, best.1.xi);
    for n in [10i64, 20, 30, 40] {
        let seq = StartSequence::new((0..=n).map(|i| 2 * i).collect())?;
        let r = (z * n as f64).round() as i64;
        let ell = most_likely_exit(&seq, r, qq.powf(1.0 / n as f64))?;
        println!("n = {n}: most likely exit {ell}, ell / n = {:.4}", ell as f64 / n as f64);
    }
    Ok(())
}
