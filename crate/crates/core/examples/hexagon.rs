//! Hexagon-shaped domain: the arctic curve deforms from an ellipse-like
//! loop to three segments meeting at one point as `𝔮` goes to 0 or ∞.
//!
//! `cargo run --release --example hexagon`

use qarctic::asymptotics::*;

fn main() -> qarctic::Result<()> {
    let d = StartDensity::hexagon(1.0 / 3.0, 1.0)?;
    let star0 = limit_curve(&d, LimitKind::QToZero)?;
    let star_inf = limit_curve(&d, LimitKind::QToInfinity)?;
    println!("q -> 0 limit: {star0:?}");
    println!("q -> inf limit: {star_inf:?}");
    for qq in [1e-1, 1e-3, 1e-6, 1e1, 1e3, 1e6] {
        let curve: Vec<Polyline> = arctic_curves(&d, qq, SampleOptions::default())?
            .iter()
            .flat_map(|c| c.polylines(0.05))
            .collect();
        let target = if qq < 1.0 { &star0 } else { &star_inf };
        println!("qq = {qq:e}: Hausdorff distance to the limit {:.4}", hausdorff_distance(&curve, target));
    }
    Ok(())
}
