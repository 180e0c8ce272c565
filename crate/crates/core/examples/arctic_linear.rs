//! Arctic curve for `α(u) = 2u`: both branches, a tangent line, and the
//! free trajectory of the top path after it exits at `(ξ, 1)`.
//!
//! `cargo run --release --example arctic_linear`

use qarctic::asymptotics::*;

fn main() -> qarctic::Result<()> {
    let d = StartDensity::linear(2.0)?;
    for qq in [3.0, 1.0 / 3.0] {
        println!("qq = {qq:.4}");
        for c in arctic_curves(&d, qq, SampleOptions::default())? {
            let xy = c.xy();
            let (a, b) = (xy[0], xy[xy.len() - 1]);
            println!(
                "  {:<6} {:>4} points from ({:.4}, {:.4}) to ({:.4}, {:.4})",
                c.domain.branch.label(),
                xy.len(),
                a.0,
                a.1,
                b.0,
                b.1
            );
        }
    }

    let (qq, t) = (3.0, 20.0);
    let (x, y) = arctic_point(&d, qq, t)?;
    let s = exit_params_right(&d, qq, t)?;
    println!("t = {t}: arctic point ({x:.5}, {y:.5}), exit xi = {:.5}, z = {:.5}", s.xi, s.z);
    println!("tangent line at X = {x:.5}: Y = {:.5}", tangent_y(&d, qq, t, x)?);
    let g = geodesic(qq, s.xi, s.z, 5)?;
    for (_, gx, gy) in g.points {
        println!("  geodesic ({gx:.4}, {gy:.4})");
    }
    Ok(())
}
