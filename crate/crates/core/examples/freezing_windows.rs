//! Frozen regions: a fully packed piece (`p = 1`) and a gap both open an
//! extra window of `t` and an extra portion of the arctic curve.
//!
//! `cargo run --release --example freezing_windows`

use qarctic::asymptotics::*;

fn main() -> qarctic::Result<()> {
    let g = 1.0 / 3.0;
    let filled = StartDensity::new(&[(g, 2.0), (g, 1.0), (g, 2.0)], &[])?;
    let gapped = StartDensity::new(&[(0.5, 2.0), (0.5, 2.0)], &[(0.5, 1.0)])?;
    for (name, d, qq) in [("filled", &filled, 0.01), ("gap", &gapped, 3.0)] {
        println!("{name}, qq = {qq}");
        for dom in t_domains(d, qq)? {
            let c = arctic_curve(d, qq, &dom, 200);
            let xy = c.xy();
            println!(
                "  {:<8} t in ({:.4e}, {:.4e}), x {}, {} points, ends ({:.3}, {:.3}) and ({:.3}, {:.3})",
                dom.branch.label(),
                dom.lo,
                dom.hi,
                if dom.sign_of_x > 0.0 { "> 0" } else { "< 0" },
                xy.len(),
                xy[0].0,
                xy[0].1,
                xy[xy.len() - 1].0,
                xy[xy.len() - 1].1
            );
        }
    }
    Ok(())
}
