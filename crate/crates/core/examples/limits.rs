//! Extreme-`𝔮` limit shapes for three linear pieces, and how fast the
//! finite-`𝔮` branches approach them.
//!
//! `cargo run --release --example limits`

use qarctic::asymptotics::*;

fn main() -> qarctic::Result<()> {
    let g = 1.0 / 3.0;
    let d = StartDensity::new(&[(g, 2.0), (g, 4.0), (g, 2.0)], &[])?;
    println!("M vertices: {:?}", m_vertices(&d));
    println!("N vertices: {:?}", n_vertices(&d));
    let m_line = limit_curve(&d, LimitKind::QToZero)?;
    let n_line = limit_curve(&d, LimitKind::QToInfinity)?;
    for qq in [1e-1, 1e-2, 1e-4, 1e-8] {
        let right = t_domains(&d, qq)?[0];
        let c = arctic_curve_with(&d, qq, &right, SampleOptions::default());
        println!("qq = {qq:e}: right branch to M-polyline {:.4}", hausdorff_distance(&c.polylines(0.05), &m_line[..1]));
    }
    for qq in [1e1, 1e2, 1e4, 1e8] {
        let left = t_domains(&d, qq)?[1];
        let c = arctic_curve_with(&d, qq, &left, SampleOptions::default());
        println!("qq = {qq:e}: left branch to N-polyline {:.4}", hausdorff_distance(&c.polylines(0.05), &n_line[..1]));
    }
    Ok(())
}
