//! One-point functions: where the top path crosses the line `y = n`.
//!
//! `cargo run --example one_point`

use num_rational::BigRational;
use qarctic::nilp::{one_point_H, one_point_H_det, one_point_Htilde, StartSequence};

fn main() -> qarctic::Result<()> {
    let seq = StartSequence::new(vec![0, 2, 3, 6])?;
    let q = BigRational::new(3.into(), 4.into());
    let n = seq.n() as i64;
    println!("a = {seq}, q = {q}");
    println!("{:>3} {:>28} {:>28}", "l", "H (residues)", "H (determinants)");
    for ell in 0..=seq.last() {
        let h = one_point_H(&seq, ell, &q)?;
        let d = one_point_H_det(&seq, ell, &q)?;
        println!("{ell:>3} {:>28} {:>28}", h.to_string(), d.to_string());
    }
    // H(l) + H~(l-1) = 1
    for ell in n + 1..=seq.last() {
        let s = one_point_H(&seq, ell, &q)? + one_point_Htilde(&seq, ell - 1, &q)?;
        println!("l = {ell}: H + H~ = {s}");
    }
    Ok(())
}
