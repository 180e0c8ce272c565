//! Partition function of the path system by the LGV determinant, by the
//! Vandermonde product, and its symmetry under the dual sequence.
//!
//! `cargo run --example partition_function`

use num_rational::BigRational;
use num_traits::One;
use qarctic::nilp::{dual_sequence, partition_det, partition_product, zident_prefactor_exponent, StartSequence};
use qarctic::qcore::Scalar;

fn main() -> qarctic::Result<()> {
    let seq = StartSequence::new(vec![0, 1, 3, 4, 7])?;
    let z = partition_det(&seq);
    println!("a = {seq}");
    println!("Z(q) = {z}");
    println!("Z(1) = {} configurations", z.at_one());

    let q = BigRational::new(2.into(), 5.into());
    let det = z.eval(&q);
    let prod = partition_product(&seq, &q)?;
    println!("Z(2/5): determinant {det}, product {prod}");

    let dual = dual_sequence(&seq);
    let e = zident_prefactor_exponent(&seq);
    let mirrored = q.powi(e) * partition_det(&dual).eval(&(BigRational::one() / &q));
    println!("dual sequence {dual}: q^{e} Z(dual; 1/q) = {mirrored}");
    assert_eq!(det, prod);
    assert_eq!(det, mirrored);
    Ok(())
}
