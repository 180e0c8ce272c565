//! The second path family and the reflection back to first-family paths.
//!
//! `cargo run --example bijection`

use qarctic::nilp::{enumerate_configs, from_second_family, reflect_R, to_second_family, StartSequence};

fn main() -> qarctic::Result<()> {
    let seq = StartSequence::new(vec![0, 1, 3])?;
    let configs = enumerate_configs(&seq, None)?;
    println!("{} configurations for a = {seq}", configs.len());
    let (c, area) = &configs[configs.len() / 2];
    let second = to_second_family(c)?;
    let reflected = reflect_R(&second)?;
    println!("first family (area {area}):");
    for p in &c.paths {
        println!("  {:?}", p.vertices());
    }
    println!("second family:");
    for p in &second.paths {
        println!("  {:?}", p.vertices());
    }
    println!("after reflection:");
    for p in &reflected.paths {
        println!("  {:?}", p.vertices());
    }
    assert_eq!(&from_second_family(&second)?, c);
    Ok(())
}
