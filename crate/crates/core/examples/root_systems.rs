//! Build each supported root system and print its basic data.
//!
//! cargo run --example root_systems

use orthoroots::{RootSystem, SystemType};

fn main() -> orthoroots::Result<()> {
    for name in ["D4", "D6", "D8", "D10", "E7", "E8"] {
        let rs = RootSystem::build(SystemType::parse(name)?)?;
        let top = rs.highest_root();
        println!(
            "{name:>3}: rank {}, {:>3} positive roots, Coxeter number {:>2}, highest root {:?} (height {})",
            rs.rank(),
            rs.num_positive(),
            rs.stype.coxeter_number(),
            top,
            rs.height(rs.highest),
        );
    }

    // Reflections act on coefficient vectors; s_1 s_2 applied to α_1.
    let rs = RootSystem::build(SystemType::E8)?;
    let a1 = rs.root(rs.simple[0]).to_vec();
    println!("s1 s2 (alpha_1) in E8 = {:?}", rs.act_word(&[1, 2], &a1)?);
    Ok(())
}
