//! Check the quasiparabolic axioms and print the level profile of the order.
//!
//! cargo run --release --example quasiparabolic_order -- E8

use orthoroots::special::qpoly;
use orthoroots::{qpar, NRootSpace, SystemType};

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D6".into());
    let sp = NRootSpace::build(SystemType::parse(&name)?)?;
    for s in [qpar::verify_qp1(&sp), qpar::verify_qp2(&sp), qpar::level_change_laws(&sp)] {
        println!("{}", s.summary());
    }

    let qp = qpar::build_order(&sp)?;
    println!("covers: {}", qp.covers.len());
    println!("theta_A = {}, theta_C = {}, theta_N = {}", qp.theta_a, qp.theta_c, qp.theta_n);
    println!("level polynomial: {}", qpoly::render(&qp.level_poly(0..sp.len())));

    let xi = qpar::alignment_free(&sp, &qp)?;
    println!(
        "alignment-free elements: {} ({} even, {} odd)",
        xi.members.len(),
        xi.even.len(),
        xi.odd.len()
    );
    Ok(())
}
