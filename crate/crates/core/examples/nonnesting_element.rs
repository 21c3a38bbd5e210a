//! Find the Weyl group element carrying θ_C to θ_A, its heap, and the
//! lattice of heap filters that parametrizes the nonnesting basis.
//!
//! cargo run --release --example nonnesting_element -- E8

use orthoroots::special::wn;
use orthoroots::{qpar, NRootSpace, SystemType};

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "E7".into());
    let sp = NRootSpace::build(SystemType::parse(&name)?)?;
    let qp = qpar::build_order(&sp)?;
    let w = wn::nonnesting_element(&sp, &qp)?;
    let word: Vec<String> = w.word.iter().map(|i| format!("s{i}")).collect();
    println!("w_N = {} (length {})", word.join(" "), w.word.len());
    assert_eq!(sp.act_word(&w.word, qp.theta_c)?, qp.theta_a);

    let class = wn::commutation_class(&sp.rs, &w.word);
    println!("{} reduced words in its commutation class", class.len());

    let heap = wn::weak_interval_lattice(&sp, &qp, &w)?;
    println!("{} heap filters; images are the nonnesting n-roots", heap.filters.len());
    println!("{}", wn::heap_checks(&sp, &heap).summary());
    Ok(())
}
