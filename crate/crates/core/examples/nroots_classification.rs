//! Enumerate positive n-roots and tally how their coplanar quadruples split
//! into alignments, crossings and nestings.
//!
//! cargo run --release --example nroots_classification -- E7

use std::collections::BTreeMap;

use orthoroots::{NRootSpace, SystemType};

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D8".into());
    let sp = NRootSpace::build(SystemType::parse(&name)?)?;
    let m = sp.stype().quadruple_count();
    println!("{name}: {} positive n-roots, {m} coplanar quadruples each", sp.len());

    let mut by_counts: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for f in &sp.feats {
        *by_counts.entry((f.a, f.c, f.n)).or_default() += 1;
    }
    println!("  (A, C, N) -> how many");
    for ((a, c, n), k) in by_counts {
        println!("  ({a}, {c}, {n}) -> {k}");
    }
    println!("  noncrossing: {}, nonnesting: {}", sp.noncrossing().len(), sp.nonnesting().len());
    if let Ok(m) = sp.matching(0) {
        println!("  n-root 0 as a perfect matching: {m:?}");
    }
    Ok(())
}
