//! Rewrite n-roots into the noncrossing and nonnesting bases of the
//! Macdonald representation, then build the change of basis between them.
//!
//! cargo run --release --example ptolemy_bases -- E7

use orthoroots::macdonald::{self, ExpansionTable, Rewriter, Target};
use orthoroots::{qpar, NRootSpace, SystemType};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D6".into());
    let sp = NRootSpace::build(SystemType::parse(&name)?)?;
    let qp = qpar::build_order(&sp)?;
    let rw = Rewriter::new(&sp)?;
    let nc = ExpansionTable::build(&rw, Target::Noncrossing)?;
    let nn = ExpansionTable::build(&rw, Target::Nonnesting)?;
    println!("{name}: bases of size {} and {}", nc.basis.len(), nn.basis.len());

    let row = &nc.rows[qp.theta_c];
    println!("theta_C in the noncrossing basis: {row:?} (sum {})", row.iter().sum::<i64>());

    // A random rewriting order reaches the same normal form.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let e = macdonald::MacElement::unit(qp.theta_n);
    let random = rw.normalize_random(Target::Noncrossing, &e, &mut rng);
    assert_eq!(random, nc.element(qp.theta_n));
    println!("theta_N rewrites to {} noncrossing term(s) under any strategy", random.terms.len());

    let order = macdonald::sigma_compatible_order(&sp, &nc.basis);
    let cob = macdonald::change_of_basis(&sp, &nc, &nn, &order)?;
    println!("change of basis ({0}x{0}), row-major:", cob.matrix.len());
    for r in &cob.matrix {
        println!("  {}", r.iter().map(|c| format!("{c:>2}")).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
