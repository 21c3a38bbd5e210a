//! σ-classes with their factored Poincaré series, and the cyclic sieving
//! of n-roots under a Coxeter element.
//!
//! cargo run --release --example cyclic_sieving -- D8

use orthoroots::special::{self, coxeter, qpoly};
use orthoroots::{qpar, NRootSpace, SystemType};

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D8".into());
    let t = SystemType::parse(&name)?;
    let sp = NRootSpace::build(t)?;
    let qp = qpar::build_order(&sp)?;
    let classes = special::sigma_classes(&sp, &qp.reach())?;
    println!("{} sigma-classes", classes.len());
    for p in special::class_poincare(&qp, &classes).iter().take(5) {
        println!("  {:?}: {}  factors {:?}", p.sigma, qpoly::render(&p.poly), p.factors);
    }

    let word = coxeter::standard_coxeter_word(t.rank);
    let ((_, dx), _) = special::poincare_closed_forms(t);
    let (rows, s) = coxeter::cyclic_sieving(&sp, &word, &dx)?;
    println!("c = s1 s2 ... s{}; PS_X = prod [d] for d in {dx:?}", t.rank);
    for r in rows {
        println!("  c^{:<2} fixes {:>4}   PS_X(zeta^d) = {:>8.3}", r.power, r.fixed, r.evaluation.abs());
    }
    println!("{}", s.summary());
    Ok(())
}
