//! The 30 alignment-free 7-roots of E7 and their Fano plane labellings.

use orthoroots::exceptional as exc;
use orthoroots::verify::Context;
use orthoroots::SystemType;

fn main() -> orthoroots::Result<()> {
    let ctx = Context::build(SystemType::E7)?;
    let labels = exc::fano_labellings(&ctx.sp, &ctx.xi)?;
    println!("{} labellings, one per alignment-free 7-root", labels.len());
    println!("theta_C: {}", labels[&ctx.qp.theta_c].render().join(" "));
    println!("theta_N: {}", labels[&ctx.qp.theta_n].render().join(" "));

    let (table, _) = exc::labelling_pair_intersections(&labels, &ctx.xi);
    println!("shared triples, same parity:  {:?}", table.same_parity);
    println!("shared triples, cross parity: {:?}", table.cross_parity);
    println!("{}", exc::e7_level_formula(&ctx.qp, &labels).summary());
    Ok(())
}
