//! Two strongly regular graphs from E8 with the same parameters, told apart
//! by counting 5-cliques through each edge.
//!
//! cargo run --release --example e8_graphs

use orthoroots::exceptional as exc;
use orthoroots::{qpar, NRootSpace, SystemType};

fn main() -> orthoroots::Result<()> {
    let sp = NRootSpace::build(SystemType::E8)?;
    let qp = qpar::build_order(&sp)?;
    let xi = qpar::alignment_free(&sp, &qp)?;
    println!("{}", exc::steiner_quadruple_systems(&sp)?.summary());
    println!("{}", exc::hadamard_check(&sp, qp.theta_c)?.summary());

    let gamma = exc::build_gamma(&sp, &xi)?;
    let orth = exc::build_orthogonality_graph(&sp)?;
    let cmp = exc::distinguish_graphs(&gamma, &orth)?;
    for (name, p) in [("Gamma", cmp.gamma_srg), ("G_E8", cmp.orth_srg)] {
        println!("{name:>5}: SRG({}, {}, {}, {})", p.v, p.k, p.lambda, p.mu);
    }
    println!("8-cliques: {} and {}", cmp.gamma_cliques, cmp.orth_cliques);
    println!("5-cliques per edge, Gamma: {:?}", cmp.gamma_edge_stat);
    println!("5-cliques per edge, G_E8:  {:?}", cmp.orth_edge_stat);
    println!("non-isomorphic: {}", cmp.distinguished);
    Ok(())
}
