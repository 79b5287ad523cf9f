//! Enumerates the maximal cliques of Γ(n,k)_q with Bron–Kerbosch and matches
//! each one against the star and top restrictions.
//!
//! ```text
//! cargo run --release --example clique_classification -- 5 2 2
//! ```

use std::collections::HashSet;

use grasscode::build_graph;
use grasscode::codegraph::{bron_kerbosch, classify_maximal_cliques, CliqueKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, q) = match args.as_slice() {
        [n, k, q] => (*n, *k, *q as u32),
        _ => (4, 2, 2),
    };
    let g = build_graph(n, k, q)?;
    let generic = bron_kerbosch(g.adjacency());
    let records = classify_maximal_cliques(&g);
    let stars = records.iter().filter(|r| r.kind == CliqueKind::Star).count();
    let tops = records.len() - stars;

    let classified: HashSet<&Vec<usize>> = records.iter().map(|r| &r.members).collect();
    let unclassified = generic.iter().filter(|c| !classified.contains(c)).count();
    let spurious = records.len() - generic.iter().filter(|c| classified.contains(c)).count();

    println!("Γ({n},{k})_{q}: {} vertices", g.len());
    println!("  Bron–Kerbosch maximal cliques: {}", generic.len());
    println!("  classified: {stars} stars, {tops} tops");
    println!("  unclassified: {unclassified}, classified but not found: {spurious}");
    for r in records.iter().take(5) {
        println!("  {:?} {} -> {} members", r.kind, r.center, r.members.len());
    }
    Ok(())
}
