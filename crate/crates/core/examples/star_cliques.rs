//! Star restrictions of Γ(n,k)_q grouped by c(S), the number of coordinate
//! hyperplanes containing the center: observed size, the closed-form size
//! and how many of them are maximal cliques.
//!
//! ```text
//! cargo run --release --example star_cliques -- 5 3 2
//! ```

use std::collections::BTreeMap;

use grasscode::build_graph;
use grasscode::codegraph::{is_maximal_clique, star_restricted, star_size_formula};
use grasscode::codespace::{enumerate_grassmannian, q_number};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, q) = match args.as_slice() {
        [n, k, q] => (*n, *k, *q as u32),
        _ => (5, 2, 2),
    };
    let g = build_graph(n, k, q)?;
    println!("Γ({n},{k})_{q}: {} vertices, {} edges", g.len(), g.edge_count());

    // c(S) -> (centers, sizes seen, maximal count)
    let mut by_profile: BTreeMap<usize, (usize, Vec<usize>, usize)> = BTreeMap::new();
    for s in enumerate_grassmannian(n, k - 1, q) {
        let members = star_restricted(&s, &g)?;
        let entry = by_profile.entry(s.coordinate_profile().c).or_default();
        entry.0 += 1;
        if !entry.1.contains(&members.len()) {
            entry.1.push(members.len());
        }
        if !members.is_empty() && is_maximal_clique(&g, &members)? {
            entry.2 += 1;
        }
    }
    println!("{:>4} {:>8} {:>10} {:>10} {:>8}", "c(S)", "centers", "size", "formula", "maximal");
    for (c, (count, sizes, maximal)) in by_profile {
        let formula = if c == 0 {
            q_number(n - k + 1, q).to_string()
        } else {
            star_size_formula(c, n, k, q)?.to_string()
        };
        println!("{c:>4} {count:>8} {:>10} {formula:>10} {maximal:>8}", format!("{sizes:?}"));
    }
    Ok(())
}
