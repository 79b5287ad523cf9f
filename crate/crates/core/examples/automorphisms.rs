//! Compares the automorphism group of Γ(n,k)_q with the permutations of its
//! vertices induced by monomial semilinear maps.
//!
//! ```text
//! cargo run --release --example automorphisms -- 5 2 2
//! ```

use grasscode::equiv::{compare_with_monomial_group, Mode, DEFAULT_VERTEX_GUARD};
use grasscode::build_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let instances: Vec<(usize, usize, u32)> = match args.as_slice() {
        [n, k, q] => vec![(*n, *k, *q as u32)],
        _ => vec![(4, 2, 2), (5, 2, 2), (5, 3, 2)],
    };
    for (n, k, q) in instances {
        let g = build_graph(n, k, q)?;
        let started = std::time::Instant::now();
        match compare_with_monomial_group(&g, Mode::Strict, DEFAULT_VERTEX_GUARD) {
            Ok(c) => println!(
                "Γ({n},{k})_{q}: {} vertices, |Aut| = {}, monomial image = {} (group order {}), {} [{:?}]",
                c.vertices,
                c.automorphism_order,
                c.monomial_image_order,
                c.monomial_group_order,
                if c.matches { "match" } else { "MISMATCH" },
                started.elapsed()
            ),
            Err(e) => println!("Γ({n},{k})_{q}: {} vertices, skipped: {e}", g.len()),
        }
    }
    Ok(())
}
