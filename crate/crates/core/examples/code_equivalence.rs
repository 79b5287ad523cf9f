//! Orbits of the monomial group on the non-degenerate [n,k]_q codes, and an
//! equivalence witness between two members of the largest orbit.
//!
//! ```text
//! cargo run --release --example code_equivalence -- 5 2 3
//! ```

use grasscode::equiv::{are_equivalent, monomial_group_order, orbits, Mode};
use grasscode::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, q) = match args.as_slice() {
        [n, k, q] => (*n, *k, *q as u32),
        _ => (4, 2, 4),
    };
    let field = Field::new(q)?;
    for mode in [Mode::Strict, Mode::Generalized] {
        let parts = orbits(n, k, q, mode)?;
        let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        println!(
            "{mode}: group order {}, {} orbits, sizes {:?}",
            monomial_group_order(n, &field, mode),
            parts.len(),
            sizes
        );
        let largest = parts.iter().max_by_key(|o| o.len()).unwrap();
        let (a, b) = (&largest[0], &largest[largest.len() - 1]);
        if let Some(w) = are_equivalent(&field, a, b, mode)? {
            println!("  {a} -> {b} via {}", w.to_json());
        }
    }
    Ok(())
}
