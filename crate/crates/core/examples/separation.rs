//! Evaluates the inequalities separating maximal star sizes from top sizes
//! over a parameter sweep and prints any that fail.
//!
//! ```text
//! cargo run --example separation
//! ```

use grasscode::codegraph::separation_checks;

fn main() {
    let mut total = 0;
    let mut failed = 0;
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        for n in 4..=12 {
            for k in 2..n - 1 {
                for c in separation_checks(n, k, q) {
                    total += 1;
                    if !c.holds {
                        failed += 1;
                        println!("(n={n}, k={k}, q={q}) {}: {} vs {}", c.name, c.lhs, c.rhs);
                    }
                }
            }
        }
    }
    println!("{total} inequalities checked, {failed} failed");
    for c in separation_checks(5, 3, 2) {
        println!("  (5,3,2) {}: {} {} {}", c.name, c.lhs, if c.strict { ">" } else { ">=" }, c.rhs);
    }
}
