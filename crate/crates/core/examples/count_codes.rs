//! Counts non-degenerate [n,k]_q codes by inclusion–exclusion and checks the
//! number against a full enumeration.
//!
//! ```text
//! cargo run --release --example count_codes -- 6 3
//! ```

use grasscode::codespace::{count_by_enumeration, count_nondegenerate, gaussian};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k) = match args.as_slice() {
        [n, k] => (*n, *k),
        _ => (5, 2),
    };
    println!("{:>3} {:>16} {:>16} {:>16}", "q", "[n,k]_q", "C(n,k)_q", "enumerated");
    for q in [2u32, 3, 4, 5] {
        let formula = count_nondegenerate(n, k, q);
        let enumerated = count_by_enumeration(n, k, q);
        let mark = if formula == enumerated.into() { "" } else { "  MISMATCH" };
        println!("{q:>3} {:>16} {formula:>16} {enumerated:>16}{mark}", gaussian(n, k, q));
    }
    Ok(())
}
