//! Hyperplane sections and the top restriction of a single code, read from
//! a generator-matrix file. Without arguments, runs both bundled fixtures.
//!
//! ```text
//! cargo run --example top_sections -- fixtures/code_12_4_2.txt 2
//! ```

use std::path::{Path, PathBuf};

use grasscode::codegraph::{hyperplane_sections, top_members};
use grasscode::codespace::{parse_matrix, Subspace};
use grasscode::Field;

fn show(path: &Path, q: u32) -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::new(q)?;
    let m = parse_matrix(&std::fs::read_to_string(path)?, &field)?;
    let u = Subspace::from_matrix(&field, &m)?;
    println!("{}: [{},{}]_{q} code", path.display(), u.ambient_dim(), u.dim());

    let sections = hyperplane_sections(&field, &u)?;
    println!("  distinct sections U∩C_i: {}", sections.distinct());
    println!("  grouping matches column proportionality: {}", sections.partitions_agree());

    let top: Vec<Subspace> = top_members(&field, &u)
        .into_iter()
        .filter(Subspace::is_nondegenerate)
        .collect();
    println!("  non-degenerate hyperplanes: {}", top.len());
    for x in &top {
        println!("    {x}");
    }
    if let Some((first, rest)) = top.split_first() {
        let common = rest
            .iter()
            .try_fold(first.clone(), |acc, x| acc.intersection(&field, x));
        if let Some(l) = common {
            println!("  common subspace: {l} (dimension {})", l.dim());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [path, q] => show(Path::new(path), q.parse()?),
        _ => {
            let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
            show(&dir.join("code_7_3_2.txt"), 2)?;
            show(&dir.join("code_12_4_2.txt"), 2)
        }
    }
}
