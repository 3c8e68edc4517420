//! Checks "twin-free implies distance antimagic" on every graph of small
//! order, for each nonempty distance set up to the diameter.
//!
//! cargo run --release --example conjecture_scan [FILE.g6]
//!
//! Without a file the built-in catalog of graphs up to order 6 is scanned.

use std::fs::File;

use distance_antimagic::catalog::graphs_up_to;
use distance_antimagic::conjecture::{scan, DPolicy, ScanOptions};
use distance_antimagic::graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = ScanOptions {
        policy: DPolicy::AllSubsets,
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..Default::default()
    };
    let report = match std::env::args().nth(1) {
        Some(path) => scan(File::open(path)?, &opts)?,
        None => {
            let text: String = graphs_up_to(6)?
                .iter()
                .map(|g| graph6::encode(g) + "\n")
                .collect();
            scan(text.as_bytes(), &opts)?
        }
    };
    print!("{}", report.summary_table());
    for f in &report.counterexamples {
        println!(
            "counterexample: line {} {} D={}",
            f.line, f.graph6, f.distances
        );
    }
    println!("input sha256 {}", report.input_digest);
    Ok(())
}
