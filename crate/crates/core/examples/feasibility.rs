//! Necessary (a, d) parameters for regular graphs: prisms, cycles and
//! complete graphs.
//!
//! cargo run --example feasibility

use distance_antimagic::regular_ad_feasibility;

fn main() -> distance_antimagic::Result<()> {
    let rows = (3..=8u64)
        .map(|n| (format!("prism n={n}"), 3, 2 * n))
        .chain((3..=8u64).map(|n| (format!("cycle n={n}"), 2, n)))
        .chain((2..=6u64).map(|n| (format!("complete n={n}"), n - 1, n)));
    println!("{:<14} {:>3} {:>3}  (a, d) pairs", "graph", "r", "v");
    for (name, r, v) in rows {
        let p = regular_ad_feasibility(r, v)?;
        println!("{name:<14} {r:>3} {v:>3}  {:?}", p.pairs);
    }
    Ok(())
}
