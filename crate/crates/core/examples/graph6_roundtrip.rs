//! graph6 encoding and decoding, plus the built-in catalog of small graphs.
//!
//! cargo run --example graph6_roundtrip [GRAPH6...]

use distance_antimagic::catalog::graphs_of_order;
use distance_antimagic::{build_family, graph6, Family};

fn main() -> distance_antimagic::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    for s in &inputs {
        let g = graph6::decode(s)?;
        println!("{s}: {} vertices, edges {:?}", g.order(), g.edges());
    }
    if !inputs.is_empty() {
        return Ok(());
    }
    for f in [
        Family::Cycle(4),
        Family::Complete(4),
        Family::Wheel(5),
        Family::Prism(3),
    ] {
        let g = build_family(&f)?;
        let s = graph6::encode(&g);
        assert_eq!(graph6::decode(&s)?, g);
        println!("{:<12} {s}", f.to_string());
    }
    for n in 1..=6 {
        let graphs = graphs_of_order(n)?;
        let sample: Vec<String> = graphs.iter().take(4).map(graph6::encode).collect();
        println!(
            "order {n}: {:>3} graphs, e.g. {}",
            graphs.len(),
            sample.join(" ")
        );
    }
    Ok(())
}
