//! Builds one member of every family and prints its basic invariants.
//!
//! cargo run --example families

use distance_antimagic::{build_family, distance_matrix, graph6, Family};

fn main() -> distance_antimagic::Result<()> {
    let families = [
        Family::Cycle(7),
        Family::Sun(4),
        Family::Prism(5),
        Family::Complete(5),
        Family::Wheel(6),
        Family::Fan(5),
        Family::Friendship(3),
        Family::CompleteMultipartite(vec![2, 3, 3]),
    ];
    println!(
        "{:<18} {:>5} {:>5} {:>5}  {:<22} graph6",
        "family", "v", "e", "diam", "degrees"
    );
    for f in &families {
        let g = build_family(f)?;
        let diam = distance_matrix(&g)
            .diameter()
            .map_or("-".into(), |d| d.to_string());
        println!(
            "{:<18} {:>5} {:>5} {:>5}  {:<22} {}",
            f.to_string(),
            g.order(),
            g.size(),
            diam,
            format!("{:?}", g.degree_sequence()),
            graph6::encode(&g)
        );
    }
    Ok(())
}
