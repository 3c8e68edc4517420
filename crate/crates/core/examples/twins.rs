//! D-twins: vertices with the same D-neighborhood always get equal weights,
//! which rules out any D-distance antimagic labeling.
//!
//! cargo run --example twins

use distance_antimagic::{build_family, find_d_twins, DNeighborhoods, DistanceSet, Family};

fn main() -> distance_antimagic::Result<()> {
    let cases = [
        (Family::Cycle(4), DistanceSet::new([1])),
        (Family::Cycle(4), DistanceSet::new([0, 1])),
        (Family::Cycle(6), DistanceSet::new([1, 2])),
        (
            Family::CompleteMultipartite(vec![2, 3]),
            DistanceSet::new([1]),
        ),
        (Family::Wheel(4), DistanceSet::new([1])),
        (Family::Fan(3), DistanceSet::new([1])),
        (Family::Sun(4), DistanceSet::new([1])),
    ];
    for (family, d) in cases {
        let g = build_family(&family)?;
        let twins = find_d_twins(&g, &d);
        if twins.is_empty() {
            println!("{family} D={d}: twin-free");
            continue;
        }
        let nb = DNeighborhoods::new(&g, &d);
        let shown: Vec<String> = twins
            .iter()
            .map(|&(u, w)| format!("{u}~{w} {:?}", nb.of(u)))
            .collect();
        println!("{family} D={d}: {}", shown.join(", "));
    }
    Ok(())
}
