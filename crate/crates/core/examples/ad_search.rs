//! Exact search for (a, d)-distance antimagic and distance magic labelings,
//! covering both labelings that exist and exhaustive nonexistence results.
//!
//! cargo run --release --example ad_search

use distance_antimagic::{
    build_family, search, Budget, DistanceSet, Family, SearchOutcome, TargetSpec,
};

fn main() -> distance_antimagic::Result<()> {
    let one = DistanceSet::adjacency;
    let cases = [
        (Family::Cycle(4), TargetSpec::magic(None, one())),
        (
            Family::Cycle(7),
            TargetSpec::progression(None, Some(1), one()),
        ),
        (
            Family::Wheel(3),
            TargetSpec::progression(Some(6), Some(1), one()),
        ),
        (
            Family::Wheel(5),
            TargetSpec::progression(None, Some(1), one()),
        ),
        (
            Family::Fan(4),
            TargetSpec::progression(None, Some(1), one()),
        ),
        (
            Family::Friendship(2),
            TargetSpec::progression(Some(6), Some(1), one()),
        ),
        (
            Family::Prism(6),
            TargetSpec::progression(None, Some(1), one()),
        ),
        // no labeling exists for these
        (Family::Cycle(6), TargetSpec::progression(None, None, one())),
        (Family::Sun(5), TargetSpec::progression(None, None, one())),
        (Family::Fan(5), TargetSpec::progression(None, None, one())),
        (Family::Wheel(7), TargetSpec::progression(None, None, one())),
        (
            Family::Friendship(3),
            TargetSpec::progression(None, None, one()),
        ),
    ];
    for (family, target) in cases {
        let g = build_family(&family)?;
        let label = format!("{family} {}", target.goal);
        match search(&g, &target, Budget::default()) {
            SearchOutcome::Found {
                labeling,
                profile,
                nodes,
            } => {
                println!(
                    "{label:<36} found  {labeling}  -> {} ({nodes} nodes)",
                    profile.classification
                )
            }
            SearchOutcome::ExhaustedNone { nodes } => {
                println!("{label:<36} none   ({nodes} nodes)")
            }
            SearchOutcome::BudgetExceeded { nodes } => {
                println!("{label:<36} undecided after {nodes} nodes")
            }
        }
    }
    Ok(())
}
