//! Certificates are JSON documents that can be checked again from their own
//! contents. This builds a few, rechecks them, and shows a tampered one
//! being rejected.
//!
//! cargo run --example certificates

use distance_antimagic::certificate::{Body, Certificate};
use distance_antimagic::search::prove_twin_shortcut;
use distance_antimagic::Construction;
use distance_antimagic::{
    build_family, search_with, DistanceSet, Family, Labeling, SearchOptions, TargetSpec,
};

fn main() -> distance_antimagic::Result<()> {
    let cmd = vec!["example".to_string()];
    let d = DistanceSet::adjacency();

    let r = Construction::Friendship.apply(2)?;
    let built = Certificate::construction(&cmd, Construction::Friendship, 2, &r);
    print!("{}", built.to_json());

    let c4 = build_family(&Family::Cycle(4))?;
    let twins = Certificate::twins(
        &cmd,
        &c4,
        &d,
        prove_twin_shortcut(&c4, &d).expect("C4 has twins"),
    );

    let f3 = build_family(&Family::Fan(3))?;
    let target = TargetSpec::progression(None, None, d.clone());
    let opts = SearchOptions::default();
    let exhausted =
        Certificate::search(&cmd, &f3, &target, &opts, &search_with(&f3, &target, &opts));

    for cert in [&built, &twins, &exhausted] {
        let parsed = Certificate::from_json(&cert.to_json())?;
        println!("{:<22} recheck: {:?}", parsed.kind(), parsed.recheck());
    }

    let mut forged = built.clone();
    if let Body::ConstructionVerified { labeling, .. } = &mut forged.body {
        *labeling = Labeling::identity(labeling.order());
    }
    println!("{:<22} recheck: {:?}", "forged labeling", forged.recheck());
    Ok(())
}
