//! Distance magic and distance antimagic vertex labelings.
//!
//! For a graph `G`, a set of distances `D` and a bijection `f` from the
//! vertices onto `1..=v`, the D-weight of a vertex `x` is the sum of `f(y)`
//! over all `y` whose distance to `x` lies in `D`. A labeling is
//! *D-distance antimagic* when those weights are pairwise distinct,
//! *(a, d)-D-distance antimagic* when they form the progression
//! `a, a + d, ..., a + (v - 1) d`, and *D-distance magic* when they are all equal.
//!
//! The crate provides:
//!
//! - [`graph`]: simple graphs and the cycle, sun, prism, complete, wheel, fan,
//!   friendship and complete multipartite families;
//! - [`distance`]: distance matrices, D-neighborhoods and twin detection;
//! - [`graph6`]: nauty-compatible graph6 encoding, plus [`catalog`] of all small graphs;
//! - [`labeling`]: weights, classification and the regular-graph `(a, d)` bound;
//! - [`constructions`]: verified closed-form labelings for each family;
//! - [`mod@search`]: exact backtracking search and unpruned enumeration;
//! - [`conjecture`]: bulk checks of "twin-free implies D-distance antimagic";
//! - [`certificate`]: self-contained, re-checkable result documents.
//!
//! Runnable programs for each area live in the `examples/` directory; the
//! `dalab` binary exposes the same functionality on the command line.

pub mod catalog;
pub mod certificate;
pub mod conjecture;
pub mod constructions;
pub mod distance;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod labeling;
pub mod search;

pub use certificate::Certificate;
pub use conjecture::{
    check_conjecture, scan, DPolicy, ScanOptions, ScanReport, Verdict, VerdictKind,
};
pub use constructions::{Claim, Construction, ConstructionResult};
pub use distance::{
    d_neighborhood, distance_matrix, find_d_twins, DNeighborhoods, DistanceMatrix, DistanceSet,
};
pub use error::{Error, Result};
pub use graph::{build_family, Family, Graph};
pub use labeling::{
    classify, regular_ad_feasibility, weight_profile, Classification, FeasibleParams, Labeling,
    WeightProfile,
};
pub use search::{
    enumerate, prove_twin_shortcut, search, search_with, Budget, Goal, SearchOptions,
    SearchOutcome, TargetSpec,
};
