//! Closed-form labelings for the graph families, each verified before it is
//! returned.
//!
//! All weights here use `D = {1}`. Vertex indices follow the conventions in
//! [`crate::graph`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::distance::{find_d_twins, DistanceSet};
use crate::error::{Error, Result};
use crate::graph::{build_family, Family, Graph};
use crate::labeling::{
    regular_ad_feasibility, weight_profile, Classification, Labeling, WeightProfile,
};
use crate::search::{search, Budget, SearchOutcome, TargetSpec};

/// Largest odd cycle handed to the `(a, 1)` search.
pub const CYCLE_AP_MAX_ORDER: usize = 15;
/// Largest prism cycle length handed to the `(a, 1)` search.
pub const PRISM_AP_MAX_N: usize = 10;

/// The property a construction promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    /// Pairwise distinct weights.
    Antimagic,
    /// Weights `a, a + d, ...`; `d = 0` is a magic labeling.
    Progression { a: u64, d: u64 },
}

impl Claim {
    pub fn holds(&self, c: &Classification) -> bool {
        match self {
            Claim::Antimagic => c.is_antimagic(),
            Claim::Progression { a, d } => c.progression() == Some((*a, *d)),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Antimagic => f.write_str("distance antimagic"),
            Claim::Progression { a, d: 0 } => write!(f, "distance magic (k = {a})"),
            Claim::Progression { a, d } => write!(f, "({a},{d})-distance antimagic"),
        }
    }
}

/// A labeling whose claim has been checked against recomputed weights.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub labeling: Labeling,
    pub claim: Claim,
    pub profile: WeightProfile,
    /// Repairs or degenerate cases worth reporting.
    pub notes: Vec<String>,
}

fn verified(
    graph: Graph,
    labels: Vec<u32>,
    claim: Claim,
    notes: Vec<String>,
) -> Result<ConstructionResult> {
    let labeling = Labeling::new(labels).map_err(|e| Error::Verification(e.to_string()))?;
    let profile = weight_profile(&graph, &labeling, &DistanceSet::adjacency())?;
    if !claim.holds(&profile.classification) {
        return Err(Error::Verification(format!(
            "claimed {claim}, weights are {}",
            profile.classification
        )));
    }
    Ok(ConstructionResult {
        graph,
        labeling,
        claim,
        profile,
        notes,
    })
}

fn twin_obstruction(g: &Graph) -> Error {
    match find_d_twins(g, &DistanceSet::adjacency()).first() {
        Some(&(u, w)) => Error::TwinObstruction(u, w),
        None => Error::Verification("expected a twin pair".into()),
    }
}

/// Labels of `x_1..x_n` for the cycle constructions (`n != 4`).
fn cycle_labels(n: usize) -> Vec<u32> {
    if n % 2 == 1 {
        return (1..=n as u32).collect();
    }
    let k = n / 2;
    (1..=n)
        .map(|i| {
            let l = match (i % 2 == 0, i <= k + 1) {
                _ if i == 1 => 1,
                (false, true) => i - 1,
                (false, false) => n + 2 - i,
                (true, true) => k - 1 + i,
                (true, false) => 3 * k + 2 - i,
            };
            l as u32
        })
        .collect()
}

/// Distance antimagic labeling of `C_n`, `n != 4`.
///
/// Odd cycles use the identity: the two weights `n` and `n + 2` are odd and
/// all others are even and distinct. Even cycles use a piecewise labeling
/// alternating between a low and a high half.
pub fn label_cycle(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Cycle(n))?;
    if n == 4 {
        return Err(twin_obstruction(&g));
    }
    verified(g, cycle_labels(n), Claim::Antimagic, Vec::new())
}

fn progression_by_search(g: Graph, a: u64, d: u64, what: &str) -> Result<ConstructionResult> {
    let target = TargetSpec::progression(Some(a), Some(d), DistanceSet::adjacency());
    match search(&g, &target, Budget::default()) {
        SearchOutcome::Found { labeling, .. } => verified(
            g,
            labeling.into(),
            Claim::Progression { a, d },
            vec![format!("{what}: labeling found by exhaustive search")],
        ),
        SearchOutcome::ExhaustedNone { .. } => Err(Error::ProvablyInfeasible(format!(
            "{what}: no ({a},{d}) labeling exists (search exhausted)"
        ))),
        SearchOutcome::BudgetExceeded { nodes } => Err(Error::BudgetExceeded(nodes)),
    }
}

/// `(a, d)`-distance antimagic labeling of `C_n`: `(5, 0)` for `n = 4`,
/// `((n + 3) / 2, 1)` for odd `n`, found by search.
pub fn label_cycle_ap(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Cycle(n))?;
    let (a, d) = match n {
        4 => (5, 0),
        _ if n.is_multiple_of(2) => {
            return Err(Error::ProvablyInfeasible(format!(
                "even cycle C_{n} has no (a,d)-distance antimagic labeling"
            )))
        }
        _ if n > CYCLE_AP_MAX_ORDER => return Err(Error::BudgetExceeded(0)),
        _ => {
            let feasible = regular_ad_feasibility(2, n as u64)?;
            let a = feasible.forced_a(1).ok_or_else(|| {
                Error::ProvablyInfeasible(format!("C_{n}: d = 1 fails the counting bound"))
            })?;
            (a, 1)
        }
    };
    progression_by_search(g, a, d, &format!("cycle:{n}"))
}

/// `f(x_i) = i`, giving `w(x_i) = n (n + 1) / 2 - i`.
pub fn label_complete(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Complete(n))?;
    let n64 = n as u64;
    let (claim, notes) = if n == 1 {
        (
            Claim::Progression { a: 0, d: 0 },
            vec!["K_1: single weight 0, trivially magic".to_string()],
        )
    } else {
        (
            Claim::Progression {
                a: n64 * (n64 - 1) / 2,
                d: 1,
            },
            Vec::new(),
        )
    };
    verified(g, (1..=n as u32).collect(), claim, notes)
}

/// Rim `x_i` gets `n + i`, leaf `y_i` gets `i`, so `w(y_i) = f(x_i)`.
///
/// When `3 | n` the rim weights `3n + 3` and `4n` collide with `2n + 3i`;
/// swapping the leaf labels of `y_{n/3}, y_{n/3+1}` and of `y_{2n/3}, y_{2n/3+1}`
/// separates them. For `n = 3` both swaps touch `y_2`, and the leaf order
/// `(1, 3, 2)` is used instead.
pub fn label_sun(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Sun(n))?;
    let n32 = n as u32;
    let mut labels: Vec<u32> = (1..=n32).map(|i| n32 + i).chain(1..=n32).collect();
    let mut notes = Vec::new();
    let leaf = |i: usize| n + i - 1;
    if n == 3 {
        labels[leaf(2)] = 3;
        labels[leaf(3)] = 2;
        notes.push("n = 3: leaf labels (1,3,2)".to_string());
    } else if n.is_multiple_of(3) {
        let t = n / 3;
        labels.swap(leaf(t + 1), leaf(t));
        labels.swap(leaf(2 * t), leaf(2 * t + 1));
        notes.push(format!(
            "swapped leaf labels y{}<->y{} and y{}<->y{}",
            t + 1,
            t,
            2 * t,
            2 * t + 1
        ));
    }
    verified(g, labels, Claim::Antimagic, notes)
}

fn prism_cache() -> &'static Mutex<HashMap<usize, Vec<u32>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<u32>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `(a, d)`-distance antimagic labeling of the prism `C_n x P_2`.
///
/// Only `d = 1` survives the regular-graph bound, and it forces
/// `a = 2n + 2` (the prism order plus two). Labelings come from search and
/// are cached per `n`.
pub fn label_prism_ap(n: usize, d: u64) -> Result<ConstructionResult> {
    let g = build_family(&Family::Prism(n))?;
    let feasible = regular_ad_feasibility(3, 2 * n as u64)?;
    let Some(a) = feasible.forced_a(d) else {
        return Err(Error::ProvablyInfeasible(format!(
            "prism:{n} with d = {d}: a = (3(2n+1) - d(2n-1))/2 is not an admissible integer"
        )));
    };
    if n > PRISM_AP_MAX_N {
        return Err(Error::BudgetExceeded(0));
    }
    let cached = prism_cache()
        .lock()
        .expect("prism cache poisoned")
        .get(&n)
        .cloned();
    if let Some(labels) = cached {
        return verified(
            g,
            labels,
            Claim::Progression { a, d },
            vec!["cached search result".into()],
        );
    }
    let result = progression_by_search(g, a, d, &format!("prism:{n}"))?;
    prism_cache()
        .lock()
        .expect("prism cache poisoned")
        .insert(n, result.labeling.as_slice().to_vec());
    Ok(result)
}

/// Rim labeled as in [`label_cycle`], center `n + 1`; the center weight is `n (n + 1) / 2`.
pub fn label_wheel(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Wheel(n))?;
    if n == 4 {
        return Err(twin_obstruction(&g));
    }
    let mut labels = vec![n as u32 + 1];
    labels.extend(cycle_labels(n));
    match verified(g.clone(), labels, Claim::Antimagic, Vec::new()) {
        Err(Error::Verification(_)) => {
            // center weight collided with a rim weight
            let target = TargetSpec::antimagic(DistanceSet::adjacency());
            match search(&g, &target, Budget::nodes(1_000_000)) {
                SearchOutcome::Found { labeling, .. } => verified(
                    g,
                    labeling.into(),
                    Claim::Antimagic,
                    vec!["repaired by bounded search".into()],
                ),
                other => Err(Error::Verification(format!(
                    "wheel:{n} repair failed: {other:?}"
                ))),
            }
        }
        result => result,
    }
}

/// Center `ceil((n + 2) / 2)`; path vertex `x_i` gets `i` up to
/// `floor((n + 1) / 2)` and `i + 1` beyond.
pub fn label_fan(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Fan(n))?;
    if n == 3 {
        return Err(twin_obstruction(&g));
    }
    let half = n.div_ceil(2);
    let mut labels = vec![(n + 3) as u32 / 2];
    labels.extend((1..=n).map(|i| if i <= half { i as u32 } else { i as u32 + 1 }));
    verified(g, labels, Claim::Antimagic, Vec::new())
}

/// Center `2n + 1`, `x_i` gets `i`; the center weight is `n (2n + 1)` and
/// the two vertices of triangle `i` weigh `2n + 2i + 1` and `2n + 2i`.
pub fn label_friendship(n: usize) -> Result<ConstructionResult> {
    let g = build_family(&Family::Friendship(n))?;
    let mut labels = vec![2 * n as u32 + 1];
    labels.extend(1..=2 * n as u32);
    verified(g, labels, Claim::Antimagic, Vec::new())
}

/// The constructions by name, for dispatch from text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Cycle,
    CycleAp,
    Complete,
    Sun,
    PrismAp,
    Wheel,
    Fan,
    Friendship,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::Cycle,
        Construction::CycleAp,
        Construction::Complete,
        Construction::Sun,
        Construction::PrismAp,
        Construction::Wheel,
        Construction::Fan,
        Construction::Friendship,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Construction::Cycle => "cycle",
            Construction::CycleAp => "cycle-ap",
            Construction::Complete => "complete",
            Construction::Sun => "sun",
            Construction::PrismAp => "prism-ap",
            Construction::Wheel => "wheel",
            Construction::Fan => "fan",
            Construction::Friendship => "friendship",
        }
    }

    /// The family member the construction labels.
    pub fn family(&self, n: usize) -> Family {
        match self {
            Construction::Cycle | Construction::CycleAp => Family::Cycle(n),
            Construction::Complete => Family::Complete(n),
            Construction::Sun => Family::Sun(n),
            Construction::PrismAp => Family::Prism(n),
            Construction::Wheel => Family::Wheel(n),
            Construction::Fan => Family::Fan(n),
            Construction::Friendship => Family::Friendship(n),
        }
    }

    pub fn apply(&self, n: usize) -> Result<ConstructionResult> {
        match self {
            Construction::Cycle => label_cycle(n),
            Construction::CycleAp => label_cycle_ap(n),
            Construction::Complete => label_complete(n),
            Construction::Sun => label_sun(n),
            Construction::PrismAp => label_prism_ap(n, 1),
            Construction::Wheel => label_wheel(n),
            Construction::Fan => label_fan(n),
            Construction::Friendship => label_friendship(n),
        }
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s || (s == "prism" && *c == Construction::PrismAp))
            .ok_or_else(|| Error::InvalidParameter(format!("no construction named {s:?}")))
    }
}
