//! Vertex labelings, D-vertex-weights and their classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::{DNeighborhoods, DistanceSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection from the vertices `0..v` onto the labels `1..=v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Labeling(Vec<u32>);

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        let v = labels.len();
        if v == 0 {
            return Err(Error::InvalidLabeling("empty labeling".into()));
        }
        let mut seen = vec![false; v];
        for &l in &labels {
            let slot = (l as usize)
                .checked_sub(1)
                .filter(|&i| i < v)
                .ok_or_else(|| Error::InvalidLabeling(format!("label {l} outside 1..={v}")))?;
            if std::mem::replace(&mut seen[slot], true) {
                return Err(Error::InvalidLabeling(format!("label {l} used twice")));
            }
        }
        Ok(Labeling(labels))
    }

    /// `f(x) = x + 1`.
    pub fn identity(order: usize) -> Self {
        Labeling((1..=order as u32).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn label(&self, x: usize) -> u32 {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Labeling {
    type Error = Error;

    fn try_from(labels: Vec<u32>) -> Result<Self> {
        Labeling::new(labels)
    }
}

impl From<Labeling> for Vec<u32> {
    fn from(l: Labeling) -> Self {
        l.0
    }
}

impl fmt::Display for Labeling {
    /// Whitespace-separated labels in vertex-index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidLabeling(format!("not a label: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(labels)
    }
}

/// Shape of a multiset of D-vertex-weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Classification {
    /// Every weight equals `k`; this is also the `(k, 0)` case.
    Magic { k: u64 },
    /// Sorted weights are `a, a + d, ..., a + (v - 1) d` with `d >= 1`.
    ArithmeticAntimagic { a: u64, d: u64 },
    /// Pairwise distinct, but not an arithmetic progression.
    PlainAntimagic,
    /// Some weight repeats (and not all weights are equal).
    Repeated,
}

impl Classification {
    /// Weights pairwise distinct.
    pub fn is_antimagic(&self) -> bool {
        matches!(
            self,
            Classification::ArithmeticAntimagic { .. } | Classification::PlainAntimagic
        )
    }

    /// `(a, d)` if the weights form an arithmetic progression, `d = 0` included.
    pub fn progression(&self) -> Option<(u64, u64)> {
        match *self {
            Classification::Magic { k } => Some((k, 0)),
            Classification::ArithmeticAntimagic { a, d } => Some((a, d)),
            _ => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Magic { k } => write!(f, "magic (k = {k})"),
            Classification::ArithmeticAntimagic { a, d } => write!(f, "({a},{d})-antimagic"),
            Classification::PlainAntimagic => f.write_str("antimagic"),
            Classification::Repeated => f.write_str("repeated weights"),
        }
    }
}

/// Classifies a weight sequence. A single weight is magic.
pub fn classify(weights: &[u64]) -> Classification {
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let (Some(&first), Some(&last)) = (sorted.first(), sorted.last()) else {
        return Classification::Repeated;
    };
    if first == last {
        return Classification::Magic { k: first };
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Classification::Repeated;
    }
    let d = sorted[1] - sorted[0];
    if sorted.windows(2).all(|w| w[1] - w[0] == d) {
        Classification::ArithmeticAntimagic { a: first, d }
    } else {
        Classification::PlainAntimagic
    }
}

/// Per-vertex D-weights of a labeling, with their classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub weights: Vec<u64>,
    pub distances: DistanceSet,
    pub classification: Classification,
}

/// `w_D(x) = sum of f(y) over y in N_D(x)`, computed from precomputed neighborhoods.
pub fn weights_from(nbhd: &DNeighborhoods, f: &Labeling) -> Vec<u64> {
    (0..nbhd.order())
        .map(|x| nbhd.of(x).iter().map(|&y| u64::from(f.label(y))).sum())
        .collect()
}

pub fn weight_profile(g: &Graph, f: &Labeling, d: &DistanceSet) -> Result<WeightProfile> {
    if f.order() != g.order() {
        return Err(Error::InvalidLabeling(format!(
            "labeling has {} entries, graph has {} vertices",
            f.order(),
            g.order()
        )));
    }
    let weights = weights_from(&DNeighborhoods::new(g, d), f);
    Ok(WeightProfile {
        classification: classify(&weights),
        weights,
        distances: d.clone(),
    })
}

/// Necessary `(a, d)` parameters for an `r`-regular graph of order `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleParams {
    pub r: u64,
    pub v: u64,
    /// `(a, d)` pairs, ascending in `d`.
    pub pairs: Vec<(u64, u64)>,
}

impl FeasibleParams {
    pub fn allows(&self, d: u64) -> bool {
        self.pairs.iter().any(|&(_, pd)| pd == d)
    }

    pub fn forced_a(&self, d: u64) -> Option<u64> {
        self.pairs.iter().find(|&&(_, pd)| pd == d).map(|&(a, _)| a)
    }
}

/// Differences `d` that survive the counting argument for `r`-regular graphs.
///
/// Summing all weights counts every label `r` times, so
/// `v a + d v (v - 1) / 2 = r v (v + 1) / 2`, forcing `a = (r (v + 1) - d (v - 1)) / 2`.
/// The smallest weight is at least `1 + ... + r`, which bounds
/// `d <= r (v - r) / (v - 1)`. Only necessary conditions are applied.
pub fn regular_ad_feasibility(r: u64, v: u64) -> Result<FeasibleParams> {
    if v == 0 || r >= v {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= r < v, got r = {r}, v = {v}"
        )));
    }
    if v == 1 {
        return Ok(FeasibleParams {
            r,
            v,
            pairs: vec![(0, 0)],
        });
    }
    let d_max = r * (v - r) / (v - 1);
    let floor_a = r * (r + 1) / 2;
    let pairs = (0..=d_max)
        .filter_map(|d| {
            let twice_a = (r * (v + 1)).checked_sub(d * (v - 1))?;
            (twice_a % 2 == 0).then_some((twice_a / 2, d))
        })
        .filter(|&(a, _)| a >= floor_a)
        .collect();
    Ok(FeasibleParams { r, v, pairs })
}
