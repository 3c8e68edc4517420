//! Shortest-path distances, distance sets `D` and D-neighborhoods.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite set `D` of distances.
///
/// Elements larger than the diameter are allowed and select nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DistanceSet(BTreeSet<u32>);

impl DistanceSet {
    pub fn new(items: impl IntoIterator<Item = u32>) -> Self {
        DistanceSet(items.into_iter().collect())
    }

    /// `D = {1}`: ordinary open neighborhoods.
    pub fn adjacency() -> Self {
        Self::new([1])
    }

    pub fn contains(&self, k: u32) -> bool {
        self.0.contains(&k)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// All nonempty subsets of `{0, ..., max}`, ordered by size and then
    /// lexicographically.
    pub fn nonempty_subsets(max: u32, size_cap: Option<usize>) -> Vec<DistanceSet> {
        let universe: Vec<u32> = (0..=max).collect();
        let cap = size_cap.unwrap_or(universe.len()).min(universe.len());
        let mut out = Vec::new();
        for size in 1..=cap {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                out.push(DistanceSet::new(idx.iter().map(|&i| universe[i])));
                // next combination in lexicographic order
                let Some(pos) = (0..size)
                    .rev()
                    .find(|&p| idx[p] < universe.len() - size + p)
                else {
                    break;
                };
                idx[pos] += 1;
                for p in pos + 1..size {
                    idx[p] = idx[p - 1] + 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FromStr for DistanceSet {
    type Err = Error;

    /// Accepts `1`, `0,2`, `{1,2}` and `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if inner.is_empty() {
            return Ok(DistanceSet::default());
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad distance {t:?}")))
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(DistanceSet)
    }
}

impl FromIterator<u32> for DistanceSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        DistanceSet::new(iter)
    }
}

const UNREACHABLE: u32 = u32::MAX;

fn bfs(g: &Graph, source: usize, out: &mut [u32]) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if out[w] == UNREACHABLE {
                out[w] = out[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

/// All-pairs shortest path lengths of an unweighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// `None` when `x` and `y` lie in different components.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Option<u32> {
        let d = self.dist[x * self.order + y];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// The largest finite distance; equals the diameter for connected graphs.
    pub fn max_finite_distance(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<u32> {
        self.is_connected().then(|| self.max_finite_distance())
    }
}

/// Breadth-first search from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    for (x, row) in dist.chunks_mut(n).enumerate() {
        bfs(g, x, row);
    }
    DistanceMatrix { order: n, dist }
}

/// `N_D(x)`: the vertices whose distance to `x` lies in `D`, in index order.
pub fn d_neighborhood(g: &Graph, x: usize, d: &DistanceSet) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    bfs(g, x, &mut dist);
    (0..g.order())
        .filter(|&y| dist[y] != UNREACHABLE && d.contains(dist[y]))
        .collect()
}

/// Every D-neighborhood of a graph, as index lists and as bitsets.
#[derive(Debug, Clone)]
pub struct DNeighborhoods {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    lists: Vec<Vec<usize>>,
}

impl DNeighborhoods {
    pub fn new(g: &Graph, d: &DistanceSet) -> Self {
        Self::from_matrix(&distance_matrix(g), d)
    }

    pub fn from_matrix(dm: &DistanceMatrix, d: &DistanceSet) -> Self {
        let n = dm.order();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        let mut lists = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if dm.get(x, y).is_some_and(|k| d.contains(k)) {
                    bits[x * words + y / 64] |= 1 << (y % 64);
                    lists[x].push(y);
                }
            }
        }
        DNeighborhoods {
            order: n,
            words,
            bits,
            lists,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn of(&self, x: usize) -> &[usize] {
        &self.lists[x]
    }

    /// `|N_D(x)|`.
    pub fn degree(&self, x: usize) -> usize {
        self.lists[x].len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    /// Unordered pairs `(u, w)`, `u < w`, with `N_D(u) = N_D(w)`.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for w in u + 1..self.order {
                if self.row(u) == self.row(w) {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn first_twin_pair(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| (u + 1..self.order).map(move |w| (u, w)))
            .find(|&(u, w)| self.row(u) == self.row(w))
    }
}

/// All unordered vertex pairs with identical D-neighborhoods.
pub fn find_d_twins(g: &Graph, d: &DistanceSet) -> Vec<(usize, usize)> {
    DNeighborhoods::new(g, d).twins()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};

    fn fam(f: Family) -> Graph {
        build_family(&f).unwrap()
    }

    #[test]
    fn cycle_four_opposite() {
        let dm = distance_matrix(&fam(Family::Cycle(4)));
        assert_eq!(dm.get(0, 2), Some(2));
        assert_eq!(dm.diameter(), Some(2));
    }

    #[test]
    fn complete_all_ones() {
        let dm = distance_matrix(&fam(Family::Complete(5)));
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(dm.get(x, y), Some(u32::from(x != y)));
            }
        }
    }

    #[test]
    fn prism_three_diameter() {
        assert_eq!(distance_matrix(&fam(Family::Prism(3))).diameter(), Some(2));
    }

    #[test]
    fn disconnected_marker() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let dm = distance_matrix(&g);
        assert_eq!(dm.get(0, 2), None);
        assert_eq!(dm.diameter(), None);
        assert_eq!(dm.max_finite_distance(), 1);
        // infinite distance never matches
        assert_eq!(d_neighborhood(&g, 0, &DistanceSet::new(0..100)), vec![0, 1]);
    }

    #[test]
    fn neighborhood_examples() {
        let c5 = fam(Family::Cycle(5));
        assert_eq!(d_neighborhood(&c5, 3, &DistanceSet::new([0])), vec![3]);
        assert_eq!(
            d_neighborhood(&c5, 0, &DistanceSet::new([1, 2])),
            vec![1, 2, 3, 4]
        );
        let c6 = fam(Family::Cycle(6));
        assert_eq!(d_neighborhood(&c6, 0, &DistanceSet::new([2])), vec![2, 4]);
        assert!(d_neighborhood(&c6, 0, &DistanceSet::new([7])).is_empty());
    }

    #[test]
    fn twin_examples() {
        let one = DistanceSet::adjacency();
        assert_eq!(
            find_d_twins(&fam(Family::Cycle(4)), &one),
            vec![(0, 2), (1, 3)]
        );
        assert!(find_d_twins(&fam(Family::Complete(6)), &one).is_empty());
        let k23 = fam(Family::CompleteMultipartite(vec![2, 3]));
        assert_eq!(
            find_d_twins(&k23, &one),
            vec![(0, 1), (2, 3), (2, 4), (3, 4)]
        );
        let c6 = fam(Family::Cycle(6));
        assert_eq!(
            find_d_twins(&c6, &DistanceSet::new([1, 2])),
            vec![(0, 3), (1, 4), (2, 5)]
        );
    }

    #[test]
    fn parse_and_display() {
        let d: DistanceSet = "0,2".parse().unwrap();
        assert_eq!(d, DistanceSet::new([0, 2]));
        assert_eq!(d.to_string(), "{0,2}");
        assert_eq!(
            "{1, 3}".parse::<DistanceSet>().unwrap(),
            DistanceSet::new([1, 3])
        );
        assert!("{}".parse::<DistanceSet>().unwrap().is_empty());
        assert!("1,x".parse::<DistanceSet>().is_err());
    }

    #[test]
    fn subset_order() {
        let subsets: Vec<String> = DistanceSet::nonempty_subsets(2, None)
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(
            subsets,
            ["{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"]
        );
        assert_eq!(DistanceSet::nonempty_subsets(3, Some(2)).len(), 4 + 6);
        assert_eq!(DistanceSet::nonempty_subsets(0, None).len(), 1);
    }
}
