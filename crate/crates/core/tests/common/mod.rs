//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library beyond reading a graph's edge list.

#![allow(dead_code)]

use std::collections::VecDeque;

use distance_antimagic::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub const FIXTURE_ORDER_LE7: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/data/graphs_order_le7.g6"
);

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for &(u, w) in g.edges() {
        adj[u].push(w);
        adj[w].push(u);
    }
    adj
}

/// All-pairs distances by one BFS per vertex.
pub fn bfs_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let adj = adjacency_lists(g);
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut dist = vec![None; n];
            dist[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let dx = dist[x].unwrap();
                for &y in &adj[x] {
                    if dist[y].is_none() {
                        dist[y] = Some(dx + 1);
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn oracle_neighborhoods(g: &Graph, d: &[u32]) -> Vec<Vec<usize>> {
    let dist = bfs_distances(g);
    dist.iter()
        .map(|row| {
            (0..row.len())
                .filter(|&y| row[y].is_some_and(|k| d.contains(&k)))
                .collect()
        })
        .collect()
}

pub fn oracle_weights(g: &Graph, labels: &[u32], d: &[u32]) -> Vec<u64> {
    oracle_neighborhoods(g, d)
        .iter()
        .map(|nb| nb.iter().map(|&y| u64::from(labels[y])).sum())
        .collect()
}

pub fn is_permutation(labels: &[u32]) -> bool {
    let mut s = labels.to_vec();
    s.sort_unstable();
    s.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
}

pub fn all_distinct(weights: &[u64]) -> bool {
    let mut s = weights.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// `(a, d)` when the sorted weights form an arithmetic progression.
pub fn progression(weights: &[u64]) -> Option<(u64, u64)> {
    let mut s = weights.to_vec();
    s.sort_unstable();
    let d = if s.len() > 1 { s[1] - s[0] } else { 0 };
    s.windows(2).all(|w| w[1] - w[0] == d).then_some((s[0], d))
}

pub fn has_twins(g: &Graph, d: &[u32]) -> bool {
    let nb = oracle_neighborhoods(g, d);
    (0..nb.len()).any(|i| (i + 1..nb.len()).any(|j| nb[i] == nb[j]))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every bijective labeling of `n` vertices.
pub fn all_labelings(n: usize) -> Vec<Vec<u32>> {
    permutations(n)
        .into_iter()
        .map(|p| p.into_iter().map(|i| i as u32 + 1).collect())
        .collect()
}

/// Smallest sorted relabeled edge list over all vertex permutations.
pub struct CanonicalForms {
    perms: Vec<Vec<Vec<usize>>>,
}

impl CanonicalForms {
    pub fn new(max_order: usize) -> Self {
        CanonicalForms {
            perms: (0..=max_order).map(permutations).collect(),
        }
    }

    pub fn of(&self, g: &Graph) -> (usize, Vec<(usize, usize)>) {
        let best = self.perms[g.order()]
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(u, w)| (p[u].min(p[w]), p[u].max(p[w])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        (g.order(), best)
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn random_labeling(rng: &mut impl Rng, n: usize) -> Vec<u32> {
    let mut l: Vec<u32> = (1..=n as u32).collect();
    l.shuffle(rng);
    l
}

/// Random nonempty subset of `0..=max`.
pub fn random_distances(rng: &mut impl Rng, max: u32) -> Vec<u32> {
    loop {
        let d: Vec<u32> = (0..=max).filter(|_| rng.gen_bool(0.4)).collect();
        if !d.is_empty() {
            return d;
        }
    }
}

pub fn read_fixture() -> Vec<String> {
    std::fs::read_to_string(FIXTURE_ORDER_LE7)
        .expect("fixture present")
        .lines()
        .map(str::to_string)
        .collect()
}

/// Whether complete weights meet a goal, decided from the weights alone.
pub fn oracle_accepts(goal: &distance_antimagic::Goal, weights: &[u64]) -> bool {
    use distance_antimagic::Goal;
    match *goal {
        Goal::AnyAntimagic => all_distinct(weights),
        Goal::Magic { k } => {
            weights.iter().all(|&w| w == weights[0]) && k.is_none_or(|k| k == weights[0])
        }
        Goal::Progression { a, d } => match progression(weights) {
            Some((pa, pd)) => {
                a.is_none_or(|a| a == pa) && (weights.len() == 1 || d.is_none_or(|d| d == pd))
            }
            None => false,
        },
    }
}
