//! Exact backtracking search for labelings whose D-weights meet a target.
//!
//! Labels are assigned vertex by vertex. Each vertex keeps a partial weight
//! and a count of unlabeled D-neighbors; once the count reaches zero the
//! weight is final and is checked against the target immediately. For
//! progression targets every open vertex is additionally bounded by giving
//! its unlabeled D-neighbors the smallest or largest unused labels, and the
//! branch dies when that interval holds no free target value.
//!
//! The search doubles as a nonexistence prover: [`SearchOutcome::ExhaustedNone`]
//! is only reported after the entire space has been covered.
//!
//! Parallel runs split on the label of the first vertex. Branches are merged
//! in label order, so outcomes, node counts and found labelings do not depend
//! on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::{DNeighborhoods, DistanceSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{weight_profile, Labeling, WeightProfile};

/// What the weights must look like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "goal", rename_all = "snake_case")]
pub enum Goal {
    /// Pairwise distinct weights.
    AnyAntimagic,
    /// Weights `{a, a + d, ..., a + (v - 1) d}`; `None` quantifies over all values.
    Progression { a: Option<u64>, d: Option<u64> },
    /// All weights equal `k`; `None` accepts any constant.
    Magic { k: Option<u64> },
}

impl Goal {
    fn as_progression(self) -> Option<(Option<u64>, Option<u64>)> {
        match self {
            Goal::AnyAntimagic => None,
            Goal::Progression { a, d } => Some((a, d)),
            Goal::Magic { k } => Some((k, Some(0))),
        }
    }

    /// Whether a complete weight vector meets the goal.
    pub fn accepts(&self, weights: &[u64]) -> bool {
        let mut sorted = weights.to_vec();
        sorted.sort_unstable();
        match self.as_progression() {
            None => sorted.windows(2).all(|w| w[0] < w[1]),
            Some((a, d)) => {
                let first = sorted[0];
                if a.is_some_and(|a| a != first) {
                    return false;
                }
                if sorted.len() == 1 {
                    return true;
                }
                let gap = sorted[1] - sorted[0];
                d.is_none_or(|d| d == gap) && sorted.windows(2).all(|w| w[1] - w[0] == gap)
            }
        }
    }
}

impl std::fmt::Display for Goal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let opt = |x: Option<u64>| x.map_or_else(|| "any".to_string(), |x| x.to_string());
        match *self {
            Goal::AnyAntimagic => f.write_str("antimagic"),
            Goal::Progression { a, d } => write!(f, "({},{})-antimagic", opt(a), opt(d)),
            Goal::Magic { k } => write!(f, "magic (k = {})", opt(k)),
        }
    }
}

/// A goal together with the distance set defining the weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TargetSpec {
    pub goal: Goal,
    pub distances: DistanceSet,
}

impl TargetSpec {
    pub fn antimagic(distances: DistanceSet) -> Self {
        TargetSpec {
            goal: Goal::AnyAntimagic,
            distances,
        }
    }

    pub fn progression(a: Option<u64>, d: Option<u64>, distances: DistanceSet) -> Self {
        TargetSpec {
            goal: Goal::Progression { a, d },
            distances,
        }
    }

    pub fn magic(k: Option<u64>, distances: DistanceSet) -> Self {
        TargetSpec {
            goal: Goal::Magic { k },
            distances,
        }
    }
}

/// Limits on a single search. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: Some(100_000_000),
            time: Some(Duration::from_secs(300)),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            nodes: None,
            time: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            nodes: Some(limit),
            time: None,
        }
    }
}

/// Individually switchable pruning rules. Disabling any of them never
/// changes a verdict, only the amount of work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pruning {
    /// Check each weight against the target as soon as it is final.
    pub finalization: bool,
    /// Interval bounds on open weights for progression and magic targets.
    pub interval_bounds: bool,
    /// Restrict the start value `a` to the window allowed by the total weight.
    pub sum_window: bool,
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning {
            finalization: true,
            interval_bounds: true,
            sum_window: true,
        }
    }
}

impl Pruning {
    pub fn none() -> Self {
        Pruning {
            finalization: false,
            interval_bounds: false,
            sum_window: false,
        }
    }
}

/// How the vertices are ordered for assignment.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableOrder {
    /// Descending D-degree, ties by index.
    #[default]
    DegreeThenIndex,
    /// Greedy: next vertex is the one completing the most D-neighborhoods,
    /// then the one leaving the fewest open slots in them; ties by degree, then index.
    Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub budget: Budget,
    pub pruning: Pruning,
    pub order: VariableOrder,
    /// Worker threads for the top-level split; `1` runs sequentially.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::default(),
            pruning: Pruning::default(),
            order: VariableOrder::default(),
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        labeling: Labeling,
        profile: WeightProfile,
        nodes: u64,
    },
    /// No bijection meets the target.
    ExhaustedNone {
        nodes: u64,
    },
    BudgetExceeded {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::ExhaustedNone { nodes }
            | SearchOutcome::BudgetExceeded { nodes } => *nodes,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            SearchOutcome::Found { labeling, .. } => Some(labeling),
            _ => None,
        }
    }
}

/// Searches with default pruning, variable order and a single worker.
pub fn search(g: &Graph, target: &TargetSpec, budget: Budget) -> SearchOutcome {
    search_with(
        g,
        target,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
}

pub fn search_with(g: &Graph, target: &TargetSpec, opts: &SearchOptions) -> SearchOutcome {
    let nbhd = DNeighborhoods::new(g, &target.distances);
    let problem = Problem::new(&nbhd, opts.order);
    let deadline = opts.budget.time.map(|t| Instant::now() + t);
    let mut spent = 0u64;
    for concrete in problem.candidates(target.goal, opts.pruning) {
        let remaining = opts.budget.nodes.map(|n| n.saturating_sub(spent));
        let run = problem.run(concrete, opts, remaining, deadline);
        match run {
            Run::Found(labels, nodes) => {
                let labeling = Labeling::new(labels).expect("search assigns a bijection");
                let profile = weight_profile(g, &labeling, &target.distances)
                    .expect("labeling matches graph order");
                assert!(
                    target.goal.accepts(&profile.weights),
                    "search produced a labeling that fails re-verification"
                );
                return SearchOutcome::Found {
                    labeling,
                    profile,
                    nodes: spent + nodes,
                };
            }
            Run::Exhausted(nodes) => spent += nodes,
            Run::NodeLimit => {
                return SearchOutcome::BudgetExceeded {
                    nodes: opts.budget.nodes.unwrap_or(u64::MAX),
                }
            }
            Run::TimeLimit(nodes) => {
                return SearchOutcome::BudgetExceeded {
                    nodes: spent + nodes,
                }
            }
        }
    }
    SearchOutcome::ExhaustedNone { nodes: spent }
}

/// The largest order [`enumerate`] accepts.
pub const ENUMERATE_MAX_ORDER: usize = 10;

/// Counts the bijections meeting the target by visiting all `v!` of them,
/// without any pruning.
pub fn enumerate(g: &Graph, target: &TargetSpec) -> Result<u64> {
    let v = g.order();
    if v > ENUMERATE_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration is limited to order {ENUMERATE_MAX_ORDER}, got {v}"
        )));
    }
    let nbhd = DNeighborhoods::new(g, &target.distances);
    let mut labels: Vec<u32> = (1..=v as u32).collect();
    let mut weights = vec![0u64; v];
    let mut count = 0u64;
    let mut visit = |labels: &[u32]| {
        for (x, w) in weights.iter_mut().enumerate() {
            *w = nbhd.of(x).iter().map(|&y| u64::from(labels[y])).sum();
        }
        if target.goal.accepts(&weights) {
            count += 1;
        }
    };
    // Heap's algorithm
    visit(&labels);
    let mut c = vec![0usize; v];
    let mut i = 0;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            visit(&labels);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

/// Two vertices with equal D-neighborhoods always receive equal weights, so
/// no D-antimagic labeling exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinCertificate {
    pub u: usize,
    pub w: usize,
}

/// Returns a twin pair for `D` if one exists, without searching.
pub fn prove_twin_shortcut(g: &Graph, d: &DistanceSet) -> Option<TwinCertificate> {
    DNeighborhoods::new(g, d)
        .first_twin_pair()
        .map(|(u, w)| TwinCertificate { u, w })
}

/// A fully specified target for one DFS run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Concrete {
    Distinct,
    /// Weights `{a + i d : 0 <= i < v}`; `d = 0` means all equal to `a`.
    Set {
        a: u64,
        d: u64,
    },
}

enum Run {
    Found(Vec<u32>, u64),
    Exhausted(u64),
    NodeLimit,
    TimeLimit(u64),
}

struct Problem {
    v: usize,
    nbrs: Vec<Vec<usize>>,
    order: Vec<usize>,
}

fn sum_range(lo: u64, hi: u64) -> u64 {
    // lo + ... + hi
    if hi < lo {
        0
    } else {
        (lo + hi) * (hi - lo + 1) / 2
    }
}

impl Problem {
    fn new(nbhd: &DNeighborhoods, order_kind: VariableOrder) -> Self {
        let v = nbhd.order();
        let nbrs: Vec<Vec<usize>> = (0..v).map(|x| nbhd.of(x).to_vec()).collect();
        let order = match order_kind {
            VariableOrder::DegreeThenIndex => {
                let mut order: Vec<usize> = (0..v).collect();
                order.sort_by_key(|&x| (std::cmp::Reverse(nbrs[x].len()), x));
                order
            }
            VariableOrder::Closure => closure_order(&nbrs),
        };
        Problem { v, nbrs, order }
    }

    /// The concrete targets to try, in deterministic order.
    fn candidates(&self, goal: Goal, pruning: Pruning) -> Vec<Concrete> {
        let Some((a, d)) = goal.as_progression() else {
            return vec![Concrete::Distinct];
        };
        let v = self.v as u64;
        let mut degrees: Vec<u64> = self.nbrs.iter().map(|n| n.len() as u64).collect();
        degrees.sort_unstable();
        // extreme single weights
        let low_w = degrees.iter().map(|&k| sum_range(1, k)).min().unwrap_or(0);
        let high_w = degrees
            .iter()
            .map(|&k| sum_range(v - k + 1, v))
            .max()
            .unwrap_or(0);
        // extreme totals: sum over y of f(y) |N_D(y)|, by the rearrangement inequality
        let total_max: u64 = degrees.iter().zip(1..=v).map(|(k, l)| k * l).sum();
        let total_min: u64 = degrees.iter().zip((1..=v).rev()).map(|(k, l)| k * l).sum();

        let ds: Vec<u64> = match d {
            Some(d) => vec![d],
            None if v == 1 => vec![0],
            None => (0..=(high_w - low_w) / (v - 1)).collect(),
        };
        let mut out = Vec::new();
        for d in ds {
            let span = d * (v - 1);
            if span > high_w {
                continue;
            }
            let (mut lo, mut hi) = (low_w, high_w - span);
            if pruning.sum_window {
                let shift = d * v * (v - 1) / 2;
                lo = lo.max(total_min.saturating_sub(shift).div_ceil(v));
                match total_max.checked_sub(shift) {
                    Some(t) => hi = hi.min(t / v),
                    None => continue,
                }
            }
            match a {
                Some(a) if !pruning.sum_window || (lo..=hi).contains(&a) => {
                    out.push(Concrete::Set { a, d })
                }
                Some(_) => {}
                None => out.extend((lo..=hi).map(|a| Concrete::Set { a, d })),
            }
        }
        out
    }

    fn run(
        &self,
        target: Concrete,
        opts: &SearchOptions,
        node_cap: Option<u64>,
        deadline: Option<Instant>,
    ) -> Run {
        let cap = node_cap.unwrap_or(u64::MAX);
        let winner = AtomicUsize::new(usize::MAX);
        let branch = |label: u32| {
            let mut dfs = Dfs::new(
                self,
                target,
                opts.pruning,
                cap,
                deadline,
                &winner,
                label as usize,
            );
            let outcome = dfs.run_branch(label);
            if matches!(
                outcome,
                Branch::Found | Branch::NodeLimit | Branch::TimeLimit
            ) {
                winner.fetch_min(label as usize, Ordering::Relaxed);
            }
            (outcome, dfs.nodes, dfs.labels)
        };
        let labels: Vec<u32> = (1..=self.v as u32).collect();
        let results: Vec<_> = if opts.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool");
            pool.install(|| labels.par_iter().map(|&l| branch(l)).collect())
        } else {
            let mut results = Vec::new();
            let mut used = 0u64;
            for &l in &labels {
                let mut dfs =
                    Dfs::new(self, target, opts.pruning, cap - used, deadline, &winner, 0);
                let outcome = dfs.run_branch(l);
                used = used.saturating_add(dfs.nodes);
                let stop = !matches!(outcome, Branch::Exhausted);
                results.push((outcome, dfs.nodes, dfs.labels));
                if stop {
                    break;
                }
            }
            results
        };
        let mut total = 0u64;
        for (outcome, nodes, assigned) in results {
            match outcome {
                Branch::Found if total + nodes <= cap => {
                    return Run::Found(assigned, total + nodes)
                }
                Branch::Exhausted if total + nodes <= cap => total += nodes,
                Branch::TimeLimit => return Run::TimeLimit(total + nodes),
                Branch::Cancelled => unreachable!("cancelled branch ordered before the winner"),
                _ => return Run::NodeLimit,
            }
        }
        Run::Exhausted(total)
    }
}

/// Static greedy order favoring early completion of D-neighborhoods.
fn closure_order(nbrs: &[Vec<usize>]) -> Vec<usize> {
    let v = nbrs.len();
    let mut open: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut placed = vec![false; v];
    let mut order = Vec::with_capacity(v);
    for _ in 0..v {
        let best = (0..v)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                // u lies in N_D(x) exactly when x lies in N_D(u)
                let completes = nbrs[u].iter().filter(|&&x| open[x] == 1).count();
                let slack: usize = nbrs[u].iter().map(|&x| open[x] - 1).sum();
                (
                    completes,
                    std::cmp::Reverse(slack),
                    nbrs[u].len(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("an unplaced vertex remains");
        placed[best] = true;
        for &x in &nbrs[best] {
            open[x] -= 1;
        }
        order.push(best);
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    Found,
    Exhausted,
    NodeLimit,
    TimeLimit,
    Cancelled,
}

struct Dfs<'a> {
    p: &'a Problem,
    target: Concrete,
    pruning: Pruning,
    cap: u64,
    deadline: Option<Instant>,
    winner: &'a AtomicUsize,
    branch_id: usize,
    nodes: u64,
    stop: Option<Branch>,
    labels: Vec<u32>,
    used: Vec<bool>,
    partial: Vec<u64>,
    open: Vec<u32>,
    /// Distinct targets: weights already final. Set targets: slots taken.
    taken: Vec<bool>,
    /// Slots marked by `finalize`, unwound on backtrack.
    marks: Vec<usize>,
    low: Vec<u64>,
    high: Vec<u64>,
}

impl<'a> Dfs<'a> {
    fn new(
        p: &'a Problem,
        target: Concrete,
        pruning: Pruning,
        cap: u64,
        deadline: Option<Instant>,
        winner: &'a AtomicUsize,
        branch_id: usize,
    ) -> Self {
        let v = p.v;
        let taken_len = match target {
            Concrete::Distinct => v * (v + 1) / 2 + 1,
            Concrete::Set { .. } => v,
        };
        Dfs {
            p,
            target,
            pruning,
            cap,
            deadline,
            winner,
            branch_id,
            nodes: 0,
            stop: None,
            labels: vec![0; v],
            used: vec![false; v + 1],
            partial: vec![0; v],
            open: p.nbrs.iter().map(|n| n.len() as u32).collect(),
            taken: vec![false; taken_len],
            marks: Vec::new(),
            low: vec![0; v + 1],
            high: vec![0; v + 1],
        }
    }

    fn run_branch(&mut self, first_label: u32) -> Branch {
        // empty D-neighborhoods are final from the start
        if self.pruning.finalization {
            for y in 0..self.p.v {
                if self.open[y] == 0 && !self.finalize(0) {
                    return Branch::Exhausted;
                }
            }
        }
        if self.try_label(0, first_label) {
            return Branch::Found;
        }
        self.stop.unwrap_or(Branch::Exhausted)
    }

    fn slot(&self, w: u64) -> Option<usize> {
        match self.target {
            Concrete::Distinct => Some(w as usize),
            Concrete::Set { a, d: 0 } => (w == a).then_some(0),
            Concrete::Set { a, d } => {
                let off = w.checked_sub(a)?;
                let idx = (off / d) as usize;
                (off % d == 0 && idx < self.p.v).then_some(idx)
            }
        }
    }

    /// Records a final weight; `false` if the target rules it out.
    fn finalize(&mut self, w: u64) -> bool {
        match (self.target, self.slot(w)) {
            (_, None) => false,
            (Concrete::Set { d: 0, .. }, Some(_)) => true,
            (_, Some(s)) if self.taken[s] => false,
            (_, Some(s)) => {
                self.taken[s] = true;
                self.marks.push(s);
                true
            }
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.stop = Some(Branch::NodeLimit);
            return false;
        }
        if self.nodes.is_multiple_of(1024) {
            if self.winner.load(Ordering::Relaxed) < self.branch_id {
                self.stop = Some(Branch::Cancelled);
                return false;
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.stop = Some(Branch::TimeLimit);
                return false;
            }
        }
        true
    }

    /// Assigns `label` to the vertex at `depth` and explores below it.
    /// Returns `true` once a solution is complete in `self.labels`.
    fn try_label(&mut self, depth: usize, label: u32) -> bool {
        if !self.tick() {
            return false;
        }
        let x = self.p.order[depth];
        let p = self.p;
        self.labels[x] = label;
        self.used[label as usize] = true;
        let mark_base = self.marks.len();
        let mut ok = true;
        for &y in &p.nbrs[x] {
            self.partial[y] += u64::from(label);
            self.open[y] -= 1;
        }
        if self.pruning.finalization {
            for &y in &p.nbrs[x] {
                if self.open[y] == 0 && !self.finalize(self.partial[y]) {
                    ok = false;
                    break;
                }
            }
        }
        if ok && self.pruning.interval_bounds && depth + 1 < p.v {
            ok = self.bounds_ok();
        }
        let found = ok
            && if depth + 1 == p.v {
                self.leaf_ok()
            } else {
                self.descend(depth + 1)
            };
        if found {
            return true;
        }
        while self.marks.len() > mark_base {
            let s = self.marks.pop().expect("mark above base");
            self.taken[s] = false;
        }
        for &y in &p.nbrs[x] {
            self.partial[y] -= u64::from(label);
            self.open[y] += 1;
        }
        self.used[label as usize] = false;
        self.labels[x] = 0;
        false
    }

    fn descend(&mut self, depth: usize) -> bool {
        for label in 1..=self.p.v as u32 {
            if self.used[label as usize] {
                continue;
            }
            if self.try_label(depth, label) {
                return true;
            }
            if self.stop.is_some() {
                return false;
            }
        }
        false
    }

    fn bounds_ok(&mut self) -> bool {
        let Concrete::Set { a, d } = self.target else {
            return true;
        };
        let v = self.p.v;
        // low[k] / high[k]: sum of the k smallest / largest unused labels
        let (mut lo_n, mut hi_n) = (0, 0);
        for l in 1..=v {
            if !self.used[l] {
                lo_n += 1;
                self.low[lo_n] = self.low[lo_n - 1] + l as u64;
            }
            let h = v + 1 - l;
            if !self.used[h] {
                hi_n += 1;
                self.high[hi_n] = self.high[hi_n - 1] + h as u64;
            }
        }
        for y in 0..v {
            let k = self.open[y] as usize;
            if k == 0 {
                continue;
            }
            let lo = self.partial[y] + self.low[k];
            let hi = self.partial[y] + self.high[k];
            let fits = if d == 0 {
                (lo..=hi).contains(&a)
            } else {
                let first = if lo <= a {
                    0
                } else {
                    (lo - a).div_ceil(d) as usize
                };
                let last = if hi < a {
                    None
                } else {
                    Some((((hi - a) / d) as usize).min(v - 1))
                };
                last.is_some_and(|last| (first..=last).any(|s| !self.taken[s]))
            };
            if !fits {
                return false;
            }
        }
        true
    }

    fn leaf_ok(&self) -> bool {
        match self.target {
            Concrete::Distinct => Goal::AnyAntimagic.accepts(&self.partial),
            Concrete::Set { a, d } => Goal::Progression {
                a: Some(a),
                d: Some(d),
            }
            .accepts(&self.partial),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};
    use crate::labeling::Classification;

    fn fam(f: Family) -> Graph {
        build_family(&f).unwrap()
    }

    fn one() -> DistanceSet {
        DistanceSet::adjacency()
    }

    #[test]
    fn goal_accepts() {
        assert!(Goal::AnyAntimagic.accepts(&[3, 1, 2]));
        assert!(!Goal::AnyAntimagic.accepts(&[3, 1, 3]));
        assert!(Goal::AnyAntimagic.accepts(&[0]));
        assert!(Goal::Magic { k: None }.accepts(&[5, 5]));
        assert!(!Goal::Magic { k: Some(4) }.accepts(&[5, 5]));
        assert!(Goal::Progression {
            a: None,
            d: Some(1)
        }
        .accepts(&[7, 5, 6]));
        assert!(!Goal::Progression {
            a: None,
            d: Some(1)
        }
        .accepts(&[7, 5, 5]));
        assert!(Goal::Progression {
            a: Some(5),
            d: None
        }
        .accepts(&[9, 5, 7]));
        assert!(!Goal::Progression {
            a: Some(5),
            d: None
        }
        .accepts(&[9, 5, 8]));
    }

    #[test]
    fn cycle_four_magic_found() {
        let out = search(
            &fam(Family::Cycle(4)),
            &TargetSpec::magic(None, one()),
            Budget::default(),
        );
        let SearchOutcome::Found { profile, .. } = out else {
            panic!("{out:?}")
        };
        assert_eq!(profile.classification, Classification::Magic { k: 5 });
    }

    #[test]
    fn cycle_four_antimagic_exhausted() {
        let out = search(
            &fam(Family::Cycle(4)),
            &TargetSpec::antimagic(one()),
            Budget::default(),
        );
        assert!(
            matches!(out, SearchOutcome::ExhaustedNone { .. }),
            "{out:?}"
        );
    }

    #[test]
    fn friendship_two_six_one() {
        let t = TargetSpec::progression(Some(6), Some(1), one());
        let out = search(&fam(Family::Friendship(2)), &t, Budget::default());
        let SearchOutcome::Found { profile, .. } = out else {
            panic!("{out:?}")
        };
        assert_eq!(
            profile.classification,
            Classification::ArithmeticAntimagic { a: 6, d: 1 }
        );
    }

    #[test]
    fn fan_five_no_progression() {
        let t = TargetSpec::progression(None, None, one());
        let out = search(&fam(Family::Fan(5)), &t, Budget::default());
        assert!(
            matches!(out, SearchOutcome::ExhaustedNone { .. }),
            "{out:?}"
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate(&fam(Family::Complete(3)), &TargetSpec::antimagic(one())).unwrap(),
            6
        );
        assert_eq!(
            enumerate(&fam(Family::Cycle(4)), &TargetSpec::antimagic(one())).unwrap(),
            0
        );
        assert_eq!(
            enumerate(&fam(Family::Cycle(4)), &TargetSpec::magic(Some(5), one())).unwrap(),
            8
        );
        assert!(enumerate(&fam(Family::Cycle(11)), &TargetSpec::antimagic(one())).is_err());
    }

    #[test]
    fn twin_shortcut_examples() {
        assert_eq!(
            prove_twin_shortcut(&fam(Family::Cycle(4)), &one()),
            Some(TwinCertificate { u: 0, w: 2 })
        );
        assert_eq!(prove_twin_shortcut(&fam(Family::Complete(4)), &one()), None);
        assert_eq!(
            prove_twin_shortcut(&fam(Family::Cycle(6)), &DistanceSet::new([1, 2])),
            Some(TwinCertificate { u: 0, w: 3 })
        );
    }

    #[test]
    fn node_budget_is_reported() {
        let t = TargetSpec::antimagic(one());
        let out = search(&fam(Family::Cycle(4)), &t, Budget::nodes(5));
        assert_eq!(out, SearchOutcome::BudgetExceeded { nodes: 5 });
    }

    #[test]
    fn candidate_window_regular_is_forced() {
        let g = fam(Family::Prism(4));
        let nbhd = DNeighborhoods::new(&g, &one());
        let p = Problem::new(&nbhd, VariableOrder::default());
        let c = p.candidates(Goal::Progression { a: None, d: None }, Pruning::default());
        // 3-regular of order 8: v a + 28 d = 108, so only integral a survive
        assert_eq!(c, vec![Concrete::Set { a: 10, d: 1 }]);
    }

    #[test]
    fn single_vertex() {
        let g = fam(Family::Complete(1));
        let out = search(&g, &TargetSpec::antimagic(one()), Budget::default());
        assert!(out.is_found());
        let out = search(
            &g,
            &TargetSpec::progression(None, None, one()),
            Budget::default(),
        );
        assert!(out.is_found());
        assert_eq!(enumerate(&g, &TargetSpec::antimagic(one())).unwrap(), 1);
    }

    #[test]
    fn orders_are_permutations() {
        for f in [Family::Prism(5), Family::Sun(4), Family::Fan(6)] {
            let nbhd = DNeighborhoods::new(&fam(f), &one());
            for kind in [VariableOrder::DegreeThenIndex, VariableOrder::Closure] {
                let mut order = Problem::new(&nbhd, kind).order;
                order.sort_unstable();
                assert_eq!(order, (0..nbhd.order()).collect::<Vec<_>>());
            }
        }
        let nbhd = DNeighborhoods::new(&fam(Family::Wheel(5)), &one());
        assert_eq!(
            Problem::new(&nbhd, VariableOrder::DegreeThenIndex).order,
            [0, 1, 2, 3, 4, 5]
        );
    }
}
