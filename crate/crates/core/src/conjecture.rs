//! Bulk checks of the twin-free conjecture: a graph should admit a
//! D-distance antimagic labeling exactly when no two vertices share a
//! D-neighborhood.
//!
//! Twins rule out such a labeling outright, so only twin-free instances are
//! searched. A twin-free instance whose search is exhausted is a
//! counterexample; one that runs out of budget is undecided and never counts
//! as a counterexample.

use std::fmt::Write as _;
use std::io::{self, Read};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::distance::{distance_matrix, DNeighborhoods, DistanceSet};
use crate::graph::Graph;
use crate::graph6;
use crate::search::{search, Budget, SearchOutcome, TargetSpec, TwinCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    /// No twins, and a D-antimagic labeling was found.
    ConsistentTwinFree,
    /// Twins present, so no labeling exists.
    ConsistentTwinned,
    /// No twins, yet the search proved no labeling exists.
    Counterexample,
    /// No twins and the search ran out of budget.
    Undecided,
    /// Twins present but a labeling was found: an internal error, since
    /// twins always receive equal weights.
    SoundnessFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub distances: DistanceSet,
    pub connected: bool,
    pub twin: Option<TwinCertificate>,
    pub outcome: Option<SearchOutcome>,
    pub kind: VerdictKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub budget: Budget,
    /// Also search twinned instances, to catch soundness failures.
    pub confirm_twins: bool,
}

pub fn check_conjecture(g: &Graph, d: &DistanceSet, budget: Budget) -> Verdict {
    check_conjecture_with(
        g,
        d,
        &CheckOptions {
            budget,
            confirm_twins: false,
        },
    )
}

pub fn check_conjecture_with(g: &Graph, d: &DistanceSet, opts: &CheckOptions) -> Verdict {
    let dm = distance_matrix(g);
    let twin = DNeighborhoods::from_matrix(&dm, d)
        .first_twin_pair()
        .map(|(u, w)| TwinCertificate { u, w });
    let target = TargetSpec::antimagic(d.clone());
    let (outcome, kind) = match twin {
        Some(_) if !opts.confirm_twins => (None, VerdictKind::ConsistentTwinned),
        Some(_) => {
            let out = search(g, &target, opts.budget);
            let kind = if out.is_found() {
                VerdictKind::SoundnessFailure
            } else {
                VerdictKind::ConsistentTwinned
            };
            (Some(out), kind)
        }
        None => {
            let out = search(g, &target, opts.budget);
            let kind = match out {
                SearchOutcome::Found { .. } => VerdictKind::ConsistentTwinFree,
                SearchOutcome::ExhaustedNone { .. } => VerdictKind::Counterexample,
                SearchOutcome::BudgetExceeded { .. } => VerdictKind::Undecided,
            };
            (Some(out), kind)
        }
    };
    Verdict {
        distances: d.clone(),
        connected: dm.is_connected(),
        twin,
        outcome,
        kind,
    }
}

/// Which distance sets to try for each graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "policy", content = "value", rename_all = "snake_case")]
pub enum DPolicy {
    Fixed(DistanceSet),
    /// Every nonempty subset of `{0, ..., diam}`, where `diam` is the
    /// largest finite distance.
    AllSubsets,
    /// Nonempty subsets of `{0, ..., diam}` with at most this many elements.
    SubsetsUpTo(usize),
}

impl DPolicy {
    fn sets_for(&self, max_distance: u32) -> Vec<DistanceSet> {
        match self {
            DPolicy::Fixed(d) => vec![d.clone()],
            DPolicy::AllSubsets => DistanceSet::nonempty_subsets(max_distance, None),
            DPolicy::SubsetsUpTo(cap) => DistanceSet::nonempty_subsets(max_distance, Some(*cap)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub policy: DPolicy,
    pub budget: Budget,
    pub workers: usize,
    pub confirm_twins: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            policy: DPolicy::Fixed(DistanceSet::adjacency()),
            budget: Budget::default(),
            workers: 1,
            confirm_twins: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub consistent_twin_free: usize,
    pub consistent_twinned: usize,
    pub counterexample: usize,
    pub undecided: usize,
    pub soundness_failure: usize,
}

impl Totals {
    fn add(&mut self, kind: VerdictKind) {
        *match kind {
            VerdictKind::ConsistentTwinFree => &mut self.consistent_twin_free,
            VerdictKind::ConsistentTwinned => &mut self.consistent_twinned,
            VerdictKind::Counterexample => &mut self.counterexample,
            VerdictKind::Undecided => &mut self.undecided,
            VerdictKind::SoundnessFailure => &mut self.soundness_failure,
        } += 1;
    }

    pub fn sum(&self) -> usize {
        self.consistent_twin_free
            + self.consistent_twinned
            + self.counterexample
            + self.undecided
            + self.soundness_failure
    }
}

/// One (graph, D) instance worth listing in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// 1-based input line.
    pub line: usize,
    pub graph6: String,
    pub distances: DistanceSet,
    pub connected: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    /// SHA-256 of the raw input bytes.
    pub input_digest: String,
    pub policy: DPolicy,
    pub graphs: usize,
    pub pairs: usize,
    pub totals: Totals,
    /// The part of `totals` coming from disconnected graphs.
    pub disconnected: Totals,
    pub counterexamples: Vec<Finding>,
    pub undecided: Vec<Finding>,
    pub soundness_failures: Vec<Finding>,
    pub input_errors: Vec<InputError>,
    pub search_nodes: u64,
}

impl ScanReport {
    pub fn has_counterexample(&self) -> bool {
        self.totals.counterexample > 0
    }

    /// Fixed-width table for terminals.
    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let row = |s: &mut String, name: &str, all: usize, disc: usize| {
            let _ = writeln!(s, "{name:<22} {all:>10} {disc:>14}");
        };
        let _ = writeln!(
            s,
            "{:<22} {:>10} {:>14}",
            "verdict", "pairs", "disconnected"
        );
        let (t, d) = (&self.totals, &self.disconnected);
        row(
            &mut s,
            "twin-free, labeled",
            t.consistent_twin_free,
            d.consistent_twin_free,
        );
        row(
            &mut s,
            "twinned",
            t.consistent_twinned,
            d.consistent_twinned,
        );
        row(&mut s, "counterexample", t.counterexample, d.counterexample);
        row(&mut s, "undecided", t.undecided, d.undecided);
        row(
            &mut s,
            "soundness failure",
            t.soundness_failure,
            d.soundness_failure,
        );
        let _ = writeln!(
            s,
            "{} graphs, {} (graph, D) pairs, {} input errors, {} search nodes",
            self.graphs,
            self.pairs,
            self.input_errors.len(),
            self.search_nodes
        );
        s
    }
}

/// Scans a graph6 stream. Malformed lines are recorded and skipped; blank
/// lines are ignored. The report does not depend on `workers`.
pub fn scan(mut source: impl Read, opts: &ScanOptions) -> io::Result<ScanReport> {
    let mut raw = Vec::new();
    source.read_to_end(&mut raw)?;
    let input_digest = format!("{:x}", Sha256::digest(&raw));
    let text = String::from_utf8_lossy(&raw);

    let mut input_errors = Vec::new();
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match graph6::decode(line) {
            Ok(g) => graphs.push((i + 1, line.trim().to_string(), g)),
            Err(e) => input_errors.push(InputError {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }

    let jobs: Vec<(usize, DistanceSet)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(gi, (_, _, g))| {
            let max = distance_matrix(g).max_finite_distance();
            opts.policy.sets_for(max).into_iter().map(move |d| (gi, d))
        })
        .collect();

    let check = CheckOptions {
        budget: opts.budget,
        confirm_twins: opts.confirm_twins,
    };
    let run = |&(gi, ref d): &(usize, DistanceSet)| check_conjecture_with(&graphs[gi].2, d, &check);
    let verdicts: Vec<Verdict> = if opts.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(io::Error::other)?;
        pool.install(|| jobs.par_iter().map(run).collect())
    } else {
        jobs.iter().map(run).collect()
    };

    let mut report = ScanReport {
        input_digest,
        policy: opts.policy.clone(),
        graphs: graphs.len(),
        pairs: verdicts.len(),
        totals: Totals::default(),
        disconnected: Totals::default(),
        counterexamples: Vec::new(),
        undecided: Vec::new(),
        soundness_failures: Vec::new(),
        input_errors,
        search_nodes: 0,
    };
    for ((gi, _), v) in jobs.iter().zip(verdicts) {
        report.totals.add(v.kind);
        if !v.connected {
            report.disconnected.add(v.kind);
        }
        let nodes = v.outcome.as_ref().map_or(0, SearchOutcome::nodes);
        report.search_nodes += nodes;
        let (line, g6, _) = &graphs[*gi];
        let finding = || Finding {
            line: *line,
            graph6: g6.clone(),
            distances: v.distances.clone(),
            connected: v.connected,
            nodes,
        };
        match v.kind {
            VerdictKind::Counterexample => report.counterexamples.push(finding()),
            VerdictKind::Undecided => report.undecided.push(finding()),
            VerdictKind::SoundnessFailure => report.soundness_failures.push(finding()),
            _ => {}
        }
    }
    Ok(report)
}
