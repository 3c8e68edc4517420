//! JSON result documents that carry enough data to be checked again without
//! trusting the code that produced them.
//!
//! Every certificate names the graph by its graph6 string (and family, when
//! known), the distance set, and a `kind` with a matching `payload`.
//! [`Certificate::recheck`] recomputes whatever the payload claims.

use serde::{Deserialize, Serialize};

use crate::conjecture::ScanReport;
use crate::constructions::{Claim, Construction, ConstructionResult};
use crate::distance::{DNeighborhoods, DistanceSet};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::graph6;
use crate::labeling::{
    regular_ad_feasibility, weight_profile, FeasibleParams, Labeling, WeightProfile,
};
use crate::search::{
    search_with, Budget, Goal, Pruning, SearchOptions, SearchOutcome, TargetSpec, TwinCertificate,
    VariableOrder,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl GraphDescriptor {
    pub fn of(g: &Graph) -> Self {
        GraphDescriptor {
            graph6: graph6::encode(g),
            order: g.order(),
            size: g.size(),
            family: g.family().map(Family::to_string),
        }
    }

    /// Decodes the graph and checks it against the other fields.
    pub fn resolve(&self) -> Result<Graph> {
        let g = graph6::decode(&self.graph6)?;
        if g.order() != self.order || g.size() != self.size {
            return Err(fail(format!(
                "graph6 has {} vertices and {} edges, descriptor says {} and {}",
                g.order(),
                g.size(),
                self.order,
                self.size
            )));
        }
        if let Some(name) = &self.family {
            let built = crate::graph::build_family(&name.parse()?)?;
            if built != g {
                return Err(fail(format!("graph6 does not match family {name}")));
            }
            return Ok(built);
        }
        Ok(g)
    }
}

/// Search settings needed to reproduce an exhaustion proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSettings {
    pub pruning: Pruning,
    pub order: VariableOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Body {
    ConstructionVerified {
        construction: Construction,
        n: usize,
        labeling: Labeling,
        claim: Claim,
        profile: WeightProfile,
        notes: Vec<String>,
    },
    /// Weights of a user-supplied labeling.
    LabelingChecked {
        labeling: Labeling,
        profile: WeightProfile,
    },
    Found {
        goal: Goal,
        labeling: Labeling,
        profile: WeightProfile,
        nodes: u64,
        settings: SearchSettings,
    },
    ExhaustedNone {
        goal: Goal,
        nodes: u64,
        settings: SearchSettings,
    },
    BudgetExceeded {
        goal: Goal,
        nodes: u64,
        budget: Budget,
    },
    TwinObstruction {
        u: usize,
        w: usize,
        neighborhood: Vec<usize>,
    },
    /// A construction that cannot exist for this parameter.
    Infeasible {
        construction: Construction,
        n: usize,
        reason: String,
    },
    Feasibility {
        rows: Vec<FeasibleParams>,
    },
    ScanReport(ScanReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format_version: u32,
    /// Arguments of the invocation that produced the certificate.
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances: Option<DistanceSet>,
    #[serde(flatten)]
    pub body: Body,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

impl Certificate {
    fn new(
        command: &[String],
        graph: Option<&Graph>,
        distances: Option<&DistanceSet>,
        body: Body,
    ) -> Self {
        Certificate {
            format_version: FORMAT_VERSION,
            command: command.to_vec(),
            graph: graph.map(GraphDescriptor::of),
            distances: distances.cloned(),
            body,
        }
    }

    pub fn construction(
        command: &[String],
        c: Construction,
        n: usize,
        r: &ConstructionResult,
    ) -> Self {
        Self::new(
            command,
            Some(&r.graph),
            Some(&r.profile.distances),
            Body::ConstructionVerified {
                construction: c,
                n,
                labeling: r.labeling.clone(),
                claim: r.claim,
                profile: r.profile.clone(),
                notes: r.notes.clone(),
            },
        )
    }

    pub fn infeasible(
        command: &[String],
        c: Construction,
        n: usize,
        g: &Graph,
        reason: String,
    ) -> Self {
        let d = DistanceSet::adjacency();
        Self::new(
            command,
            Some(g),
            Some(&d),
            Body::Infeasible {
                construction: c,
                n,
                reason,
            },
        )
    }

    pub fn labeling(command: &[String], g: &Graph, f: &Labeling, d: &DistanceSet) -> Result<Self> {
        let profile = weight_profile(g, f, d)?;
        Ok(Self::new(
            command,
            Some(g),
            Some(d),
            Body::LabelingChecked {
                labeling: f.clone(),
                profile,
            },
        ))
    }

    pub fn search(
        command: &[String],
        g: &Graph,
        target: &TargetSpec,
        opts: &SearchOptions,
        out: &SearchOutcome,
    ) -> Self {
        let settings = SearchSettings {
            pruning: opts.pruning,
            order: opts.order,
        };
        let goal = target.goal;
        let body = match out.clone() {
            SearchOutcome::Found {
                labeling,
                profile,
                nodes,
            } => Body::Found {
                goal,
                labeling,
                profile,
                nodes,
                settings,
            },
            SearchOutcome::ExhaustedNone { nodes } => Body::ExhaustedNone {
                goal,
                nodes,
                settings,
            },
            SearchOutcome::BudgetExceeded { nodes } => Body::BudgetExceeded {
                goal,
                nodes,
                budget: opts.budget,
            },
        };
        Self::new(command, Some(g), Some(&target.distances), body)
    }

    pub fn twins(command: &[String], g: &Graph, d: &DistanceSet, t: TwinCertificate) -> Self {
        let neighborhood = DNeighborhoods::new(g, d).of(t.u).to_vec();
        Self::new(
            command,
            Some(g),
            Some(d),
            Body::TwinObstruction {
                u: t.u,
                w: t.w,
                neighborhood,
            },
        )
    }

    pub fn feasibility(command: &[String], rows: Vec<FeasibleParams>) -> Self {
        Self::new(command, None, None, Body::Feasibility { rows })
    }

    pub fn scan(command: &[String], report: ScanReport) -> Self {
        Self::new(command, None, None, Body::ScanReport(report))
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::ConstructionVerified { .. } => "construction_verified",
            Body::LabelingChecked { .. } => "labeling_checked",
            Body::Found { .. } => "found",
            Body::ExhaustedNone { .. } => "exhausted_none",
            Body::BudgetExceeded { .. } => "budget_exceeded",
            Body::TwinObstruction { .. } => "twin_obstruction",
            Body::Infeasible { .. } => "infeasible",
            Body::Feasibility { .. } => "feasibility",
            Body::ScanReport(_) => "scan_report",
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| fail(format!("malformed certificate: {e}")))?;
        if cert.format_version != FORMAT_VERSION {
            return Err(fail(format!(
                "unsupported format_version {}",
                cert.format_version
            )));
        }
        Ok(cert)
    }

    fn graph_and_d(&self) -> Result<(Graph, DistanceSet)> {
        let g = self
            .graph
            .as_ref()
            .ok_or_else(|| fail("missing graph"))?
            .resolve()?;
        let d = self
            .distances
            .clone()
            .ok_or_else(|| fail("missing distance set"))?;
        Ok((g, d))
    }

    fn check_profile(
        g: &Graph,
        f: &Labeling,
        d: &DistanceSet,
        claimed: &WeightProfile,
    ) -> Result<WeightProfile> {
        let p = weight_profile(g, f, d)?;
        if &p != claimed {
            return Err(fail(format!(
                "recomputed weights {:?} ({}) differ from recorded {:?} ({})",
                p.weights, p.classification, claimed.weights, claimed.classification
            )));
        }
        Ok(p)
    }

    /// Recomputes the payload's claim. Exhaustion proofs are re-run with the
    /// recorded settings and no budget.
    pub fn recheck(&self) -> Result<()> {
        match &self.body {
            Body::ConstructionVerified {
                construction,
                n,
                labeling,
                claim,
                profile,
                ..
            } => {
                let (g, d) = self.graph_and_d()?;
                if g != crate::graph::build_family(&construction.family(*n))? {
                    return Err(fail(format!(
                        "graph is not the {} graph for n = {n}",
                        construction.name()
                    )));
                }
                let p = Self::check_profile(&g, labeling, &d, profile)?;
                if !claim.holds(&p.classification) {
                    return Err(fail(format!(
                        "claimed {claim}, weights are {}",
                        p.classification
                    )));
                }
            }
            Body::LabelingChecked { labeling, profile } => {
                let (g, d) = self.graph_and_d()?;
                Self::check_profile(&g, labeling, &d, profile)?;
            }
            Body::Found {
                goal,
                labeling,
                profile,
                ..
            } => {
                let (g, d) = self.graph_and_d()?;
                let p = Self::check_profile(&g, labeling, &d, profile)?;
                if !goal.accepts(&p.weights) {
                    return Err(fail(format!("weights {:?} do not meet {goal}", p.weights)));
                }
            }
            Body::ExhaustedNone {
                goal,
                nodes,
                settings,
            } => {
                let (g, d) = self.graph_and_d()?;
                let opts = SearchOptions {
                    budget: Budget::unlimited(),
                    pruning: settings.pruning,
                    order: settings.order,
                    workers: 1,
                };
                match search_with(
                    &g,
                    &TargetSpec {
                        goal: *goal,
                        distances: d,
                    },
                    &opts,
                ) {
                    SearchOutcome::ExhaustedNone { nodes: again } if again == *nodes => {}
                    other => {
                        return Err(fail(format!(
                            "re-run search gave {other:?}, recorded exhaustion after {nodes} nodes"
                        )))
                    }
                }
            }
            Body::BudgetExceeded { nodes, budget, .. } => {
                self.graph_and_d()?;
                if budget.nodes.is_some_and(|limit| *nodes > limit) {
                    return Err(fail(format!("{nodes} nodes exceed the recorded limit")));
                }
            }
            Body::TwinObstruction { u, w, neighborhood } => {
                let (g, d) = self.graph_and_d()?;
                if u == w || *u >= g.order() || *w >= g.order() {
                    return Err(fail(format!("invalid twin pair ({u}, {w})")));
                }
                let nb = DNeighborhoods::new(&g, &d);
                if nb.of(*u) != nb.of(*w) || nb.of(*u) != neighborhood.as_slice() {
                    return Err(fail(format!("vertices {u} and {w} are not D-twins")));
                }
            }
            Body::Infeasible {
                construction, n, ..
            } => {
                let (g, _) = self.graph_and_d()?;
                if g != crate::graph::build_family(&construction.family(*n))? {
                    return Err(fail("graph does not match the construction"));
                }
                match construction.apply(*n) {
                    Err(Error::ProvablyInfeasible(_)) => {}
                    other => {
                        return Err(fail(format!(
                            "construction no longer infeasible: {:?}",
                            other.map(|r| r.labeling)
                        )))
                    }
                }
            }
            Body::Feasibility { rows } => {
                for row in rows {
                    if &regular_ad_feasibility(row.r, row.v)? != row {
                        return Err(fail(format!(
                            "feasibility row for r = {}, v = {} differs",
                            row.r, row.v
                        )));
                    }
                }
            }
            Body::ScanReport(report) => {
                let t = &report.totals;
                if t.sum() != report.pairs {
                    return Err(fail(format!(
                        "verdict totals {} differ from {} pairs",
                        t.sum(),
                        report.pairs
                    )));
                }
                if report.counterexamples.len() != t.counterexample
                    || report.undecided.len() != t.undecided
                    || report.soundness_failures.len() != t.soundness_failure
                {
                    return Err(fail("listed instances differ from totals"));
                }
                if report.disconnected.sum() > report.pairs {
                    return Err(fail("more disconnected pairs than pairs"));
                }
            }
        }
        Ok(())
    }
}
