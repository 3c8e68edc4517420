//! `dalab`: command-line access to the distance antimagic toolkit.
//!
//! Certificates go to stdout as JSON, a short summary to stderr.
//! Exit codes: 0 success, 1 conjecture counterexample, 2 invalid input,
//! 3 proven obstruction or nonexistence, 4 budget exceeded, 70 internal
//! verification failure.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use distance_antimagic::catalog;
use distance_antimagic::certificate::{Body, Certificate};
use distance_antimagic::conjecture::{scan, DPolicy, ScanOptions};
use distance_antimagic::graph6;
use distance_antimagic::search::{search_with, Pruning, SearchOptions, VariableOrder};
use distance_antimagic::{
    build_family, regular_ad_feasibility, Budget, Construction, DistanceSet, Error, Family, Graph,
    Labeling, SearchOutcome, TargetSpec,
};

#[derive(Parser)]
#[command(
    name = "dalab",
    version,
    about = "Distance magic and antimagic labelings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 encoding of a family member.
    Gen {
        family: String,
        /// Size parameter; part sizes for `multipartite` (`2,3` or `2 3`).
        #[arg(required = true, num_args = 1..)]
        n: Vec<String>,
    },
    /// Build and verify the closed-form labeling for a family.
    Label {
        construction: Construction,
        n: usize,
    },
    /// Compute the D-weights of a labeling read from a file (`-` for stdin).
    Verify {
        graph: String,
        labeling: String,
        #[arg(long = "D", default_value = "1")]
        distances: DistanceSet,
    },
    /// Exact search for a labeling.
    Search(SearchArgs),
    /// Necessary (a, d) pairs for r-regular graphs of order v.
    Feasible {
        #[arg(required_unless_present = "prism")]
        r: Option<u64>,
        #[arg(required_unless_present = "prism")]
        v: Option<u64>,
        /// Rows for the prisms of cycle length FROM..TO (r = 3, v = 2n).
        #[arg(long, value_name = "FROM..TO", conflicts_with_all = ["r", "v"])]
        prism: Option<String>,
    },
    /// Check the twin-free conjecture on a graph6 stream.
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["antimagic", "magic", "ap"])))]
struct SearchArgs {
    graph: String,
    /// Any labeling with pairwise distinct weights.
    #[arg(long)]
    antimagic: bool,
    /// All weights equal, optionally to K.
    #[arg(long, value_name = "K", num_args = 0..=1)]
    magic: Option<Option<u64>>,
    /// Weights a, a + d, ...; give `[A] D`, either may be `any`.
    #[arg(long, value_names = ["A", "D"], num_args = 1..=2)]
    ap: Option<Vec<String>>,
    #[arg(long = "D", default_value = "1")]
    distances: DistanceSet,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Degree)]
    order: OrderArg,
    /// Disable all pruning rules.
    #[arg(long)]
    no_pruning: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["path", "catalog"])))]
struct ConjectureArgs {
    /// graph6 file, one graph per line, or `-` for stdin.
    path: Option<String>,
    /// Scan the built-in catalog of all graphs up to this order instead.
    #[arg(long, value_name = "MAX_ORDER")]
    catalog: Option<usize>,
    #[arg(long = "D", conflicts_with_all = ["all_subsets", "max_subset_size"])]
    distances: Option<DistanceSet>,
    /// Every nonempty subset of {0, ..., diam}.
    #[arg(long)]
    all_subsets: bool,
    /// Nonempty subsets of {0, ..., diam} with at most K elements.
    #[arg(long, value_name = "K", conflicts_with = "all_subsets")]
    max_subset_size: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Also search twinned instances as a soundness check.
    #[arg(long)]
    confirm_twins: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, value_name = "N")]
    budget_nodes: Option<u64>,
    #[arg(long, value_name = "SECS")]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Error> {
        let mut b = Budget::default();
        if let Some(n) = self.budget_nodes {
            b.nodes = Some(n);
        }
        if let Some(s) = self.budget_secs {
            b.time = Some(
                Duration::try_from_secs_f64(s)
                    .map_err(|_| Error::InvalidParameter(format!("bad time budget {s}")))?,
            );
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degree,
    Closure,
}

/// How a run ended, mapped to the process exit code.
enum Status {
    Ok,
    Counterexample,
    Obstruction,
    Budget,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidParameter(_) | Error::InvalidLabeling(_) | Error::Graph6(_) => 2,
        Error::TwinObstruction(..) | Error::ProvablyInfeasible(_) => 3,
        Error::BudgetExceeded(_) => 4,
        Error::Verification(_) => 70,
    }
}

/// `family:n` or a graph6 string.
fn parse_graph(spec: &str) -> Result<Graph, Error> {
    if spec.contains(':') {
        build_family(&spec.parse()?)
    } else {
        graph6::decode(spec)
    }
}

fn read_text(path: &str) -> Result<String, Error> {
    let io_err = |e: io::Error| Error::InvalidParameter(format!("cannot read {path}: {e}"));
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn parse_opt(t: &str) -> Result<Option<u64>, Error> {
    if t == "any" {
        return Ok(None);
    }
    t.parse()
        .map(Some)
        .map_err(|_| Error::InvalidParameter(format!("expected a number or `any`, got {t:?}")))
}

fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidParameter(format!("expected FROM..TO, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_gen(family: &str, n: &[String]) -> Result<Status, Error> {
    let g = build_family(&Family::from_parts(family, &n.join(","))?)?;
    println!("{}", graph6::encode(&g));
    eprintln!(
        "{}: {} vertices, {} edges",
        g.family().expect("built from family"),
        g.order(),
        g.size()
    );
    Ok(Status::Ok)
}

fn cmd_label(argv: &[String], c: Construction, n: usize) -> Result<(Certificate, Status), Error> {
    match c.apply(n) {
        Ok(r) => {
            eprintln!(
                "{} n = {n}: labeling {} is {}",
                c.name(),
                r.labeling,
                r.profile.classification
            );
            for note in &r.notes {
                eprintln!("note: {note}");
            }
            Ok((Certificate::construction(argv, c, n, &r), Status::Ok))
        }
        Err(Error::TwinObstruction(u, w)) => {
            let g = build_family(&c.family(n))?;
            let d = DistanceSet::adjacency();
            eprintln!(
                "{} n = {n}: vertices {u} and {w} are twins, no antimagic labeling",
                c.name()
            );
            let t = distance_antimagic::search::TwinCertificate { u, w };
            Ok((Certificate::twins(argv, &g, &d, t), Status::Obstruction))
        }
        Err(Error::ProvablyInfeasible(reason)) => {
            let g = build_family(&c.family(n))?;
            eprintln!("{} n = {n}: infeasible: {reason}", c.name());
            Ok((
                Certificate::infeasible(argv, c, n, &g, reason),
                Status::Obstruction,
            ))
        }
        Err(e) => Err(e),
    }
}

fn cmd_verify(
    argv: &[String],
    graph: &str,
    path: &str,
    d: &DistanceSet,
) -> Result<(Certificate, Status), Error> {
    let g = parse_graph(graph)?;
    let f: Labeling = read_text(path)?.parse()?;
    let cert = Certificate::labeling(argv, &g, &f, d)?;
    if let Body::LabelingChecked { profile, .. } = &cert.body {
        eprintln!(
            "D = {d}: weights {:?}, {}",
            profile.weights, profile.classification
        );
    }
    Ok((cert, Status::Ok))
}

fn cmd_search(argv: &[String], a: &SearchArgs) -> Result<(Certificate, Status), Error> {
    let g = parse_graph(&a.graph)?;
    let d = a.distances.clone();
    let target = if a.antimagic {
        TargetSpec::antimagic(d)
    } else if let Some(k) = a.magic {
        TargetSpec::magic(k, d)
    } else {
        let vals = a.ap.as_deref().unwrap_or_default();
        let (pa, pd) = match vals {
            [dv] => (None, parse_opt(dv)?),
            [av, dv] => (parse_opt(av)?, parse_opt(dv)?),
            _ => return Err(Error::InvalidParameter("--ap takes [A] D".into())),
        };
        TargetSpec::progression(pa, pd, d)
    };
    let opts = SearchOptions {
        budget: a.budget.budget()?,
        pruning: if a.no_pruning {
            Pruning::none()
        } else {
            Pruning::default()
        },
        order: match a.order {
            OrderArg::Degree => VariableOrder::DegreeThenIndex,
            OrderArg::Closure => VariableOrder::Closure,
        },
        workers: a.workers.max(1),
    };
    let out = search_with(&g, &target, &opts);
    let status = match &out {
        SearchOutcome::Found {
            labeling,
            profile,
            nodes,
        } => {
            eprintln!(
                "found {labeling} ({}) after {nodes} nodes",
                profile.classification
            );
            Status::Ok
        }
        SearchOutcome::ExhaustedNone { nodes } => {
            eprintln!("no {} labeling exists ({nodes} nodes)", target.goal);
            Status::Obstruction
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            eprintln!("budget exceeded after {nodes} nodes");
            Status::Budget
        }
    };
    Ok((Certificate::search(argv, &g, &target, &opts, &out), status))
}

fn cmd_feasible(
    argv: &[String],
    r: Option<u64>,
    v: Option<u64>,
    prism: Option<&str>,
) -> Result<(Certificate, Status), Error> {
    let rows = match (prism, r, v) {
        (Some(range), _, _) => {
            let (from, to) = parse_range(range)?;
            if from < 3 {
                return Err(Error::InvalidParameter("prisms need n >= 3".into()));
            }
            (from..=to)
                .map(|n| regular_ad_feasibility(3, 2 * n))
                .collect::<Result<Vec<_>, _>>()?
        }
        (None, Some(r), Some(v)) => vec![regular_ad_feasibility(r, v)?],
        _ => {
            return Err(Error::InvalidParameter(
                "give R V or --prism FROM..TO".into(),
            ))
        }
    };
    for row in &rows {
        eprintln!("r = {}, v = {}: (a, d) in {:?}", row.r, row.v, row.pairs);
    }
    Ok((Certificate::feasibility(argv, rows), Status::Ok))
}

fn cmd_conjecture(argv: &[String], a: &ConjectureArgs) -> Result<(Certificate, Status), Error> {
    let text = match (&a.path, a.catalog) {
        (Some(p), _) => read_text(p)?,
        (None, Some(max)) => catalog::graphs_up_to(max)?
            .iter()
            .map(|g| graph6::encode(g) + "\n")
            .collect(),
        (None, None) => return Err(Error::InvalidParameter("give a path or --catalog".into())),
    };
    let policy = match (&a.distances, a.all_subsets, a.max_subset_size) {
        (_, true, _) => DPolicy::AllSubsets,
        (_, _, Some(k)) => DPolicy::SubsetsUpTo(k),
        (Some(d), _, _) => DPolicy::Fixed(d.clone()),
        (None, false, None) => DPolicy::Fixed(DistanceSet::adjacency()),
    };
    let opts = ScanOptions {
        policy,
        budget: a.budget.budget()?,
        workers: a.workers.max(1),
        confirm_twins: a.confirm_twins,
    };
    let report =
        scan(text.as_bytes(), &opts).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    eprint!("{}", report.summary_table());
    for e in &report.input_errors {
        eprintln!("line {}: {}", e.line, e.message);
    }
    for f in &report.counterexamples {
        eprintln!(
            "counterexample: line {} {} D = {}",
            f.line, f.graph6, f.distances
        );
    }
    let status = if report.has_counterexample() {
        Status::Counterexample
    } else if !report.undecided.is_empty() {
        Status::Budget
    } else {
        Status::Ok
    };
    Ok((Certificate::scan(argv, report), status))
}

fn run(cli: Cli, argv: &[String]) -> Result<Status, Error> {
    let (cert, status) = match &cli.command {
        Command::Gen { family, n } => return cmd_gen(family, n),
        Command::Label { construction, n } => cmd_label(argv, *construction, *n)?,
        Command::Verify {
            graph,
            labeling,
            distances,
        } => cmd_verify(argv, graph, labeling, distances)?,
        Command::Search(a) => cmd_search(argv, a)?,
        Command::Feasible { r, v, prism } => cmd_feasible(argv, *r, *v, prism.as_deref())?,
        Command::Conjecture(a) => cmd_conjecture(argv, a)?,
    };
    cert.recheck()?;
    print!("{}", cert.to_json());
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(cli, &argv) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(1),
        Ok(Status::Obstruction) => ExitCode::from(3),
        Ok(Status::Budget) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
