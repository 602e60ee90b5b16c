//! Command-line front end for the `pathpart` solvers.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use pathpart::checker::{verify, FailureReason};
use pathpart::dag_pp::solve_dag_pp;
use pathpart::forge::{self, ForgeError, Orientation, ReductionOutput, ThreeDmInstance};
use pathpart::nd::{self, NdError};
use pathpart::oracle::{self, Decision, OracleBudget, OracleError};
use pathpart::spp_xp::{solve_spp_xp_with, XpError, XpOptions};
use pathpart::vc::{self, VcError, VcOptions};
use pathpart::{io, random, CoverMode, Graph, PathKind, PathSystem, Variant};

pub mod limits;

pub use limits::Limits;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("generator: {0}")]
    Generate(String),
    #[error("internal: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Generate(_) => 5,
        }
    }
}

impl From<XpError> for CliError {
    fn from(e: XpError) -> Self {
        match e {
            XpError::Unsupported => CliError::Unsupported(e.to_string()),
            XpError::ThreadPool(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<NdError> for CliError {
    fn from(e: NdError) -> Self {
        match e {
            NdError::UnsupportedKind | NdError::ExpectedDirected | NdError::ExpectedUndirected => {
                CliError::Unsupported(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<VcError> for CliError {
    fn from(e: VcError) -> Self {
        match e {
            VcError::Unsupported(_) => CliError::Unsupported(e.to_string()),
            VcError::Nd(nd) => nd.into(),
            VcError::ThreadPool(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Budget(e.to_string())
    }
}

impl From<ForgeError> for CliError {
    fn from(e: ForgeError) -> Self {
        CliError::Generate(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "pathpart", version, about = "Minimum path partitions and covers of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a minimum path system, or decide whether k paths suffice.
    Solve(SolveArgs),
    /// Print structural parameters of a graph.
    Params { file: PathBuf },
    /// Emit an instance of one of the hardness reductions.
    Generate(GenerateArgs),
    /// Check a solution file against a graph.
    Verify { graph: PathBuf, solution: PathBuf },
    /// Dump the class-vector integer program used by `--algo nd`.
    Ilp {
        file: PathBuf,
        #[arg(long, default_value = "spp")]
        kind: PathKind,
        #[arg(long, default_value = "partition")]
        mode: CoverMode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Oracle,
    DagPp,
    Xp,
    Nd,
    Vc,
    Dual,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Oracle => "oracle",
            Algo::DagPp => "dag-pp",
            Algo::Xp => "xp",
            Algo::Nd => "nd",
            Algo::Vc => "vc",
            Algo::Dual => "dual",
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    #[arg(long, default_value = "pp")]
    pub kind: PathKind,
    #[arg(long, default_value = "partition")]
    pub mode: CoverMode,
    #[arg(long, value_enum, default_value = "auto")]
    pub algo: Algo,
    /// Decide whether at most this many paths suffice.
    #[arg(long, conflicts_with = "k_dual")]
    pub k: Option<usize>,
    /// Decide whether at most n - k_dual paths suffice.
    #[arg(long)]
    pub k_dual: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub which: Generator,
    /// Graph output file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Label output file, `<out>.labels` by default.
    #[arg(long, global = true)]
    pub labels: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// Random 3-dimensional matching instance.
    #[command(name = "3dm")]
    ThreeDm {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Attach every gadget with the rotated orientation.
        #[arg(long)]
        rotated: bool,
    },
    /// Clique instance from a base graph file or a random G(n, prob).
    Clique {
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long)]
        k: usize,
    },
    /// Induced P4 partition instance from a base graph file or a random
    /// subcubic bipartite graph.
    #[command(name = "4uipp")]
    P4 {
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub problem: String,
    pub kind: String,
    pub mode: String,
    pub direction: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_requested: Option<usize>,
    /// `optimum`, `yes` or `no`.
    pub answer: String,
    pub value: Option<usize>,
    pub paths: Vec<Vec<usize>>,
    pub algorithm: String,
    pub elapsed_ms: u64,
    pub verified: bool,
}

#[derive(Debug, Deserialize)]
struct SolutionFile {
    kind: PathKindField,
    mode: CoverModeField,
    paths: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(try_from = "String")]
struct PathKindField(PathKind);

impl TryFrom<String> for PathKindField {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse().map(PathKindField)
    }
}

#[derive(Debug, Deserialize)]
#[serde(try_from = "String")]
struct CoverModeField(CoverMode);

impl TryFrom<String> for CoverModeField {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse().map(CoverModeField)
    }
}

#[derive(Debug, Serialize)]
struct VerdictDocument {
    valid: bool,
    failures: Vec<FailureEntry>,
}

#[derive(Debug, Serialize)]
struct FailureEntry {
    reason: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    io::parse_graph(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Runs one command, writing its report to `out`. The returned code is 0
/// except for `verify` on an invalid solution.
pub fn run(cli: Cli, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match cli.command {
        Command::Solve(args) => json(&solve(&args, limits)?),
        Command::Params { file } => json(&params(&read_graph(&file)?)),
        Command::Generate(args) => generate(&args)?,
        Command::Verify { graph, solution } => {
            let (doc, valid) = verify_file(&graph, &solution)?;
            writeln!(out, "{}", json(&doc)).map_err(|e| CliError::Io(e.to_string()))?;
            return Ok(if valid { 0 } else { 1 });
        }
        Command::Ilp { file, kind, mode } => {
            let g = read_graph(&file)?;
            nd::build_model(&g, Variant::new(kind, mode))?.ilp.to_string().trim_end().to_string()
        }
    };
    writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))?;
    Ok(0)
}

enum Outcome {
    Optimum(PathSystem),
    Decided(Decision),
}

fn choose(g: &Graph, variant: Variant, k: Option<usize>, k_dual: Option<usize>, limits: &Limits) -> Algo {
    let partition = variant.mode == CoverMode::Partition;
    let dag = g.is_directed() && g.is_dag();
    match variant.kind {
        PathKind::Unrestricted if partition && dag => return Algo::DagPp,
        PathKind::Shortest if partition && (dag || !g.is_directed()) => {
            if k.is_some_and(|k| k <= limits.xp_max_k) && g.n() <= limits.xp_max_n {
                return Algo::Xp;
            }
        }
        _ => {}
    }
    if k_dual.is_some() && partition && !(g.is_directed() && variant.kind == PathKind::Unrestricted) {
        return Algo::Dual;
    }
    if variant.kind != PathKind::Unrestricted && nd::neighborhood_diversity(g) <= limits.nd_max {
        return Algo::Nd;
    }
    if variant.kind == PathKind::Unrestricted
        && partition
        && !g.is_directed()
        && vc::min_vertex_cover(g).len() <= limits.vc_max
    {
        return Algo::Vc;
    }
    Algo::Oracle
}

pub fn solve(args: &SolveArgs, limits: &Limits) -> Result<ResultDocument, CliError> {
    let g = read_graph(&args.file)?;
    let variant = Variant::new(args.kind, args.mode);
    let n = g.n();
    if args.algo == Algo::Dual && args.k_dual.is_none() {
        return Err(CliError::Parse("--algo dual needs --k-dual".into()));
    }
    let k = match (args.k, args.k_dual) {
        (Some(k), _) => Some(k),
        (None, Some(kd)) => Some(n.saturating_sub(kd)),
        (None, None) => None,
    };
    let algo = if args.algo == Algo::Auto { choose(&g, variant, k, args.k_dual, limits) } else { args.algo };
    let partition_only = |name: &str| -> Result<(), CliError> {
        if variant.mode != CoverMode::Partition {
            return Err(CliError::Unsupported(format!("{name} solves partitions only")));
        }
        Ok(())
    };
    let started = Instant::now();
    let outcome = match algo {
        Algo::Auto => unreachable!("resolved above"),
        Algo::Oracle => {
            let budget =
                OracleBudget { max_vertices: limits.oracle_max_vertices, node_limit: limits.oracle_node_limit, prune: true };
            match k {
                Some(k) => Outcome::Decided(oracle::decide(&g, variant, k, budget)?),
                None => Outcome::Optimum(oracle::solve_exact(&g, variant, budget)?),
            }
        }
        Algo::DagPp => {
            partition_only("dag-pp")?;
            if variant.kind != PathKind::Unrestricted || !g.is_directed() || !g.is_dag() {
                return Err(CliError::Unsupported("dag-pp needs --kind pp on a directed acyclic graph".into()));
            }
            Outcome::Optimum(solve_dag_pp(&g).map_err(|e| CliError::Internal(e.to_string()))?)
        }
        Algo::Xp => {
            partition_only("xp")?;
            if variant.kind != PathKind::Shortest {
                return Err(CliError::Unsupported("xp needs --kind spp".into()));
            }
            let opts = XpOptions { threads: args.threads, ..XpOptions::default() };
            match k {
                Some(k) => Outcome::Decided(solve_spp_xp_with(&g, k, opts)?),
                None => match solve_spp_xp_with(&g, n, opts)? {
                    Decision::Yes(sys) => Outcome::Optimum(sys),
                    Decision::No => return Err(CliError::Internal("singletons always form a partition".into())),
                },
            }
        }
        Algo::Nd => Outcome::Optimum(nd::solve_nd(&g, variant)?),
        Algo::Vc => {
            partition_only("vc")?;
            if variant.kind != PathKind::Unrestricted {
                return Err(CliError::Unsupported("vc needs --kind pp".into()));
            }
            let opts = VcOptions { threads: args.threads, ..VcOptions::default() };
            Outcome::Optimum(vc::solve_upp_vc_with(&g, opts, None)?)
        }
        Algo::Dual => {
            let opts = VcOptions { threads: args.threads, ..VcOptions::default() };
            let kd = args.k_dual.expect("checked above");
            Outcome::Decided(vc::solve_dual(&g, kd, variant, opts)?)
        }
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let (answer, sys) = match (outcome, k) {
        (Outcome::Optimum(sys), None) => ("optimum", Some(sys)),
        (Outcome::Optimum(sys), Some(k)) if sys.len() <= k => ("yes", Some(sys)),
        (Outcome::Optimum(_), Some(_)) | (Outcome::Decided(Decision::No), _) => ("no", None),
        (Outcome::Decided(Decision::Yes(sys)), _) => ("yes", Some(sys)),
    };
    if let Some(sys) = &sys {
        let verdict = verify(&g, sys);
        if !verdict.is_valid() {
            return Err(CliError::Internal(format!("{} produced an invalid system: {:?}", algo.name(), verdict.failures)));
        }
    }
    let problem = match variant.mode {
        CoverMode::Partition => "path-partition",
        CoverMode::Cover => "path-cover",
        CoverMode::EdgeDisjointCover => "edge-disjoint-path-cover",
    };
    Ok(ResultDocument {
        problem: problem.into(),
        kind: variant.kind.to_string(),
        mode: variant.mode.to_string(),
        direction: direction(&g).into(),
        n,
        m: g.m(),
        k_requested: k,
        answer: answer.into(),
        value: sys.as_ref().map(PathSystem::len),
        paths: sys.map_or_else(Vec::new, |s| s.paths.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect()),
        algorithm: algo.name().into(),
        elapsed_ms,
        // a "no" carries no certificate, so there is nothing left to check
        verified: true,
    })
}

fn direction(g: &Graph) -> &'static str {
    if g.is_directed() {
        "directed"
    } else {
        "undirected"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsDocument {
    pub problem: &'static str,
    pub direction: &'static str,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub acyclic: Option<bool>,
    pub diameter: usize,
    pub degeneracy: usize,
    pub bipartite: bool,
    pub nd: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dnd: Option<usize>,
    pub vc: usize,
}

pub fn params(g: &Graph) -> ParamsDocument {
    let u = g.underlying_undirected();
    ParamsDocument {
        problem: "params",
        direction: direction(g),
        n: g.n(),
        m: g.m(),
        connected: u.connected_components().len() <= 1,
        acyclic: g.is_directed().then(|| g.is_dag()),
        diameter: g.diameter(),
        degeneracy: u.degeneracy().0,
        bipartite: u.bipartition().is_ok(),
        nd: nd::neighborhood_diversity(&u),
        dnd: g.is_directed().then(|| nd::neighborhood_diversity(g)),
        vc: vc::min_vertex_cover(&u).len(),
    }
}

fn random_3dm(seed: u64, p: usize, q: usize) -> Result<ThreeDmInstance, CliError> {
    let mut rng = random::rng(seed);
    let mut all: Vec<[usize; 3]> = Vec::new();
    for x in 0..p {
        for y in p..2 * p {
            for z in 2 * p..3 * p {
                all.push([x, y, z]);
            }
        }
    }
    all.shuffle(&mut rng);
    let mut occ = vec![0; 3 * p];
    let mut triples = Vec::new();
    for t in all {
        if triples.len() == q {
            break;
        }
        if t.iter().all(|&e| occ[e] < 3) {
            t.iter().for_each(|&e| occ[e] += 1);
            triples.push(t);
        }
    }
    if triples.len() < q {
        return Err(CliError::Generate(format!("could not pick {q} triples over {p} elements per set")));
    }
    triples.sort();
    Ok(ThreeDmInstance { p, triples })
}

fn generate(args: &GenerateArgs) -> Result<String, CliError> {
    let reduction: ReductionOutput = match &args.which {
        Generator::ThreeDm { p, q, rotated } => {
            let inst = random_3dm(args.seed, *p, *q)?;
            let o = if *rotated { Orientation::Rotated } else { Orientation::Straight };
            forge::gen_3dm_to_dagspp(&inst, Some(&vec![o; inst.triples.len()]))?
        }
        Generator::Clique { base, n, prob, k } => {
            let g = match base {
                Some(path) => read_graph(path)?,
                None => random::gnp(&mut random::rng(args.seed), *n, prob.clamp(0.0, 1.0)),
            };
            forge::gen_clique_to_dagspp(&g, *k)?
        }
        Generator::P4 { base, n } => {
            let g = match base {
                Some(path) => read_graph(path)?,
                None => random::random_bipartite_bounded(&mut random::rng(args.seed), n / 2, n - n / 2, 0.5, 3),
            };
            forge::gen_4uipp_to_uspp(&g)?
        }
    };
    let out = args.out.as_ref().ok_or_else(|| CliError::Parse("generate needs --out".into()))?;
    write_file(out, &io::write_graph(&reduction.graph))?;
    let labels = args.labels.clone().unwrap_or_else(|| {
        let mut s = out.clone().into_os_string();
        s.push(".labels");
        PathBuf::from(s)
    });
    write_file(&labels, &io::write_labels(&reduction.labels))?;
    Ok(format!("k_target {}", reduction.k))
}

fn verify_file(graph: &Path, solution: &Path) -> Result<(VerdictDocument, bool), CliError> {
    let g = read_graph(graph)?;
    let text = std::fs::read_to_string(solution).map_err(|e| CliError::Io(format!("{}: {e}", solution.display())))?;
    let sol: SolutionFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", solution.display())))?;
    let mut paths = Vec::new();
    for p in sol.paths {
        let mut q = Vec::new();
        for v in p {
            if v == 0 || v > g.n() {
                return Err(CliError::Parse(format!("vertex {v} outside 1..={}", g.n())));
            }
            q.push(v - 1);
        }
        paths.push(q);
    }
    let verdict = verify(&g, &PathSystem::new(Variant::new(sol.kind.0, sol.mode.0), paths));
    let failures = verdict
        .failures
        .iter()
        .map(|f| {
            let one = Some(f.index + 1);
            if f.reason == FailureReason::UncoveredVertex {
                FailureEntry { reason: f.reason.code(), path: None, vertex: one }
            } else {
                FailureEntry { reason: f.reason.code(), path: one, vertex: None }
            }
        })
        .collect();
    let valid = verdict.is_valid();
    Ok((VerdictDocument { valid, failures }, valid))
}
