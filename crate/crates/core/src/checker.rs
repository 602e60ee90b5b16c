//! Path predicates and the verifier for path systems.
//!
//! In digraphs an induced path must have the forward arc between consecutive
//! vertices and no arc in either direction between non-consecutive ones;
//! backward arcs between consecutive vertices are allowed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathKind {
    Unrestricted,
    Induced,
    Shortest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverMode {
    Partition,
    Cover,
    EdgeDisjointCover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variant {
    pub kind: PathKind,
    pub mode: CoverMode,
}

impl Variant {
    pub const fn new(kind: PathKind, mode: CoverMode) -> Self {
        Variant { kind, mode }
    }

    pub fn all() -> Vec<Variant> {
        let mut out = Vec::new();
        for kind in PathKind::ALL {
            for mode in CoverMode::ALL {
                out.push(Variant { kind, mode });
            }
        }
        out
    }
}

impl PathKind {
    pub const ALL: [PathKind; 3] = [PathKind::Unrestricted, PathKind::Induced, PathKind::Shortest];

    pub fn short_name(self) -> &'static str {
        match self {
            PathKind::Unrestricted => "pp",
            PathKind::Induced => "ipp",
            PathKind::Shortest => "spp",
        }
    }
}

impl CoverMode {
    pub const ALL: [CoverMode; 3] = [CoverMode::Partition, CoverMode::Cover, CoverMode::EdgeDisjointCover];

    pub fn short_name(self) -> &'static str {
        match self {
            CoverMode::Partition => "partition",
            CoverMode::Cover => "cover",
            CoverMode::EdgeDisjointCover => "ed-cover",
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl fmt::Display for CoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for PathKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pp" => Ok(PathKind::Unrestricted),
            "ipp" => Ok(PathKind::Induced),
            "spp" => Ok(PathKind::Shortest),
            _ => Err(format!("unknown path kind `{s}` (expected pp, ipp or spp)")),
        }
    }
}

impl FromStr for CoverMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "partition" => Ok(CoverMode::Partition),
            "cover" => Ok(CoverMode::Cover),
            "ed-cover" => Ok(CoverMode::EdgeDisjointCover),
            _ => Err(format!("unknown mode `{s}` (expected partition, cover or ed-cover)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub variant: Variant,
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn new(variant: Variant, paths: Vec<Vec<usize>>) -> Self {
        PathSystem { variant, paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    Empty,
    NotAPath,
    NotInduced,
    NotShortest,
    UncoveredVertex,
    VertexReused,
    EdgeReused,
}

impl FailureReason {
    pub fn code(self) -> &'static str {
        match self {
            FailureReason::Empty => "EMPTY",
            FailureReason::NotAPath => "NOT_A_PATH",
            FailureReason::NotInduced => "NOT_INDUCED",
            FailureReason::NotShortest => "NOT_SHORTEST",
            FailureReason::UncoveredVertex => "UNCOVERED_VERTEX",
            FailureReason::VertexReused => "VERTEX_REUSED",
            FailureReason::EdgeReused => "EDGE_REUSED",
        }
    }
}

/// `index` is a path index, except for `UncoveredVertex` where it is the
/// uncovered vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has(&self, reason: FailureReason) -> bool {
        self.failures.iter().any(|f| f.reason == reason)
    }
}

pub fn is_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.is_empty() || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = HashSet::with_capacity(seq.len());
    seq.iter().all(|&v| seen.insert(v)) && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    if !is_path(g, seq) {
        return false;
    }
    for i in 0..seq.len() {
        for j in i + 2..seq.len() {
            if g.adjacent(seq[i], seq[j]) {
                return false;
            }
        }
    }
    true
}

pub fn is_shortest_path(g: &Graph, dist: &DistanceMatrix, seq: &[usize]) -> bool {
    is_path(g, seq) && dist.get(seq[0], seq[seq.len() - 1]) == Some(seq.len() - 1)
}

fn shortest_by_bfs(g: &Graph, seq: &[usize]) -> bool {
    is_path(g, seq) && g.bfs(seq[0])[seq[seq.len() - 1]] == Some(seq.len() - 1)
}

/// Checks one path against a kind. Uses `dist` when given, otherwise a BFS
/// from the first vertex.
pub fn is_valid_path(g: &Graph, kind: PathKind, dist: Option<&DistanceMatrix>, seq: &[usize]) -> bool {
    match kind {
        PathKind::Unrestricted => is_path(g, seq),
        PathKind::Induced => is_induced_path(g, seq),
        PathKind::Shortest => match dist {
            Some(d) => is_shortest_path(g, d, seq),
            None => shortest_by_bfs(g, seq),
        },
    }
}

fn path_failure(g: &Graph, kind: PathKind, dist: Option<&DistanceMatrix>, seq: &[usize]) -> Option<FailureReason> {
    if seq.is_empty() {
        return Some(FailureReason::Empty);
    }
    if !is_path(g, seq) {
        return Some(FailureReason::NotAPath);
    }
    match kind {
        PathKind::Unrestricted => None,
        PathKind::Induced => (!is_induced_path(g, seq)).then_some(FailureReason::NotInduced),
        PathKind::Shortest => (!is_valid_path(g, kind, dist, seq)).then_some(FailureReason::NotShortest),
    }
}

pub fn verify(g: &Graph, system: &PathSystem) -> Verdict {
    verify_impl(g, None, system)
}

pub fn verify_with(g: &Graph, dist: &DistanceMatrix, system: &PathSystem) -> Verdict {
    verify_impl(g, Some(dist), system)
}

fn verify_impl(g: &Graph, dist: Option<&DistanceMatrix>, system: &PathSystem) -> Verdict {
    let mut failures = Vec::new();
    let mut uses = vec![0usize; g.n()];
    let mut edges_seen = HashSet::new();
    for (i, p) in system.paths.iter().enumerate() {
        if let Some(reason) = path_failure(g, system.variant.kind, dist, p) {
            failures.push(Failure { index: i, reason });
            if reason == FailureReason::Empty {
                continue;
            }
        }
        let mut reused_vertex = false;
        for &v in p.iter().filter(|&&v| v < g.n()) {
            uses[v] += 1;
            reused_vertex |= uses[v] > 1;
        }
        if reused_vertex && system.variant.mode == CoverMode::Partition {
            failures.push(Failure { index: i, reason: FailureReason::VertexReused });
        }
        if system.variant.mode == CoverMode::EdgeDisjointCover {
            let mut reused_edge = false;
            for w in p.windows(2) {
                let key = if g.is_directed() { (w[0], w[1]) } else { (w[0].min(w[1]), w[0].max(w[1])) };
                reused_edge |= !edges_seen.insert(key);
            }
            if reused_edge {
                failures.push(Failure { index: i, reason: FailureReason::EdgeReused });
            }
        }
    }
    for (v, &count) in uses.iter().enumerate() {
        if count == 0 {
            failures.push(Failure { index: v, reason: FailureReason::UncoveredVertex });
        }
    }
    Verdict { failures }
}
