//! Parameterization by vertex cover: an exact vertex cover, the twin kernel
//! for independent-side types, the `vc! * 2^vc` matching algorithm for
//! undirected path partition, and the dual-parameter driver.
//!
//! For an order `pi` of the cover `C` and a bit string `b` (b_i = 1: cover
//! vertices `pi(i)` and `pi(i+1)` lie consecutively on one path, possibly
//! through one vertex of `I = V \ C`), a weighted bipartite graph encodes how
//! `I` vertices attach to the cover vertices. A maximum-weight matching of
//! weight `w` yields a partition into `|V| - w` paths.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::checker::{CoverMode, PathKind, PathSystem, Variant};
use crate::graph::Graph;
use crate::matching::{greedy_maximal_matching, max_weight_matching, BipartiteGraph, WeightedMatching};
use crate::nd::{solve_nd, NdError};
use crate::oracle::Decision;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VcError {
    #[error("unsupported input: {0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Nd(#[from] NdError),
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
}

/// Minimum vertex cover of the underlying undirected graph, sorted.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let u = g.underlying_undirected();
    let n = u.n();
    let mut best: Vec<usize> = (0..n).filter(|&v| u.degree(v) > 0).collect();
    let mut taken = vec![false; n];
    let mut chosen = Vec::new();

    fn rec(u: &Graph, taken: &mut [bool], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
        if chosen.len() >= best.len() {
            return;
        }
        // highest remaining degree
        let mut pick = None;
        let mut pick_deg = 0;
        for v in 0..u.n() {
            if taken[v] {
                continue;
            }
            let d = u.neighbors(v).iter().filter(|&&w| !taken[w]).count();
            if d > pick_deg {
                pick_deg = d;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            *best = chosen.clone();
            return;
        };
        if chosen.len() + 1 >= best.len() {
            return;
        }
        taken[v] = true;
        chosen.push(v);
        rec(u, taken, chosen, best);
        chosen.pop();
        taken[v] = false;
        let nbrs: Vec<usize> = u.neighbors(v).iter().copied().filter(|&w| !taken[w]).collect();
        if chosen.len() + nbrs.len() < best.len() {
            for &w in &nbrs {
                taken[w] = true;
                chosen.push(w);
            }
            // v stays out; mark it so it is not picked again
            taken[v] = true;
            rec(u, taken, chosen, best);
            taken[v] = false;
            for &w in &nbrs {
                taken[w] = false;
                chosen.pop();
            }
        }
    }

    rec(&u, &mut taken, &mut chosen, &mut best);
    best.sort_unstable();
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: Graph,
    /// Original id of each kernel vertex.
    pub kept: Vec<usize>,
    /// Vertices dropped by the rule; each is a singleton in some optimum.
    pub removed: Vec<usize>,
}

/// Keeps at most `2|C|` vertices of each twin type outside the cover `C`.
/// Valid for all three path kinds on undirected graphs.
pub fn kernelize_vc(g: &Graph, cover: &[usize]) -> Kernel {
    let mut in_cover = vec![false; g.n()];
    for &c in cover {
        in_cover[c] = true;
    }
    let cap = 2 * cover.len();
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..g.n()).filter(|&v| !in_cover[v]) {
        groups.entry(g.neighbors(v).to_vec()).or_default().push(v);
    }
    let mut drop = vec![false; g.n()];
    for members in groups.values() {
        for &v in members.iter().skip(cap) {
            drop[v] = true;
        }
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    let removed: Vec<usize> = (0..g.n()).filter(|&v| drop[v]).collect();
    Kernel { graph: g.induced_subgraph(&kept), kept, removed }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuxLeft {
    /// `v_{pi(i)}`
    Cover(usize),
    /// `v'_{pi(i)}`
    Primed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuxRight {
    Outside(usize),
    /// `u_i`
    Dummy(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxMatchGraph {
    pub left: Vec<AuxLeft>,
    pub right: Vec<AuxRight>,
    pub graph: BipartiteGraph,
}

impl AuxMatchGraph {
    /// Edges as `(left, right, weight)` labels, sorted.
    pub fn labelled_edges(&self) -> Vec<(AuxLeft, AuxRight, u64)> {
        let mut out: Vec<_> = self.graph.edges.iter().map(|&(l, r, w)| (self.left[l], self.right[r], w)).collect();
        out.sort_unstable();
        out
    }
}

/// Builds the auxiliary graph for cover order `pi` (vertex ids, positions
/// `0..r`) and bits `b` (`b.len() == r - 1`). `outside` lists `I`.
pub fn build_aux_graph(g: &Graph, pi: &[usize], b: &[bool], outside: &[usize]) -> AuxMatchGraph {
    let r = pi.len();
    assert_eq!(b.len(), r.saturating_sub(1), "need one bit per consecutive pair");
    let mut is_outside = vec![false; g.n()];
    for &x in outside {
        is_outside[x] = true;
    }
    let n_i = |v: usize| g.neighbors(v).iter().copied().filter(|&x| is_outside[x]).collect::<Vec<_>>();

    let mut left: Vec<AuxLeft> = (0..r).map(AuxLeft::Cover).collect();
    let mut primed_at = vec![None; r];
    for i in 0..r {
        if i == 0 || !b[i - 1] {
            primed_at[i] = Some(left.len());
            left.push(AuxLeft::Primed(i));
        }
    }
    let mut right: Vec<AuxRight> = outside.iter().map(|&x| AuxRight::Outside(x)).collect();
    let mut right_index = vec![usize::MAX; g.n()];
    for (i, &x) in outside.iter().enumerate() {
        right_index[x] = i;
    }
    let mut edges = Vec::new();
    for i in 0..r.saturating_sub(1) {
        let (a, c) = (pi[i], pi[i + 1]);
        if b[i] {
            for &x in &n_i(a) {
                if g.has_edge(c, x) {
                    edges.push((i, right_index[x], 2));
                }
            }
            if g.has_edge(a, c) {
                let d = right.len();
                right.push(AuxRight::Dummy(i));
                edges.push((i, d, 1));
            }
        } else {
            for &x in &n_i(a) {
                edges.push((i, right_index[x], 1));
            }
            for &x in &n_i(c) {
                edges.push((primed_at[i + 1].unwrap(), right_index[x], 1));
            }
        }
    }
    if r > 0 {
        for &x in &n_i(pi[0]) {
            edges.push((primed_at[0].unwrap(), right_index[x], 1));
        }
        for &x in &n_i(pi[r - 1]) {
            edges.push((r - 1, right_index[x], 1));
        }
    }
    let mut graph = BipartiteGraph::new(left.len(), right.len());
    for (l, rr, w) in edges {
        graph.add_edge(l, rr, w);
    }
    AuxMatchGraph { left, right, graph }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkError {
    /// A bit says "joined" but the cover vertex has no partner.
    Malformed,
    /// The matching could be merged further; a neighbouring guess covers it.
    Skipped,
}

/// Reads paths off a matching of the auxiliary graph.
pub fn reconstruct_upp(g: &Graph, aux: &AuxMatchGraph, matching: &WeightedMatching, pi: &[usize], b: &[bool]) -> Result<Vec<Vec<usize>>, WalkError> {
    let r = pi.len();
    let mut cover_mate: Vec<Option<AuxRight>> = vec![None; r];
    let mut primed_mate: Vec<Option<usize>> = vec![None; r];
    for &(l, rr) in &matching.pairs {
        let right = aux.right[rr];
        match (aux.left[l], right) {
            (AuxLeft::Cover(i), m) => cover_mate[i] = Some(m),
            (AuxLeft::Primed(i), AuxRight::Outside(x)) => primed_mate[i] = Some(x),
            (AuxLeft::Primed(_), AuxRight::Dummy(_)) => unreachable!("dummies only touch cover vertices"),
        }
    }
    let some_break = b.iter().any(|&x| !x);
    for i in 0..r {
        if let Some(x) = primed_mate[i] {
            let prev = if i == 0 { (some_break && r > 1).then(|| pi[r - 1]) } else { Some(pi[i - 1]) };
            if prev.is_some_and(|p| g.has_edge(p, x)) {
                return Err(WalkError::Skipped);
            }
        }
    }
    let mut paths = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    for i in 0..r {
        if cur.is_empty() {
            if let Some(x) = primed_mate[i] {
                cur.push(x);
            }
        }
        cur.push(pi[i]);
        let joined = i + 1 < r && b[i];
        match (joined, cover_mate[i]) {
            (true, Some(AuxRight::Outside(x))) => cur.push(x),
            (true, Some(AuxRight::Dummy(_))) => {}
            (true, None) => return Err(WalkError::Malformed),
            (false, Some(AuxRight::Outside(y))) => {
                cur.push(y);
                paths.push(std::mem::take(&mut cur));
            }
            (false, _) => paths.push(std::mem::take(&mut cur)),
        }
    }
    let mut on_path = vec![false; g.n()];
    for p in &paths {
        for &x in p {
            on_path[x] = true;
        }
    }
    for v in 0..g.n() {
        if !on_path[v] {
            paths.push(vec![v]);
        }
    }
    Ok(paths)
}

/// One surviving `(pi, b)` guess with its matching weight and partition,
/// in the ids of the connected component being solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    /// Vertices in the component.
    pub n: usize,
    pub pi: Vec<usize>,
    pub b: Vec<bool>,
    pub weight: u64,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VcOptions {
    pub threads: usize,
    /// Skip bit strings whose path count cannot beat the record.
    pub prune: bool,
}

impl Default for VcOptions {
    fn default() -> Self {
        VcOptions { threads: 1, prune: true }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Best candidate for one order; `record` is the count to beat.
fn best_for_order(
    g: &Graph,
    pi: &[usize],
    outside: &[usize],
    mut record: usize,
    prune: bool,
    observer: &mut Option<&mut dyn FnMut(&Candidate)>,
) -> Option<Candidate> {
    let r = pi.len();
    let bits = r.saturating_sub(1);
    let mut best: Option<Candidate> = None;
    for mask in 0u64..(1u64 << bits) {
        let b: Vec<bool> = (0..bits).map(|i| mask >> i & 1 == 1).collect();
        let breaks = b.iter().filter(|&&x| !x).count();
        let bound = (breaks + 1) + outside.len().saturating_sub(r + breaks + 1);
        if prune && bound >= record {
            continue;
        }
        let aux = build_aux_graph(g, pi, &b, outside);
        let m = max_weight_matching(&aux.graph);
        let Ok(paths) = reconstruct_upp(g, &aux, &m, pi, &b) else { continue };
        let cand = Candidate { n: g.n(), pi: pi.to_vec(), b, weight: m.weight, paths };
        if let Some(obs) = observer.as_mut() {
            obs(&cand);
        }
        if cand.paths.len() < record {
            record = cand.paths.len();
            best = Some(cand);
        }
    }
    best
}

fn solve_component(g: &Graph, opts: VcOptions, observer: &mut Option<&mut dyn FnMut(&Candidate)>) -> Result<Vec<Vec<usize>>, VcError> {
    let cover = min_vertex_cover(g);
    if cover.is_empty() {
        return Ok((0..g.n()).map(|v| vec![v]).collect());
    }
    let mut in_cover = vec![false; g.n()];
    for &c in &cover {
        in_cover[c] = true;
    }
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !in_cover[v]).collect();
    let orders = permutations(&cover);
    let start = g.n() + 1;
    let best = if opts.threads > 1 && observer.is_none() {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| VcError::ThreadPool(e.to_string()))?;
        let per_order: Vec<Option<Candidate>> =
            pool.install(|| orders.par_iter().map(|pi| best_for_order(g, pi, &outside, start, opts.prune, &mut None)).collect());
        per_order.into_iter().flatten().min_by_key(|c| c.paths.len())
    } else {
        let mut record = start;
        let mut best: Option<Candidate> = None;
        for pi in &orders {
            if let Some(c) = best_for_order(g, pi, &outside, record, opts.prune, observer) {
                record = c.paths.len();
                best = Some(c);
            }
        }
        best
    };
    Ok(best.expect("the identity order with all breaks always survives").paths)
}

pub fn solve_upp_vc(g: &Graph) -> Result<PathSystem, VcError> {
    solve_upp_vc_with(g, VcOptions::default(), None)
}

/// Minimum path partition of an undirected graph in `vc! * 2^vc * poly(n)`
/// time. Among equal sizes the first candidate in (order, bits) sequence
/// wins, for any thread count. `observer` sees every surviving candidate
/// and forces a sequential run.
pub fn solve_upp_vc_with(g: &Graph, opts: VcOptions, mut observer: Option<&mut dyn FnMut(&Candidate)>) -> Result<PathSystem, VcError> {
    if g.is_directed() {
        return Err(VcError::Unsupported("the vertex-cover matching algorithm needs an undirected graph"));
    }
    let mut paths = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        let found = solve_component(&sub, opts, &mut observer)?;
        paths.extend(found.into_iter().map(|p| p.into_iter().map(|x| comp[x]).collect::<Vec<_>>()));
    }
    Ok(PathSystem::new(Variant::new(PathKind::Unrestricted, CoverMode::Partition), paths))
}

/// Decides whether `g` splits into at most `n - k_dual` paths of the given
/// kind. A greedy maximal matching with `k_dual` edges is already a
/// witness; otherwise the vertex cover is below `2 * k_dual` and an exact
/// parameterized solver finishes the job.
pub fn solve_dual(g: &Graph, k_dual: usize, variant: Variant, opts: VcOptions) -> Result<Decision, VcError> {
    if variant.mode != CoverMode::Partition {
        return Err(VcError::Unsupported("the dual driver handles partitions only"));
    }
    if g.is_directed() && variant.kind == PathKind::Unrestricted {
        return Err(VcError::Unsupported("no dual algorithm for unrestricted directed paths"));
    }
    let n = g.n();
    if k_dual > n || (k_dual == n && n > 0) {
        return Ok(Decision::No);
    }
    let matching = greedy_maximal_matching(g);
    if matching.len() >= k_dual {
        let mut covered = vec![false; n];
        let mut paths = Vec::new();
        for &(u, v) in matching.iter().take(k_dual) {
            covered[u] = true;
            covered[v] = true;
            paths.push(if g.has_edge(u, v) { vec![u, v] } else { vec![v, u] });
        }
        paths.extend((0..n).filter(|&v| !covered[v]).map(|v| vec![v]));
        return Ok(Decision::Yes(PathSystem::new(variant, paths)));
    }
    let sys = if variant.kind == PathKind::Unrestricted {
        solve_upp_vc_with(g, opts, None)?
    } else if g.is_directed() {
        solve_nd(g, variant)?
    } else {
        let kernel = kernelize_vc(g, &min_vertex_cover(g));
        let reduced = solve_nd(&kernel.graph, variant)?;
        let mut paths: Vec<Vec<usize>> =
            reduced.paths.into_iter().map(|p| p.into_iter().map(|x| kernel.kept[x]).collect()).collect();
        paths.extend(kernel.removed.iter().map(|&v| vec![v]));
        PathSystem::new(variant, paths)
    };
    Ok(if sys.len() + k_dual <= n { Decision::Yes(sys) } else { Decision::No })
}
