//! Shortest path partition in `n^O(k)` time: guess the endpoint pairs, keep
//! only guesses whose path lengths add up to `n`, then route disjoint
//! shortest paths between them.

use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::checker::{CoverMode, PathKind, PathSystem, Variant};
use crate::graph::{DistanceMatrix, Graph};
use crate::oracle::Decision;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XpError {
    #[error("terminal enumeration needs an undirected graph or a DAG")]
    Unsupported,
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
}

/// Endpoint pairs in increasing order. `(s, s)` stands for a one-vertex path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TerminalSet {
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XpOptions {
    pub threads: usize,
    /// Keep only terminal sets with `sum(d + 1) == n`. Without it every
    /// k-set of pairs is tried and coverage is checked afterwards.
    pub distance_filter: bool,
}

impl Default for XpOptions {
    fn default() -> Self {
        XpOptions { threads: 1, distance_filter: true }
    }
}

fn supported(g: &Graph) -> bool {
    !g.is_directed() || g.is_dag()
}

/// Candidate `(s, t, d(s, t))` triples: unordered with `s <= t` for
/// undirected graphs, ordered for DAGs.
pub fn terminal_pairs(g: &Graph, dist: &DistanceMatrix) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let lo = if g.is_directed() { 0 } else { s };
        for t in lo..g.n() {
            if let Some(d) = dist.get(s, t) {
                out.push((s, t, d));
            }
        }
    }
    out
}

/// Streams terminal sets of exactly `k` pairs whose lengths cover `n`
/// vertices, in lexicographic order of pair indices.
pub fn for_each_terminal_set(
    g: &Graph,
    dist: &DistanceMatrix,
    k: usize,
    mut f: impl FnMut(&TerminalSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let pairs = terminal_pairs(g, dist);
    let max_len = pairs.iter().map(|p| p.2 + 1).max().unwrap_or(1);
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        pairs: &[(usize, usize, usize)],
        from: usize,
        left: usize,
        budget: usize,
        max_len: usize,
        chosen: &mut Vec<(usize, usize)>,
        f: &mut dyn FnMut(&TerminalSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if left == 0 {
            if budget == 0 {
                return f(&TerminalSet { pairs: chosen.clone() });
            }
            return ControlFlow::Continue(());
        }
        if budget < left || budget > left * max_len {
            return ControlFlow::Continue(());
        }
        for i in from..pairs.len() {
            let (s, t, d) = pairs[i];
            if d + 1 > budget {
                continue;
            }
            chosen.push((s, t));
            rec(pairs, i + 1, left - 1, budget - d - 1, max_len, chosen, f)?;
            chosen.pop();
        }
        ControlFlow::Continue(())
    }
    rec(&pairs, 0, k, g.n(), max_len, &mut chosen, &mut f)
}

pub fn enumerate_terminal_sets(g: &Graph, dist: &DistanceMatrix, k: usize) -> Vec<TerminalSet> {
    let mut out = Vec::new();
    let _ = for_each_terminal_set(g, dist, k, |ts| {
        out.push(ts.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Every k-set of pairs with pairwise distinct terminals, whatever the
/// lengths add up to.
fn for_each_k_set(g: &Graph, dist: &DistanceMatrix, k: usize, f: &mut dyn FnMut(&TerminalSet) -> ControlFlow<()>) -> ControlFlow<()> {
    let pairs = terminal_pairs(g, dist);
    fn rec(
        pairs: &[(usize, usize, usize)],
        from: usize,
        left: usize,
        used: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
        f: &mut dyn FnMut(&TerminalSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if left == 0 {
            return f(&TerminalSet { pairs: chosen.clone() });
        }
        for i in from..pairs.len() {
            let (s, t, _) = pairs[i];
            if used[s] || used[t] {
                continue;
            }
            used[s] = true;
            used[t] = true;
            chosen.push((s, t));
            let flow = rec(pairs, i + 1, left - 1, used, chosen, f);
            chosen.pop();
            used[s] = false;
            used[t] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
    rec(&pairs, 0, k, &mut vec![false; g.n()], &mut Vec::new(), f)
}

fn stream(
    g: &Graph,
    dist: &DistanceMatrix,
    k: usize,
    filter: bool,
    f: &mut dyn FnMut(&TerminalSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if filter {
        for_each_terminal_set(g, dist, k, f)
    } else {
        for_each_k_set(g, dist, k, f)
    }
}

/// Pairwise vertex-disjoint shortest paths joining each pair, or `None`.
/// Longer pairs are routed first. The result follows the input pair order.
pub fn disjoint_shortest_paths(g: &Graph, dist: &DistanceMatrix, ts: &TerminalSet) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut used = vec![false; n];
    for &(s, t) in &ts.pairs {
        dist.get(s, t)?;
        for x in if s == t { vec![s] } else { vec![s, t] } {
            if used[x] {
                return None;
            }
            used[x] = true;
        }
    }
    let mut order: Vec<usize> = (0..ts.pairs.len()).collect();
    order.sort_by_key(|&i| {
        let (s, t) = ts.pairs[i];
        std::cmp::Reverse(dist.get(s, t).unwrap())
    });
    let mut routes: Vec<Vec<usize>> = vec![Vec::new(); ts.pairs.len()];

    fn route_from(
        g: &Graph,
        dist: &DistanceMatrix,
        t: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        rest: &mut dyn FnMut(&[usize], &mut [bool]) -> bool,
    ) -> bool {
        let x = *path.last().unwrap();
        if x == t {
            return rest(path, used);
        }
        let remaining = dist.get(x, t).unwrap();
        for &w in g.out_neighbors(x) {
            if dist.get(w, t) != Some(remaining - 1) {
                continue;
            }
            if w == t || !used[w] {
                if w != t {
                    used[w] = true;
                }
                path.push(w);
                let ok = route_from(g, dist, t, path, used, rest);
                path.pop();
                if w != t {
                    used[w] = false;
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }

    fn place(
        g: &Graph,
        dist: &DistanceMatrix,
        ts: &TerminalSet,
        order: &[usize],
        used: &mut [bool],
        routes: &mut Vec<Vec<usize>>,
    ) -> bool {
        let Some((&i, rest)) = order.split_first() else { return true };
        let (s, t) = ts.pairs[i];
        let mut path = vec![s];
        route_from(g, dist, t, &mut path, used, &mut |p, used| {
            routes[i] = p.to_vec();
            place(g, dist, ts, rest, used, routes)
        })
    }

    place(g, dist, ts, &order, &mut used, &mut routes).then_some(routes)
}

fn try_set(g: &Graph, dist: &DistanceMatrix, ts: &TerminalSet) -> Option<Vec<Vec<usize>>> {
    let paths = disjoint_shortest_paths(g, dist, ts)?;
    let covered: usize = paths.iter().map(Vec::len).sum();
    (covered == g.n()).then_some(paths)
}

pub fn solve_spp_xp(g: &Graph, k: usize) -> Result<Decision, XpError> {
    solve_spp_xp_with(g, k, XpOptions::default())
}

/// Decides whether the vertices split into at most `k` shortest paths. The
/// certificate is the first success in enumeration order, whatever the
/// thread count.
pub fn solve_spp_xp_with(g: &Graph, k: usize, opts: XpOptions) -> Result<Decision, XpError> {
    if !supported(g) {
        return Err(XpError::Unsupported);
    }
    let variant = Variant::new(PathKind::Shortest, CoverMode::Partition);
    if g.n() == 0 {
        return Ok(Decision::Yes(PathSystem::new(variant, Vec::new())));
    }
    let dist = g.all_pairs_distances();
    let pool = if opts.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| XpError::ThreadPool(e.to_string()))?,
        )
    } else {
        None
    };
    for kk in 1..=k.min(g.n()) {
        let found = match &pool {
            None => {
                let mut hit = None;
                let _ = stream(g, &dist, kk, opts.distance_filter, &mut |ts| match try_set(g, &dist, ts) {
                    Some(p) => {
                        hit = Some(p);
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                });
                hit
            }
            Some(pool) => {
                let mut sets = Vec::new();
                let _ = stream(g, &dist, kk, opts.distance_filter, &mut |ts| {
                    sets.push(ts.clone());
                    ControlFlow::Continue(())
                });
                pool.install(|| sets.par_iter().find_map_first(|ts| try_set(g, &dist, ts)))
            }
        };
        if let Some(paths) = found {
            return Ok(Decision::Yes(PathSystem::new(variant, paths)));
        }
    }
    Ok(Decision::No)
}
