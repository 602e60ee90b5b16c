//! Exhaustive branch-and-bound solver for all nine variants. Meant for small
//! graphs; every other solver is tested against it.

use std::collections::HashSet;

use thiserror::Error;

use crate::checker::{is_valid_path, CoverMode, PathKind, PathSystem, Variant};
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub node_limit: u64,
    /// Use lower bounds to cut branches. Turning it off only costs time.
    pub prune: bool,
}

impl OracleBudget {
    pub fn for_mode(mode: CoverMode) -> Self {
        let max_vertices = if mode == CoverMode::Partition { 14 } else { 10 };
        OracleBudget { max_vertices, node_limit: 20_000_000, prune: true }
    }

    pub fn unlimited() -> Self {
        OracleBudget { max_vertices: usize::MAX, node_limit: u64::MAX, prune: true }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {max}")]
    TooLarge { n: usize, max: usize },
    #[error("search exceeded {0} nodes")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(PathSystem),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

/// Every valid path of `kind` starting at `start`, in DFS order.
pub fn enumerate_valid_paths(g: &Graph, kind: PathKind, start: usize) -> Vec<Vec<usize>> {
    let dist = (kind == PathKind::Shortest).then(|| g.all_pairs_distances());
    let ctx = Ctx { g, kind, dist: dist.as_ref() };
    let mut out = Vec::new();
    let mut path = vec![start];
    let mut on_path = vec![false; g.n()];
    on_path[start] = true;
    ctx.extend_tail(&mut path, &mut on_path, &|_, _| true, &mut |p| out.push(p.to_vec()));
    out
}

struct Ctx<'a> {
    g: &'a Graph,
    kind: PathKind,
    dist: Option<&'a DistanceMatrix>,
}

impl Ctx<'_> {
    fn can_append(&self, path: &[usize], on_path: &[bool], w: usize) -> bool {
        let last = *path.last().unwrap();
        if on_path[w] || !self.g.has_edge(last, w) {
            return false;
        }
        match self.kind {
            PathKind::Unrestricted => true,
            PathKind::Induced => path[..path.len() - 1].iter().all(|&x| !self.g.adjacent(x, w)),
            PathKind::Shortest => self.dist.unwrap().get(path[0], w) == Some(path.len()),
        }
    }

    fn can_prepend(&self, path: &[usize], on_path: &[bool], h: usize) -> bool {
        let first = path[0];
        if on_path[h] || !self.g.has_edge(h, first) {
            return false;
        }
        match self.kind {
            PathKind::Unrestricted => true,
            PathKind::Induced => path[1..].iter().all(|&x| !self.g.adjacent(x, h)),
            PathKind::Shortest => self.dist.unwrap().get(h, *path.last().unwrap()) == Some(path.len()),
        }
    }

    /// Reports `path` and all its valid tail extensions.
    fn extend_tail(
        &self,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        edge_ok: &dyn Fn(usize, usize) -> bool,
        report: &mut dyn FnMut(&[usize]),
    ) {
        report(path);
        let last = *path.last().unwrap();
        for &w in self.g.out_neighbors(last) {
            if edge_ok(last, w) && self.can_append(path, on_path, w) {
                path.push(w);
                on_path[w] = true;
                self.extend_tail(path, on_path, edge_ok, report);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    fn extend_head(
        &self,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        edge_ok: &dyn Fn(usize, usize) -> bool,
        report: &mut dyn FnMut(&[usize]),
    ) {
        report(path);
        let first = path[0];
        for &h in self.g.in_neighbors(first) {
            if edge_ok(h, first) && self.can_prepend(path, on_path, h) {
                path.insert(0, h);
                on_path[h] = true;
                self.extend_head(path, on_path, edge_ok, report);
                on_path[h] = false;
                path.remove(0);
            }
        }
    }

    fn extendable(&self, path: &[usize], on_path: &[bool], vertex_ok: &dyn Fn(usize) -> bool) -> bool {
        let last = *path.last().unwrap();
        let first = path[0];
        self.g.out_neighbors(last).iter().any(|&w| vertex_ok(w) && self.can_append(path, on_path, w))
            || self.g.in_neighbors(first).iter().any(|&h| vertex_ok(h) && self.can_prepend(path, on_path, h))
    }
}

struct Search<'a> {
    ctx: Ctx<'a>,
    mode: CoverMode,
    dag_order: Option<Vec<usize>>,
    covered: Vec<u32>,
    used: HashSet<(usize, usize)>,
    current: Vec<Vec<usize>>,
    best: Option<Vec<Vec<usize>>>,
    best_len: usize,
    stop_at: usize,
    max_len: usize,
    nodes: u64,
    budget: OracleBudget,
    overflow: bool,
}

impl Search<'_> {
    fn edge_key(&self, a: usize, b: usize) -> (usize, usize) {
        if self.ctx.g.is_directed() {
            (a, b)
        } else {
            (a.min(b), a.max(b))
        }
    }

    fn edge_available(&self, a: usize, b: usize) -> bool {
        match self.mode {
            CoverMode::Partition => self.covered[a] == 0 && self.covered[b] == 0,
            CoverMode::Cover => true,
            CoverMode::EdgeDisjointCover => !self.used.contains(&self.edge_key(a, b)),
        }
    }

    fn lower_bound(&self) -> usize {
        let g = self.ctx.g;
        let uncovered: Vec<usize> = (0..g.n()).filter(|&v| self.covered[v] == 0).collect();
        if uncovered.is_empty() {
            return 0;
        }
        if !self.budget.prune {
            return 1;
        }
        let mut bound = 1;
        if self.ctx.kind == PathKind::Shortest {
            bound = bound.max(uncovered.len().div_ceil(self.max_len));
        }
        if g.is_directed() {
            let no_in = uncovered.iter().filter(|&&v| !g.in_neighbors(v).iter().any(|&u| self.edge_available(u, v))).count();
            let no_out = uncovered.iter().filter(|&&v| !g.out_neighbors(v).iter().any(|&w| self.edge_available(v, w))).count();
            bound = bound.max(no_in).max(no_out);
        } else {
            let mut isolated = 0usize;
            let mut ends = 0usize;
            for &v in &uncovered {
                match g.neighbors(v).iter().filter(|&&w| self.edge_available(v, w)).count() {
                    0 => isolated += 1,
                    1 => ends += 1,
                    _ => {}
                }
            }
            bound = bound.max(isolated + ends.div_ceil(2));
        }
        bound
    }

    fn candidates(&self, v: usize) -> Vec<Vec<usize>> {
        let g = self.ctx.g;
        let n = g.n();
        let mode = self.mode;
        let covered = &self.covered;
        let vertex_ok = |w: usize| mode != CoverMode::Partition || covered[w] == 0;
        let edge_ok = |a: usize, b: usize| vertex_ok(a) && vertex_ok(b) && self.edge_available(a, b);
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut path = vec![v];
        let mut on_path = vec![false; n];
        on_path[v] = true;
        if self.dag_order.is_some() && mode == CoverMode::Partition {
            self.ctx.extend_tail(&mut path, &mut on_path, &edge_ok, &mut |p| out.push(p.to_vec()));
        } else {
            let mut rights: Vec<Vec<usize>> = Vec::new();
            self.ctx.extend_tail(&mut path, &mut on_path, &edge_ok, &mut |p| rights.push(p.to_vec()));
            let mut seen_sets: HashSet<Vec<usize>> = HashSet::new();
            for right in rights {
                let mut p = right.clone();
                let mut on = vec![false; n];
                for &x in &p {
                    on[x] = true;
                }
                let ctx = &self.ctx;
                self.ctx.extend_head(&mut p, &mut on, &edge_ok, &mut |q| {
                    if !g.is_directed() && q.len() > 1 && q[0] > q[q.len() - 1] {
                        return;
                    }
                    if mode == CoverMode::Cover {
                        let mut on_q = vec![false; n];
                        for &x in q {
                            on_q[x] = true;
                        }
                        if ctx.extendable(q, &on_q, &|_| true) {
                            return;
                        }
                        let mut key = q.to_vec();
                        key.sort_unstable();
                        if !seen_sets.insert(key) {
                            return;
                        }
                    }
                    out.push(q.to_vec());
                });
            }
        }
        out.sort_by_key(|p| std::cmp::Reverse(p.len()));
        out
    }

    fn next_vertex(&self) -> Option<usize> {
        match &self.dag_order {
            Some(order) => order.iter().copied().find(|&v| self.covered[v] == 0),
            None => (0..self.ctx.g.n()).find(|&v| self.covered[v] == 0),
        }
    }

    fn run(&mut self) {
        if self.overflow || self.best_len <= self.stop_at {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget.node_limit {
            self.overflow = true;
            return;
        }
        let Some(v) = self.next_vertex() else {
            if self.current.len() < self.best_len {
                self.best_len = self.current.len();
                self.best = Some(self.current.clone());
            }
            return;
        };
        if self.current.len() + self.lower_bound() >= self.best_len {
            return;
        }
        for p in self.candidates(v) {
            for &x in &p {
                self.covered[x] += 1;
            }
            let mut added = Vec::new();
            if self.mode == CoverMode::EdgeDisjointCover {
                for w in p.windows(2) {
                    let key = self.edge_key(w[0], w[1]);
                    self.used.insert(key);
                    added.push(key);
                }
            }
            self.current.push(p);
            self.run();
            let p = self.current.pop().unwrap();
            for key in added {
                self.used.remove(&key);
            }
            for &x in &p {
                self.covered[x] -= 1;
            }
            if self.overflow || self.best_len <= self.stop_at {
                return;
            }
        }
    }
}

/// Searches for a system of fewer than `upper` paths, stopping early once
/// one with at most `stop_at` paths is found.
fn search(g: &Graph, variant: Variant, budget: OracleBudget, upper: usize, stop_at: usize) -> Result<Option<Vec<Vec<usize>>>, OracleError> {
    let dist = (variant.kind == PathKind::Shortest).then(|| g.all_pairs_distances());
    let max_len = dist.as_ref().map_or(g.n(), |d| d.max_finite() + 1);
    let dag_order = if g.is_directed() { g.topological_order().ok() } else { None };
    let mut s = Search {
        ctx: Ctx { g, kind: variant.kind, dist: dist.as_ref() },
        mode: variant.mode,
        dag_order,
        covered: vec![0; g.n()],
        used: HashSet::new(),
        current: Vec::new(),
        best: None,
        best_len: upper,
        stop_at,
        max_len: max_len.max(1),
        nodes: 0,
        budget,
        overflow: false,
    };
    let root = s.lower_bound();
    s.stop_at = s.stop_at.max(root);
    s.run();
    if s.overflow {
        return Err(OracleError::BudgetExceeded(budget.node_limit));
    }
    Ok(s.best)
}

fn check_size(g: &Graph, budget: &OracleBudget) -> Result<(), OracleError> {
    if g.n() > budget.max_vertices {
        return Err(OracleError::TooLarge { n: g.n(), max: budget.max_vertices });
    }
    Ok(())
}

/// A minimum path system. Components are solved independently; within a
/// component the first optimum in search order wins.
pub fn solve_exact(g: &Graph, variant: Variant, budget: OracleBudget) -> Result<PathSystem, OracleError> {
    check_size(g, &budget)?;
    let mut paths = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        let found = search(&sub, variant, budget, sub.n() + 1, 0)?.expect("singletons are always valid");
        paths.extend(found.into_iter().map(|p| p.into_iter().map(|x| comp[x]).collect::<Vec<_>>()));
    }
    debug_assert!(paths.iter().all(|p| is_valid_path(g, variant.kind, None, p)));
    Ok(PathSystem::new(variant, paths))
}

/// Is there a valid system with at most `k` paths?
pub fn decide(g: &Graph, variant: Variant, k: usize, budget: OracleBudget) -> Result<Decision, OracleError> {
    check_size(g, &budget)?;
    if g.connected_components().len() > 1 {
        let best = solve_exact(g, variant, budget)?;
        return Ok(if best.len() <= k { Decision::Yes(best) } else { Decision::No });
    }
    Ok(match search(g, variant, budget, k + 1, k)? {
        Some(paths) => Decision::Yes(PathSystem::new(variant, paths)),
        None => Decision::No,
    })
}
