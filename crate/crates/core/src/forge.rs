//! Generators for the three hardness reductions, structural checks on their
//! output, and brute-force deciders for the source problems.
//!
//! * 3-dimensional matching to shortest path partition of a bipartite DAG
//!   with maximum degree 4.
//! * Multicolored-style clique to shortest path partition of a DAG, with
//!   the target size depending only on the clique size.
//! * Induced P4 partition of a subcubic bipartite graph to shortest path
//!   partition of a bipartite graph of small diameter and degeneracy.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::checker::is_induced_path;
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("malformed instance: {0}")]
    Malformed(String),
    #[error("clique size must satisfy 2 <= k <= n, got k = {k} with n = {n}")]
    BadK { k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    ThreeDm,
    Clique,
    InducedP4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub graph: Graph,
    /// Target number of shortest paths.
    pub k: usize,
    pub labels: Vec<String>,
    /// Extra numbers the structural checks need (vertex count of the source
    /// graph, clique size, ...).
    pub source_n: usize,
    pub source_k: usize,
}

impl ReductionOutput {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

struct Named {
    b: GraphBuilder,
    labels: Vec<String>,
}

impl Named {
    fn new(directed: bool) -> Self {
        Named { b: GraphBuilder::new(directed), labels: Vec::new() }
    }

    fn add(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.b.add_vertex()
    }

    fn arc(&mut self, u: usize, v: usize) {
        self.b.add_edge(u, v);
    }
}

/// 3-DM over `X = 0..p`, `Y = p..2p`, `Z = 2p..3p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDmInstance {
    pub p: usize,
    pub triples: Vec<[usize; 3]>,
}

impl ThreeDmInstance {
    fn validate(&self) -> Result<(), ForgeError> {
        let p = self.p;
        let mut seen = BTreeSet::new();
        let mut occ = vec![0; 3 * p];
        for t in &self.triples {
            let ok = t[0] < p && (p..2 * p).contains(&t[1]) && (2 * p..3 * p).contains(&t[2]);
            if !ok {
                return Err(ForgeError::Malformed(format!("triple {t:?} must take one element from each of X, Y, Z")));
            }
            if !seen.insert(*t) {
                return Err(ForgeError::Malformed(format!("triple {t:?} listed twice")));
            }
            for &e in t {
                occ[e] += 1;
                if occ[e] > 3 {
                    return Err(ForgeError::Malformed(format!("element {e} occurs in more than three triples")));
                }
            }
        }
        Ok(())
    }
}

/// How a gadget's middle column attaches to its triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `l12 -> x, l22 -> y, l32 -> z`; keeps `X ∪ Z` and `Y` on opposite
    /// sides of the bipartition.
    #[default]
    Straight,
    /// `l12 -> x, l22 -> z, l32 -> y`.
    Rotated,
}

/// Gadget vertex order: l11 l12 l13 l21 l22 l23 l31 l32 l33.
const GADGET_ARCS: [(usize, usize); 10] = [(0, 1), (1, 2), (2, 5), (0, 5), (3, 4), (4, 5), (3, 8), (5, 8), (6, 7), (7, 8)];

pub fn gen_3dm_to_dagspp(inst: &ThreeDmInstance, orientations: Option<&[Orientation]>) -> Result<ReductionOutput, ForgeError> {
    inst.validate()?;
    if let Some(o) = orientations {
        if o.len() != inst.triples.len() {
            return Err(ForgeError::Malformed("one orientation per triple".into()));
        }
    }
    let p = inst.p;
    let mut g = Named::new(true);
    for (set, name) in ["x", "y", "z"].iter().enumerate() {
        for i in 0..p {
            let id = g.add(format!("{name}_{}", i + 1));
            debug_assert_eq!(id, set * p + i);
        }
    }
    for (j, t) in inst.triples.iter().enumerate() {
        let base = g.b.n();
        for a in 1..=3 {
            for c in 1..=3 {
                g.add(format!("l_{a}{c}^{}", j + 1));
            }
        }
        for (u, v) in GADGET_ARCS {
            g.arc(base + u, base + v);
        }
        let o = orientations.map_or(Orientation::Straight, |o| o[j]);
        let (second, third) = match o {
            Orientation::Straight => (t[1], t[2]),
            Orientation::Rotated => (t[2], t[1]),
        };
        g.arc(base + 1, t[0]);
        g.arc(base + 4, second);
        g.arc(base + 7, third);
    }
    Ok(ReductionOutput {
        kind: ReductionKind::ThreeDm,
        graph: g.b.build(),
        k: p + 3 * inst.triples.len(),
        labels: g.labels,
        source_n: 3 * p,
        source_k: inst.triples.len(),
    })
}

/// Clique of size `k` in undirected `g` to DAG shortest path partition with
/// `k(k-1)/2 + 3k` paths.
pub fn gen_clique_to_dagspp(g: &Graph, k: usize) -> Result<ReductionOutput, ForgeError> {
    if g.is_directed() {
        return Err(ForgeError::Malformed("clique source graph must be undirected".into()));
    }
    let n = g.n();
    if k < 2 || k > n {
        return Err(ForgeError::BadK { k, n });
    }
    let mut h = Named::new(true);
    // top[i][u] / bottom[i][u]: level vertices of gadget G_{i,u}, in wire order
    let mut top = vec![vec![Vec::new(); n + 2]; k + 1];
    let mut bottom = vec![vec![Vec::new(); n + 2]; k + 1];
    let mut wire_a: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut wire_b: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut gadget_vertices = vec![Vec::new(); k + 1];
    for i in 1..=k {
        for r in 1..=2 {
            top[i][0].push(h.add(format!("a_{r}^{i},0")));
        }
        for r in 1..=2 {
            bottom[i][0].push(h.add(format!("b_{r}^{i},0")));
        }
        for u in 1..=n {
            for r in (1..=k).filter(|&r| r != i) {
                let a = h.add(format!("a_{r}^{i},{u}"));
                let b = h.add(format!("b_{r}^{i},{u}"));
                h.arc(a, b);
                top[i][u].push(a);
                bottom[i][u].push(b);
                wire_a.insert((i, u, r), a);
                wire_b.insert((i, u, r), b);
            }
        }
        for r in 1..=k + 2 {
            top[i][n + 1].push(h.add(format!("a_{r}^{i},{}", n + 1)));
        }
        for r in 1..=2 {
            bottom[i][n + 1].push(h.add(format!("b_{r}^{i},{}", n + 1)));
        }
        for u in [0, n + 1] {
            for level in [&top[i][u], &bottom[i][u]] {
                for w in level.windows(2) {
                    h.arc(w[0], w[1]);
                }
            }
        }
        for u in 0..=n {
            h.arc(*top[i][u].last().unwrap(), top[i][u + 1][0]);
            h.arc(*bottom[i][u].last().unwrap(), bottom[i][u + 1][0]);
            if u < n {
                for w in top[i][u + 1].windows(2).chain(bottom[i][u + 1].windows(2)) {
                    h.arc(w[0], w[1]);
                }
            }
        }
        for u in 1..=n {
            h.arc(*top[i][u - 1].last().unwrap(), bottom[i][u + 1][0]);
        }
        // the closing chain of a row stays out so its last vertex is a sink
        for u in 0..=n + 1 {
            let tops = if u == n + 1 { &[][..] } else { &top[i][u][..] };
            gadget_vertices[i].extend(tops.iter().chain(&bottom[i][u]).copied());
        }
    }

    let mut s = vec![0; k + 1];
    let mut s2 = vec![0; k + 1];
    let mut t = vec![0; k + 1];
    let mut t2 = vec![0; k + 1];
    for i in 1..=k {
        s[i] = h.add(format!("s_{i}"));
        s2[i] = h.add(format!("s'_{i}"));
        t2[i] = h.add(format!("t'_{i}"));
        t[i] = h.add(format!("t_{i}"));
        h.arc(s[i], s2[i]);
        h.arc(s2[i], top[i][0][0]);
        h.arc(bottom[i][n + 1][1], t2[i]);
        h.arc(t2[i], t[i]);
    }
    let mut cs: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut ct: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let a = h.add(format!("s_{i},{j}"));
            let b = h.add(format!("s'_{i},{j}"));
            h.arc(a, b);
            cs.insert((i, j), (a, b));
            let c = h.add(format!("t'_{i},{j}"));
            let d = h.add(format!("t_{i},{j}"));
            h.arc(c, d);
            ct.insert((i, j), (c, d));
            for u in 1..=n {
                h.arc(b, wire_a[&(i, u, j)]);
                h.arc(wire_b[&(j, u, i)], c);
            }
        }
    }
    for i in 1..=k {
        for l in i + 1..=k {
            for src in [s[i], s2[i]] {
                h.arc(src, t[l]);
                h.arc(src, t2[l]);
            }
        }
    }
    for (&(i, j), &(a, b)) in &cs {
        for src in [a, b] {
            for l in i..=k {
                h.arc(src, t[l]);
                h.arc(src, t2[l]);
            }
            for p in (1..j).filter(|&p| p != i) {
                h.arc(src, ct[&(p, j)].0);
            }
        }
    }
    for i in 1..=k {
        for src in [bottom[i][0][0], bottom[i][0][1]] {
            for m in i..=k {
                h.arc(src, t[m]);
                h.arc(src, t2[m]);
            }
            for (&(_, hh), &(_, sink)) in &ct {
                if hh >= i {
                    h.arc(src, sink);
                }
            }
        }
    }
    for e in g.edges() {
        let (u, v) = (e.0 + 1, e.1 + 1);
        for i in 1..=k {
            for j in i + 1..=k {
                h.arc(wire_b[&(i, u, j)], wire_a[&(j, v, i)]);
                h.arc(wire_b[&(i, v, j)], wire_a[&(j, u, i)]);
            }
        }
    }
    for i in 1..=k {
        let mut sources: Vec<usize> = (1..i).flat_map(|j| gadget_vertices[j].clone()).collect();
        for l in 1..=i {
            sources.extend([s[l], s2[l]]);
        }
        for (&(l, _), &(a, b)) in &cs {
            if l <= i {
                sources.extend([a, b]);
            }
        }
        for &src in &sources {
            for &dst in &top[i][n + 1] {
                h.arc(src, dst);
            }
        }
    }
    Ok(ReductionOutput {
        kind: ReductionKind::Clique,
        graph: h.b.build(),
        k: k * (k - 1) / 2 + 3 * k,
        labels: h.labels,
        source_n: n,
        source_k: k,
    })
}

/// Induced P4 partition of a bipartite graph with maximum degree 3 to
/// shortest path partition with `|V|/4 + 2` paths.
pub fn gen_4uipp_to_uspp(g: &Graph) -> Result<ReductionOutput, ForgeError> {
    if g.is_directed() {
        return Err(ForgeError::Malformed("source graph must be undirected".into()));
    }
    let color = g.bipartition().map_err(|_| ForgeError::Malformed("source graph is not bipartite".into()))?;
    if g.max_degree() > 3 {
        return Err(ForgeError::Malformed("source graph has a vertex of degree above 3".into()));
    }
    if g.n() % 4 != 0 {
        return Err(ForgeError::Malformed("vertex count is not a multiple of 4".into()));
    }
    let n = g.n();
    let mut h = Named::new(false);
    for v in 0..n {
        h.add(format!("v_{}", v + 1));
    }
    for (u, v) in g.edges() {
        h.arc(u, v);
    }
    let x: Vec<usize> = (1..=5).map(|i| h.add(format!("x_{i}"))).collect();
    let y: Vec<usize> = (1..=5).map(|i| h.add(format!("y_{i}"))).collect();
    for i in 0..4 {
        h.arc(x[i], x[i + 1]);
        h.arc(y[i], y[i + 1]);
    }
    for v in 0..n {
        if color[v] == 1 {
            h.arc(x[1], v);
            h.arc(x[3], v);
        } else {
            h.arc(y[1], v);
            h.arc(y[3], v);
        }
    }
    for &a in &[x[1], x[3]] {
        for &b in &[y[1], y[3]] {
            h.arc(a, b);
        }
    }
    Ok(ReductionOutput {
        kind: ReductionKind::InducedP4,
        graph: h.b.build(),
        k: n / 4 + 2,
        labels: h.labels,
        source_n: n,
        source_k: 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

fn claim(name: &'static str, holds: bool, detail: String) -> ClaimCheck {
    ClaimCheck { name, holds, detail }
}

/// Structural properties each reduction promises about its output.
pub fn verify_reduction(out: &ReductionOutput) -> Vec<ClaimCheck> {
    let g = &out.graph;
    match out.kind {
        ReductionKind::ThreeDm => {
            let deg = g.max_degree();
            vec![
                claim("acyclic", g.is_dag(), String::new()),
                claim("bipartite", g.bipartition().is_ok(), String::new()),
                claim("max-degree-4", deg <= 4, format!("max degree {deg}")),
                claim("target", out.k == out.source_n / 3 + 3 * out.source_k, format!("k = {}", out.k)),
            ]
        }
        ReductionKind::Clique => {
            let sources = (0..g.n()).filter(|&v| g.in_degree(v) == 0).count();
            let sinks = (0..g.n()).filter(|&v| g.out_degree(v) == 0).count();
            let expect = out.k - out.source_k;
            vec![
                claim("acyclic", g.is_dag(), String::new()),
                claim("sources", sources == expect, format!("{sources} sources, expected {expect}")),
                claim("sinks", sinks == expect, format!("{sinks} sinks, expected {expect}")),
                claim("target", out.k == out.source_k * (out.source_k - 1) / 2 + 3 * out.source_k, format!("k = {}", out.k)),
            ]
        }
        ReductionKind::InducedP4 => {
            let (degen, _) = g.degeneracy();
            let diam = g.diameter();
            let connected = g.connected_components().len() == 1;
            vec![
                claim("bipartite", g.bipartition().is_ok(), String::new()),
                claim("degeneracy-5", degen <= 5, format!("degeneracy {degen}")),
                claim("diameter-4", connected && diam <= 4, format!("diameter {diam}, connected {connected}")),
                claim("vertex-count", g.n() == out.source_n + 10, format!("{} vertices", g.n())),
                claim("target", out.k == out.source_n / 4 + 2, format!("k = {}", out.k)),
            ]
        }
    }
}

/// Does some set of `p` pairwise disjoint triples cover all elements?
pub fn has_perfect_3dm(inst: &ThreeDmInstance) -> bool {
    fn rec(inst: &ThreeDmInstance, used: &mut [bool], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        // the smallest uncovered x must be matched
        let x = (0..inst.p).find(|&x| !used[x]).unwrap();
        for t in &inst.triples {
            if t[0] != x || t.iter().any(|&e| used[e]) {
                continue;
            }
            for &e in t {
                used[e] = true;
            }
            let ok = rec(inst, used, left - 1);
            for &e in t {
                used[e] = false;
            }
            if ok {
                return true;
            }
        }
        false
    }
    if inst.p == 0 {
        return true;
    }
    rec(inst, &mut vec![false; 3 * inst.p], inst.p)
}

pub fn has_clique(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, chosen: &mut Vec<usize>, from: usize, k: usize) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in from..g.n() {
            if chosen.iter().all(|&c| g.has_edge(c, v)) {
                chosen.push(v);
                if rec(g, chosen, v + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(g, &mut Vec::new(), 0, k)
}

/// Can the vertices be split into induced paths on exactly four vertices?
pub fn has_induced_p4_partition(g: &Graph) -> bool {
    fn rec(g: &Graph, used: &mut [bool]) -> bool {
        let Some(v) = (0..g.n()).find(|&v| !used[v]) else { return true };
        used[v] = true;
        let mut path = vec![v];
        let ok = grow(g, used, &mut path);
        used[v] = false;
        ok
    }
    // v is the smallest free vertex, so it may sit anywhere on its P4:
    // grow a path through v at both ends.
    fn grow(g: &Graph, used: &mut [bool], path: &mut Vec<usize>) -> bool {
        if path.len() == 4 {
            return is_induced_path(g, path) && rec(g, used);
        }
        let ends = [path[0], *path.last().unwrap()];
        for (side, &end) in ends.iter().enumerate() {
            for &w in g.neighbors(end) {
                if used[w] {
                    continue;
                }
                used[w] = true;
                if side == 0 {
                    path.insert(0, w);
                } else {
                    path.push(w);
                }
                let ok = grow(g, used, path);
                if side == 0 {
                    path.remove(0);
                } else {
                    path.pop();
                }
                used[w] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    g.n() % 4 == 0 && rec(g, &mut vec![false; g.n()])
}
