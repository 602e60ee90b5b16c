//! Simple graphs and digraphs on vertices `0..n`, plus the distance and
//! structural queries every solver needs.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph contains a directed cycle")]
    CycleFound,
    #[error("graph contains an odd cycle")]
    OddCycle,
}

/// A simple graph. Undirected graphs keep symmetric adjacency lists, so
/// `succ == pred` for them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            succ[u].push(v);
            pred[v].push(u);
            if !directed {
                succ[v].push(u);
                pred[u].push(v);
            }
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Graph { directed, succ, pred, m: seen.len() })
    }

    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, false, edges)
    }

    pub fn directed(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, true, arcs)
    }

    pub fn empty(n: usize, directed: bool) -> Self {
        Graph { directed, succ: vec![Vec::new(); n], pred: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-neighbours (all neighbours when undirected), sorted.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    /// `u -> v` for digraphs, `uv` for undirected graphs.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    /// Edge in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || (self.directed && self.has_edge(v, u))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.succ[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.pred[v].len()
    }

    /// Degree in the underlying undirected graph.
    pub fn degree(&self, v: usize) -> usize {
        if !self.directed {
            return self.succ[v].len();
        }
        let mut all: Vec<usize> = self.succ[v].iter().chain(&self.pred[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in lexicographic order; undirected edges come as `(u, v)`
    /// with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.succ[u] {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn underlying_undirected(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let mut set = BTreeSet::new();
        for (u, v) in self.edges() {
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        Graph::undirected(self.n(), &edges).expect("deduplicated edges")
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.succ[v] {
                let j = index[w];
                if j != usize::MAX && (self.directed || i < j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), self.directed, &edges).expect("subgraph of a simple graph")
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in self.succ[v].iter().chain(&self.pred[v]) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS distances from `s`, following arc directions.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap() + 1;
            for &w in &self.succ[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(self.bfs(s));
        }
        DistanceMatrix { n, data }
    }

    /// Kahn's algorithm, smallest available vertex first.
    pub fn topological_order(&self) -> Result<Vec<usize>, GraphError> {
        if !self.directed {
            return if self.m == 0 { Ok((0..self.n()).collect()) } else { Err(GraphError::CycleFound) };
        }
        let mut indeg: Vec<usize> = (0..self.n()).map(|v| self.pred[v].len()).collect();
        let mut ready: BTreeSet<usize> = (0..self.n()).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n());
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &self.succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == self.n() {
            Ok(order)
        } else {
            Err(GraphError::CycleFound)
        }
    }

    pub fn is_dag(&self) -> bool {
        self.directed && self.topological_order().is_ok()
    }

    /// Degeneracy of the underlying undirected graph with an elimination
    /// order (repeatedly remove a minimum-degree vertex, smallest id first).
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let u = self.underlying_undirected();
        let n = u.n();
        let mut deg: Vec<usize> = (0..n).map(|v| u.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
            best = best.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in u.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (best, order)
    }

    /// Two-colouring of the underlying graph; each component's smallest
    /// vertex gets colour 0.
    pub fn bipartition(&self) -> Result<Vec<u8>, GraphError> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.succ[v].iter().chain(&self.pred[v]) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Err(GraphError::OddCycle);
                    }
                }
            }
        }
        Ok(color)
    }

    /// Largest finite distance (0 for graphs without edges).
    pub fn diameter(&self) -> usize {
        self.all_pairs_distances().max_finite()
    }
}

/// Row-major all-pairs distances; `None` means unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.data[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_finite(&self) -> usize {
        self.data.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Collects edges while silently dropping duplicates; generators use it
/// because their arc families overlap.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    n: usize,
    directed: bool,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder { n: 0, directed, edges: BTreeSet::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        self.edges.insert(key);
    }

    pub fn build(self) -> Graph {
        let edges: Vec<_> = self.edges.into_iter().collect();
        Graph::new(self.n, self.directed, &edges).expect("builder keeps edges simple")
    }
}
