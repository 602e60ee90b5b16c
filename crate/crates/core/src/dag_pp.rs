//! Minimum path partition of a DAG through bipartite matching: every
//! matched arc joins two paths, so the answer is `n - |M|`.

use thiserror::Error;

use crate::checker::{CoverMode, PathKind, PathSystem, Variant};
use crate::graph::{Graph, GraphError};
use crate::matching::{max_cardinality_matching, BipartiteGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DagPpError {
    #[error("input graph is undirected")]
    NotDirected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn solve_dag_pp(g: &Graph) -> Result<PathSystem, DagPpError> {
    if !g.is_directed() {
        return Err(DagPpError::NotDirected);
    }
    g.topological_order()?;
    let n = g.n();
    let mut bg = BipartiteGraph::new(n, n);
    for (u, v) in g.edges() {
        bg.add_edge(u, v, 1);
    }
    let mut next = vec![None; n];
    let mut has_prev = vec![false; n];
    for (u, v) in max_cardinality_matching(&bg) {
        next[u] = Some(v);
        has_prev[v] = true;
    }
    let mut paths = Vec::new();
    for s in (0..n).filter(|&v| !has_prev[v]) {
        let mut path = vec![s];
        let mut cur = s;
        while let Some(v) = next[cur] {
            path.push(v);
            cur = v;
        }
        paths.push(path);
    }
    Ok(PathSystem::new(Variant::new(PathKind::Unrestricted, CoverMode::Partition), paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify;

    #[test]
    fn chain_is_one_path() {
        let g = Graph::directed(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(solve_dag_pp(&g).unwrap().paths, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn out_star_needs_three_paths() {
        let g = Graph::directed(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sys = solve_dag_pp(&g).unwrap();
        assert_eq!(sys.len(), 3);
        assert!(verify(&g, &sys).is_valid());
    }

    #[test]
    fn rejects_cycles_and_undirected_input() {
        let c = Graph::directed(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(solve_dag_pp(&c), Err(DagPpError::Graph(GraphError::CycleFound)));
        let u = Graph::undirected(2, &[(0, 1)]).unwrap();
        assert_eq!(solve_dag_pp(&u), Err(DagPpError::NotDirected));
    }

    #[test]
    fn empty_graph() {
        assert!(solve_dag_pp(&Graph::empty(0, true)).unwrap().is_empty());
    }
}
