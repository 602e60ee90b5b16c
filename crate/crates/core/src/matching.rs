//! Bipartite matchings: Hopcroft–Karp for cardinality, successive shortest
//! paths for weight, and a greedy maximal matching on general graphs.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Bipartite graph with `left` and `right` vertex counts and weighted edges
/// `(l, r, w)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize, u64)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph { left, right, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, l: usize, r: usize, w: u64) {
        assert!(l < self.left && r < self.right, "edge ({l}, {r}) out of range");
        self.edges.push((l, r, w));
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left];
        for &(l, r, _) in &self.edges {
            adj[l].push(r);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

/// Matched `(left, right)` pairs sorted by left vertex.
pub fn max_cardinality_matching(g: &BipartiteGraph) -> Vec<(usize, usize)> {
    const FREE: usize = usize::MAX;
    let adj = g.adjacency();
    let mut mate_l = vec![FREE; g.left];
    let mut mate_r = vec![FREE; g.right];
    let mut layer = vec![0usize; g.left];
    loop {
        let mut queue = VecDeque::new();
        let mut found = false;
        for l in 0..g.left {
            if mate_l[l] == FREE {
                layer[l] = 0;
                queue.push_back(l);
            } else {
                layer[l] = usize::MAX;
            }
        }
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match mate_r[r] {
                    FREE => found = true,
                    m if layer[m] == usize::MAX => {
                        layer[m] = layer[l] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        fn augment(l: usize, adj: &[Vec<usize>], mate_l: &mut [usize], mate_r: &mut [usize], layer: &mut [usize]) -> bool {
            for &r in &adj[l] {
                let m = mate_r[r];
                if m == FREE || (layer[m] == layer[l] + 1 && augment(m, adj, mate_l, mate_r, layer)) {
                    mate_l[l] = r;
                    mate_r[r] = l;
                    return true;
                }
            }
            layer[l] = usize::MAX;
            false
        }
        for l in 0..g.left {
            if mate_l[l] == FREE {
                augment(l, &adj, &mut mate_l, &mut mate_r, &mut layer);
            }
        }
    }
    (0..g.left).filter(|&l| mate_l[l] != FREE).map(|l| (l, mate_l[l])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMatching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: u64,
}

/// Maximum-weight (not maximum-cardinality) matching. Augments along
/// most-profitable paths until no path gains weight; parallel edges keep
/// their heaviest copy.
pub fn max_weight_matching(g: &BipartiteGraph) -> WeightedMatching {
    let (nl, nr) = (g.left, g.right);
    let mut w = vec![vec![None::<i64>; nr]; nl];
    for &(l, r, x) in &g.edges {
        let x = x as i64;
        if w[l][r].is_none_or(|old| old < x) {
            w[l][r] = Some(x);
        }
    }
    let mut mate_l = vec![None::<usize>; nl];
    let mut mate_r = vec![None::<usize>; nr];
    loop {
        // Longest-path Bellman-Ford over the residual graph: from a free left
        // vertex, forward edges gain w, backward (matched) edges lose w.
        let mut gain_l = vec![i64::MIN; nl];
        let mut prev_l = vec![None::<usize>; nl];
        let mut gain_r = vec![i64::MIN; nr];
        let mut prev_r = vec![None::<usize>; nr];
        for l in 0..nl {
            if mate_l[l].is_none() {
                gain_l[l] = 0;
            }
        }
        for _ in 0..=nl + nr {
            let mut changed = false;
            for l in 0..nl {
                if gain_l[l] == i64::MIN {
                    continue;
                }
                for r in 0..nr {
                    if let Some(x) = w[l][r] {
                        if mate_l[l] != Some(r) && gain_l[l] + x > gain_r[r] {
                            gain_r[r] = gain_l[l] + x;
                            prev_r[r] = Some(l);
                            changed = true;
                        }
                    }
                }
            }
            for r in 0..nr {
                if let (Some(l), true) = (mate_r[r], gain_r[r] != i64::MIN) {
                    let x = w[l][r].unwrap();
                    if gain_r[r] - x > gain_l[l] {
                        gain_l[l] = gain_r[r] - x;
                        prev_l[l] = Some(r);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let target = (0..nr)
            .filter(|&r| mate_r[r].is_none() && gain_r[r] > 0)
            .max_by_key(|&r| (gain_r[r], std::cmp::Reverse(r)));
        let Some(mut r) = target else { break };
        loop {
            let l = prev_r[r].unwrap();
            let back = prev_l[l];
            mate_r[r] = Some(l);
            mate_l[l] = Some(r);
            match back {
                Some(r2) => r = r2,
                None => break,
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..nl).filter_map(|l| mate_l[l].map(|r| (l, r))).collect();
    let weight = pairs.iter().map(|&(l, r)| w[l][r].unwrap() as u64).sum();
    WeightedMatching { pairs, weight }
}

/// Scans edges in lexicographic order and keeps every edge whose ends are
/// both free. Direction is ignored.
pub fn greedy_maximal_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut used = vec![false; g.n()];
    let mut out = Vec::new();
    let mut edges: Vec<(usize, usize)> = g.edges();
    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    for (u, v) in edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            out.push((u, v));
        }
    }
    out
}
