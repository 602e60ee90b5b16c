//! Seeded random graphs for tests, benchmarks and the CLI generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) on `0..n`.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, &edges).expect("simple by construction")
}

/// Random DAG: arcs only go from lower to higher position of a random
/// permutation.
pub fn random_dag(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    Graph::directed(n, &arcs).expect("simple by construction")
}

/// Random digraph where each ordered pair is an arc with probability `p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::directed(n, &arcs).expect("simple by construction")
}

/// Blows up a random graph on `types` vertices: every type becomes a clique
/// or independent set of random size, so neighborhood diversity stays at
/// most `types`.
pub fn random_low_nd(rng: &mut impl Rng, types: usize, max_size: usize, p: f64) -> Graph {
    let base = gnp(rng, types, p);
    let sizes: Vec<usize> = (0..types).map(|_| rng.gen_range(1..=max_size)).collect();
    let cliques: Vec<bool> = (0..types).map(|_| rng.gen_bool(0.5)).collect();
    let mut start = vec![0; types + 1];
    for t in 0..types {
        start[t + 1] = start[t] + sizes[t];
    }
    let mut edges = Vec::new();
    for t in 0..types {
        if cliques[t] {
            for a in start[t]..start[t + 1] {
                for b in a + 1..start[t + 1] {
                    edges.push((a, b));
                }
            }
        }
        for &s in base.neighbors(t) {
            if s > t {
                for a in start[t]..start[t + 1] {
                    for b in start[s]..start[s + 1] {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Graph::undirected(start[types], &edges).expect("simple by construction")
}

/// Random bipartite graph with maximum degree at most `max_degree`.
pub fn random_bipartite_bounded(rng: &mut impl Rng, left: usize, right: usize, p: f64, max_degree: usize) -> Graph {
    let n = left + right;
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for a in 0..left {
        for b in left..n {
            if deg[a] < max_degree && deg[b] < max_degree && rng.gen_bool(p) {
                deg[a] += 1;
                deg[b] += 1;
                edges.push((a, b));
            }
        }
    }
    Graph::undirected(n, &edges).expect("simple by construction")
}
