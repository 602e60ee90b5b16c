//! Induced and shortest path partitions/covers parameterized by
//! neighborhood diversity (directed: dnd).
//!
//! Vertices of one type class are interchangeable: swapping two of them is
//! an automorphism. A valid induced or shortest path meets each class at
//! most once, except that its two endpoints may share a class. So a path is
//! described, up to automorphism, by its class sequence, and one
//! representative tuple decides whether that sequence is realisable.

use std::collections::HashMap;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::checker::{is_valid_path, verify_with, CoverMode, PathKind, PathSystem, Variant};
use crate::graph::{DistanceMatrix, Graph};
use crate::ilp::{for_each_solution, solve_ilp, IlpColumn, IlpInstance, Infeasible};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NdError {
    #[error("the neighborhood-diversity solver handles induced and shortest paths only")]
    UnsupportedKind,
    #[error("expected an undirected graph")]
    ExpectedUndirected,
    #[error("expected a directed graph")]
    ExpectedDirected,
    #[error("integer program is infeasible")]
    Infeasible,
    #[error("could not realise the chosen class vectors as concrete paths")]
    ReconstructionFailed,
}

impl From<Infeasible> for NdError {
    fn from(_: Infeasible) -> Self {
        NdError::Infeasible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Clique,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeClasses {
    /// Members of each class, sorted; classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub kinds: Vec<ClassKind>,
    pub class_of: Vec<usize>,
}

impl TypeClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn same_type_undirected(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

fn same_type_directed(g: &Graph, u: usize, v: usize) -> bool {
    let outs = g.out_neighbors(u).iter().filter(|&&x| x != v).eq(g.out_neighbors(v).iter().filter(|&&x| x != u));
    let ins = g.in_neighbors(u).iter().filter(|&&x| x != v).eq(g.in_neighbors(v).iter().filter(|&&x| x != u));
    outs && ins && g.has_edge(u, v) == g.has_edge(v, u)
}

fn group(g: &Graph, same: impl Fn(&Graph, usize, usize) -> bool) -> TypeClasses {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in 0..g.n() {
        match classes.iter().position(|c| same(g, c[0], v)) {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    let kinds = classes
        .iter()
        .map(|c| if c.len() >= 2 && g.has_edge(c[0], c[1]) { ClassKind::Clique } else { ClassKind::Independent })
        .collect();
    TypeClasses { classes, kinds, class_of }
}

/// Neighborhood-diversity classes: `u ~ v` iff `N(u) \ {v} = N(v) \ {u}`.
pub fn nd_classes(g: &Graph) -> Result<TypeClasses, NdError> {
    if g.is_directed() {
        return Err(NdError::ExpectedUndirected);
    }
    Ok(group(g, same_type_undirected))
}

/// Directed classes: equal in- and out-neighborhoods (ignoring each other)
/// and the arc between them, if any, present in both directions.
pub fn dnd_classes(g: &Graph) -> Result<TypeClasses, NdError> {
    if !g.is_directed() {
        return Err(NdError::ExpectedDirected);
    }
    Ok(group(g, same_type_directed))
}

pub fn type_classes(g: &Graph) -> TypeClasses {
    if g.is_directed() {
        group(g, same_type_directed)
    } else {
        group(g, same_type_undirected)
    }
}

/// One class-level path: its class sequence, how many vertices it takes
/// from each class, and how many edges it uses per class pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPathVector {
    pub sequence: Vec<usize>,
    pub counts: Vec<u32>,
    /// Sorted `((i, j), count)`; unordered pairs `i <= j` when undirected.
    pub edges: Vec<((usize, usize), u32)>,
}

fn pair_key(directed: bool, a: usize, b: usize) -> (usize, usize) {
    if directed {
        (a, b)
    } else {
        (a.min(b), a.max(b))
    }
}

fn vector_of(directed: bool, d: usize, sequence: &[usize]) -> ClassPathVector {
    let mut counts = vec![0u32; d];
    for &c in sequence {
        counts[c] += 1;
    }
    let mut edges: HashMap<(usize, usize), u32> = HashMap::new();
    for w in sequence.windows(2) {
        *edges.entry(pair_key(directed, w[0], w[1])).or_default() += 1;
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    ClassPathVector { sequence: sequence.to_vec(), counts, edges }
}

/// All realisable class sequences for `kind`, one per distinct
/// `(counts, edges)` pair.
pub fn enumerate_path_classes(g: &Graph, cls: &TypeClasses, kind: PathKind) -> Result<Vec<ClassPathVector>, NdError> {
    if kind == PathKind::Unrestricted {
        return Err(NdError::UnsupportedKind);
    }
    let dist = (kind == PathKind::Shortest).then(|| g.all_pairs_distances());
    let d = cls.len();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut seq = Vec::new();
    let mut reps = Vec::new();
    let mut in_seq = vec![false; d];

    #[allow(clippy::too_many_arguments)]
    fn grow(
        g: &Graph,
        cls: &TypeClasses,
        kind: PathKind,
        dist: Option<&DistanceMatrix>,
        seq: &mut Vec<usize>,
        reps: &mut Vec<usize>,
        in_seq: &mut [bool],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        emit(seq);
        for c in 0..cls.len() {
            let repeat = c == seq[0] && seq.len() >= 2;
            if in_seq[c] && !repeat {
                continue;
            }
            if repeat && cls.classes[c].len() < 2 {
                continue;
            }
            let rep = cls.classes[c][usize::from(repeat)];
            reps.push(rep);
            if is_valid_path(g, kind, dist, reps) {
                seq.push(c);
                if repeat {
                    emit(seq);
                } else {
                    in_seq[c] = true;
                    grow(g, cls, kind, dist, seq, reps, in_seq, emit);
                    in_seq[c] = false;
                }
                seq.pop();
            }
            reps.pop();
        }
        // (Ci, Ci): two members of one clique class
        if seq.len() == 1 {
            let c = seq[0];
            if cls.classes[c].len() >= 2 {
                reps.push(cls.classes[c][1]);
                if is_valid_path(g, kind, dist, reps) {
                    seq.push(c);
                    emit(seq);
                    seq.pop();
                }
                reps.pop();
            }
        }
    }

    let mut emit = |s: &[usize]| {
        let v = vector_of(g.is_directed(), d, s);
        if seen.insert((v.counts.clone(), v.edges.clone())) {
            out.push(v);
        }
    };
    for c in 0..d {
        seq.push(c);
        reps.push(cls.classes[c][0]);
        in_seq[c] = true;
        grow(g, cls, kind, dist.as_ref(), &mut seq, &mut reps, &mut in_seq, &mut emit);
        in_seq[c] = false;
        reps.pop();
        seq.pop();
    }
    Ok(out)
}

/// Number of edges of `g` between classes `i` and `j` (inside the class
/// when `i == j`), as ordered pairs for digraphs.
fn edges_between(g: &Graph, cls: &TypeClasses, i: usize, j: usize) -> u32 {
    let (a, b) = (cls.classes[i].len() as u32, cls.classes[j].len() as u32);
    if i == j {
        if cls.kinds[i] != ClassKind::Clique {
            return 0;
        }
        return if g.is_directed() { a * (a - 1) } else { a * (a - 1) / 2 };
    }
    if g.has_edge(cls.classes[i][0], cls.classes[j][0]) {
        a * b
    } else {
        0
    }
}

pub fn build_ilp(g: &Graph, cls: &TypeClasses, vectors: &[ClassPathVector], mode: CoverMode) -> IlpInstance {
    let ed = mode == CoverMode::EdgeDisjointCover;
    let mut edge_rows: Vec<(usize, usize)> = Vec::new();
    if ed {
        let mut rows: Vec<(usize, usize)> = vectors.iter().flat_map(|v| v.edges.iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        edge_rows = rows;
    }
    let mut seen = std::collections::HashSet::new();
    let mut columns = Vec::new();
    for v in vectors {
        let edges: Vec<u32> = edge_rows
            .iter()
            .map(|row| v.edges.iter().find(|e| e.0 == *row).map_or(0, |e| e.1))
            .collect();
        if seen.insert((v.counts.clone(), edges.clone())) {
            columns.push(IlpColumn { counts: v.counts.clone(), edges });
        }
    }
    IlpInstance {
        mode,
        class_sizes: cls.classes.iter().map(|c| c.len() as u32).collect(),
        edge_capacity: edge_rows.iter().map(|&(i, j)| edges_between(g, cls, i, j)).collect(),
        edge_rows,
        columns,
    }
}

/// Sequence chosen for each column: the first vector with matching data.
fn column_sequences(ilp: &IlpInstance, vectors: &[ClassPathVector]) -> Vec<Vec<usize>> {
    ilp.columns
        .iter()
        .map(|col| {
            vectors
                .iter()
                .find(|v| {
                    v.counts == col.counts
                        && ilp.edge_rows.iter().zip(&col.edges).all(|(row, &t)| v.edges.iter().find(|e| e.0 == *row).map_or(0, |e| e.1) == t)
                })
                .expect("every column comes from a vector")
                .sequence
                .clone()
        })
        .collect()
}

fn expand(sequences: &[Vec<usize>], z: &[u32]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (seq, &x) in sequences.iter().zip(z) {
        for _ in 0..x {
            out.push(seq.clone());
        }
    }
    out
}

/// Round-robin assignment of class members to positions: unused members
/// first for partitions, cycling through each class for covers.
fn round_robin(cls: &TypeClasses, paths: &[Vec<usize>], mode: CoverMode) -> Option<Vec<Vec<usize>>> {
    let mut next = vec![0usize; cls.len()];
    let mut out = Vec::new();
    for seq in paths {
        let mut p = Vec::with_capacity(seq.len());
        for &c in seq {
            let members = &cls.classes[c];
            let idx = next[c];
            if mode == CoverMode::Partition && idx >= members.len() {
                return None;
            }
            p.push(members[idx % members.len()]);
            next[c] = idx + 1;
        }
        out.push(p);
    }
    Some(out)
}

/// Backtracking assignment for edge-disjoint covers.
fn exhaustive_ed(g: &Graph, cls: &TypeClasses, paths: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let positions: Vec<(usize, usize)> = paths.iter().enumerate().flat_map(|(i, p)| (0..p.len()).map(move |j| (i, j))).collect();
    let mut slots_left = vec![0usize; cls.len()];
    for p in paths {
        for &c in p {
            slots_left[c] += 1;
        }
    }
    struct St<'a> {
        g: &'a Graph,
        cls: &'a TypeClasses,
        paths: &'a [Vec<usize>],
        positions: Vec<(usize, usize)>,
        slots_left: Vec<usize>,
        uncovered: Vec<usize>,
        cover: Vec<u32>,
        used: std::collections::HashSet<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }
    fn rec(st: &mut St, k: usize) -> bool {
        if k == st.positions.len() {
            return st.uncovered.iter().all(|&u| u == 0);
        }
        let (i, j) = st.positions[k];
        let c = st.paths[i][j];
        for m in st.cls.classes[c].clone() {
            if st.out[i].contains(&m) {
                continue;
            }
            let edge = (j > 0).then(|| pair_key(st.g.is_directed(), st.out[i][j - 1], m));
            if edge.is_some_and(|e| st.used.contains(&e)) {
                continue;
            }
            st.slots_left[c] -= 1;
            st.cover[m] += 1;
            if st.cover[m] == 1 {
                st.uncovered[c] -= 1;
            }
            if st.slots_left[c] >= st.uncovered[c] {
                if let Some(e) = edge {
                    st.used.insert(e);
                }
                st.out[i].push(m);
                if rec(st, k + 1) {
                    return true;
                }
                st.out[i].pop();
                if let Some(e) = edge {
                    st.used.remove(&e);
                }
            }
            if st.cover[m] == 1 {
                st.uncovered[c] += 1;
            }
            st.cover[m] -= 1;
            st.slots_left[c] += 1;
        }
        false
    }
    let mut st = St {
        g,
        cls,
        paths,
        positions,
        slots_left,
        uncovered: cls.classes.iter().map(Vec::len).collect(),
        cover: vec![0; g.n()],
        used: std::collections::HashSet::new(),
        out: vec![Vec::new(); paths.len()],
    };
    rec(&mut st, 0).then_some(st.out)
}

/// Turns an ILP assignment into concrete paths and checks the result.
pub fn reconstruct(g: &Graph, cls: &TypeClasses, sequences: &[Vec<usize>], z: &[u32], variant: Variant) -> Result<PathSystem, NdError> {
    let paths = expand(sequences, z);
    let dist = g.all_pairs_distances();
    let ok = |p: &Vec<Vec<usize>>| verify_with(g, &dist, &PathSystem::new(variant, p.clone())).is_valid();
    if let Some(p) = round_robin(cls, &paths, variant.mode).filter(ok) {
        return Ok(PathSystem::new(variant, p));
    }
    if variant.mode == CoverMode::EdgeDisjointCover {
        if let Some(p) = exhaustive_ed(g, cls, &paths).filter(ok) {
            return Ok(PathSystem::new(variant, p));
        }
    }
    Err(NdError::ReconstructionFailed)
}

/// Artifacts of one component solve, exposed for inspection and the CLI.
#[derive(Debug, Clone)]
pub struct NdModel {
    pub classes: TypeClasses,
    pub vectors: Vec<ClassPathVector>,
    pub ilp: IlpInstance,
}

pub fn build_model(g: &Graph, variant: Variant) -> Result<NdModel, NdError> {
    let classes = type_classes(g);
    let vectors = enumerate_path_classes(g, &classes, variant.kind)?;
    let ilp = build_ilp(g, &classes, &vectors, variant.mode);
    Ok(NdModel { classes, vectors, ilp })
}

fn solve_component(g: &Graph, variant: Variant) -> Result<PathSystem, NdError> {
    let model = build_model(g, variant)?;
    let sequences = column_sequences(&model.ilp, &model.vectors);
    let z = solve_ilp(&model.ilp)?;
    if variant.mode != CoverMode::EdgeDisjointCover {
        return reconstruct(g, &model.classes, &sequences, &z, variant);
    }
    // Edge budgets per class pair are necessary but not always sufficient,
    // so walk objective values upward until some assignment is realisable.
    for total in IlpInstance::objective(&z)..=g.n() as u32 {
        let mut found = None;
        let _ = for_each_solution(&model.ilp, total, |zz| match reconstruct(g, &model.classes, &sequences, zz, variant) {
            Ok(sys) => {
                found = Some(sys);
                ControlFlow::Break(())
            }
            Err(_) => ControlFlow::Continue(()),
        });
        if let Some(sys) = found {
            return Ok(sys);
        }
    }
    Err(NdError::ReconstructionFailed)
}

/// Minimum induced/shortest path partition or cover, solved per connected
/// component through the class-vector ILP.
pub fn solve_nd(g: &Graph, variant: Variant) -> Result<PathSystem, NdError> {
    if variant.kind == PathKind::Unrestricted {
        return Err(NdError::UnsupportedKind);
    }
    let mut paths = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        let sys = solve_component(&sub, variant)?;
        paths.extend(sys.paths.into_iter().map(|p| p.into_iter().map(|x| comp[x]).collect::<Vec<_>>()));
    }
    Ok(PathSystem::new(variant, paths))
}

/// Number of type classes (nd for undirected graphs, dnd for digraphs).
pub fn neighborhood_diversity(g: &Graph) -> usize {
    type_classes(g).len()
}
