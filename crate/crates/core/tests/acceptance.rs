//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pathpart::checker::{is_induced_path, is_path, is_shortest_path, verify};
use pathpart::dag_pp::solve_dag_pp;
use pathpart::forge::{self, Orientation, ThreeDmInstance};
use pathpart::matching::max_weight_matching;
use pathpart::nd::{self, ClassKind};
use pathpart::oracle::{self, Decision, OracleBudget};
use pathpart::random::{self, rng};
use pathpart::spp_xp::{self, XpOptions};
use pathpart::vc::{self, AuxLeft, AuxRight, Candidate, VcOptions};
use pathpart::{CoverMode, Graph, PathKind, PathSystem, Variant};

type Outcome = Result<String, String>;

fn exact(g: &Graph, variant: Variant) -> PathSystem {
    oracle::solve_exact(g, variant, OracleBudget::unlimited()).expect("unlimited budget")
}

fn small_graph(r: &mut ChaCha8Rng, max_n: usize, directed: bool) -> Graph {
    let n = r.gen_range(1..=max_n);
    let p = r.gen_range(0.15..0.7);
    if directed {
        random::random_dag(r, n, p)
    } else {
        random::gnp(r, n, p)
    }
}

fn example_e() -> Graph {
    // v1..v7 are 0..6, w1..w10 are 7..16
    let (v, w) = (|i: usize| i - 1, |i: usize| i + 6);
    let edges = [
        (v(1), w(1)),
        (v(1), w(2)),
        (v(2), w(3)),
        (v(2), w(4)),
        (v(2), v(3)),
        (v(3), w(5)),
        (v(4), w(6)),
        (v(4), w(7)),
        (v(4), v(6)),
        (v(5), w(8)),
        (v(5), w(9)),
        (v(5), w(10)),
        (v(5), v(6)),
        (v(6), w(2)),
        (v(6), w(9)),
        (v(6), w(10)),
        (v(6), v(7)),
        (v(7), w(10)),
    ];
    Graph::undirected(17, &edges).unwrap()
}

fn worked_example() -> Outcome {
    let g = example_e();
    let cover: Vec<usize> = (0..7).collect();
    let outside: Vec<usize> = (7..17).collect();
    let b = [false, true, false, false, true, true];
    let aux = vc::build_aux_graph(&g, &cover, &b, &outside);
    // 1-indexed labels: (v_i or v'_i, w_j or u_i, weight)
    let w = |j: usize| AuxRight::Outside(j + 6);
    let (c, p, u) = (|i: usize| AuxLeft::Cover(i - 1), |i: usize| AuxLeft::Primed(i - 1), |i: usize| AuxRight::Dummy(i - 1));
    let mut want = vec![
        (c(1), w(1), 1),
        (c(1), w(2), 1),
        (p(1), w(1), 1),
        (p(1), w(2), 1),
        (p(2), w(3), 1),
        (p(2), w(4), 1),
        (c(2), u(2), 1),
        (c(3), w(5), 1),
        (c(4), w(6), 1),
        (c(4), w(7), 1),
        (p(4), w(6), 1),
        (p(4), w(7), 1),
        (c(5), w(9), 2),
        (c(5), w(10), 2),
        (p(5), w(8), 1),
        (p(5), w(9), 1),
        (p(5), w(10), 1),
        (c(5), u(5), 1),
        (c(6), w(10), 2),
        (c(6), u(6), 1),
        (c(7), w(10), 1),
    ];
    want.sort_unstable();
    let got = aux.labelled_edges();
    if got != want {
        return Err(format!("auxiliary graph differs: got {got:?}"));
    }
    let m = max_weight_matching(&aux.graph);
    if m.weight != 12 {
        return Err(format!("matching weight {}", m.weight));
    }
    let sys = vc::solve_upp_vc(&g).map_err(|e| e.to_string())?;
    if sys.len() != 5 || !verify(&g, &sys).is_valid() {
        return Err(format!("solver returned {} paths", sys.len()));
    }
    // the order (7,1,2,6,3,5,4) with no joins: ten weight-1 edges, seven paths
    let pi = [6, 0, 1, 5, 2, 4, 3];
    let zero = [false; 6];
    let aux = vc::build_aux_graph(&g, &pi, &zero, &outside);
    let m = max_weight_matching(&aux.graph);
    let paths = vc::reconstruct_upp(&g, &aux, &m, &pi, &zero).map_err(|e| format!("{e:?}"))?;
    if m.pairs.len() != 10 || m.weight != 10 || paths.len() != 7 {
        return Err(format!("permuted order: {} edges, weight {}, {} paths", m.pairs.len(), m.weight, paths.len()));
    }
    Ok("aux graph matches edge for edge, weight 12, 5 paths; permuted order gives 7".into())
}

fn cross_solver_sweep() -> Outcome {
    let mut r = rng(2024);
    let mut graphs = 0;
    let mut checks = 0usize;
    for i in 0..520 {
        let directed = i % 2 == 1;
        let g = small_graph(&mut r, 8, directed);
        graphs += 1;
        let n = g.n();
        for variant in Variant::all() {
            let opt = exact(&g, variant);
            if !verify(&g, &opt).is_valid() {
                return Err(format!("oracle certificate invalid on {g:?}"));
            }
            let k = opt.len();
            let mut check = |name: &str, sys: PathSystem| -> Result<(), String> {
                checks += 1;
                if sys.len() != k || !verify(&g, &sys).is_valid() {
                    return Err(format!("{name} gave {} (oracle {k}) for {variant:?} on {g:?}", sys.len()));
                }
                Ok(())
            };
            let partition = variant.mode == CoverMode::Partition;
            if partition && variant.kind == PathKind::Unrestricted && directed {
                check("dag-pp", solve_dag_pp(&g).unwrap())?;
            }
            if partition && variant.kind == PathKind::Shortest {
                match spp_xp::solve_spp_xp(&g, k).unwrap() {
                    Decision::Yes(sys) => check("xp", sys)?,
                    Decision::No => return Err(format!("xp said no at the optimum on {g:?}")),
                }
                if k > 1 && spp_xp::solve_spp_xp(&g, k - 1).unwrap().is_yes() {
                    return Err(format!("xp beat the oracle on {g:?}"));
                }
            }
            if variant.kind != PathKind::Unrestricted {
                check("nd", nd::solve_nd(&g, variant).map_err(|e| e.to_string())?)?;
            }
            if partition && variant.kind == PathKind::Unrestricted && !directed {
                check("vc", vc::solve_upp_vc(&g).unwrap())?;
            }
            if partition && !(directed && variant.kind == PathKind::Unrestricted) {
                for kd in 0..=n {
                    checks += 1;
                    let d = vc::solve_dual(&g, kd, variant, VcOptions::default()).map_err(|e| e.to_string())?;
                    let expect = k + kd <= n;
                    match d {
                        Decision::Yes(sys) if expect => {
                            if sys.len() + kd > n || !verify(&g, &sys).is_valid() {
                                return Err(format!("dual witness bad for k_dual {kd} on {g:?}"));
                            }
                        }
                        Decision::No if !expect => {}
                        _ => return Err(format!("dual disagrees for k_dual {kd}, {variant:?} on {g:?}")),
                    }
                }
            }
        }
    }
    Ok(format!("{graphs} graphs, {checks} solver answers, all equal to the oracle"))
}

fn xp_identity() -> Outcome {
    let mut r = rng(77);
    let mut yes = 0;
    let mut compared = 0;
    for i in 0..300 {
        let g = small_graph(&mut r, 8, i % 2 == 1);
        let n = g.n();
        let dist = g.all_pairs_distances();
        for k in 1..=n {
            let filtered = spp_xp::solve_spp_xp(&g, k).unwrap();
            let unfiltered = spp_xp::solve_spp_xp_with(&g, k, XpOptions { threads: 1, distance_filter: false }).unwrap();
            compared += 1;
            if filtered.is_yes() != unfiltered.is_yes() {
                return Err(format!("filter changed the answer for k = {k} on {g:?}"));
            }
            if let Decision::Yes(sys) = filtered {
                yes += 1;
                let total: usize = sys.paths.iter().map(|p| dist.get(p[0], *p.last().unwrap()).unwrap()).sum();
                if total != n - sys.len() {
                    return Err(format!("distance sum {total} != n - k on {g:?}"));
                }
                // the first k with a yes is the optimum, larger k repeat it
                break;
            }
        }
    }
    Ok(format!("{compared} filtered/unfiltered comparisons agree, {yes} certificates satisfy sum d = n - k"))
}

fn longest_induced_edges(g: &Graph) -> usize {
    (0..g.n())
        .flat_map(|s| oracle::enumerate_valid_paths(g, PathKind::Induced, s))
        .map(|p| p.len() - 1)
        .max()
        .unwrap_or(0)
}

fn dnd_related(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |xs: &[usize], skip: usize| xs.iter().copied().filter(|&x| x != skip).collect::<Vec<_>>();
    strip(g.out_neighbors(u), v) == strip(g.out_neighbors(v), u)
        && strip(g.in_neighbors(u), v) == strip(g.in_neighbors(v), u)
        && g.has_edge(u, v) == g.has_edge(v, u)
}

fn random_sequence(r: &mut ChaCha8Rng, g: &Graph) -> Vec<usize> {
    // half random walks, half arbitrary vertex strings
    let len = r.gen_range(1..=g.n());
    let mut seq = vec![r.gen_range(0..g.n())];
    while seq.len() < len {
        let last = *seq.last().unwrap();
        let next = if r.gen_bool(0.5) && !g.out_neighbors(last).is_empty() {
            let nb = g.out_neighbors(last);
            nb[r.gen_range(0..nb.len())]
        } else {
            r.gen_range(0..g.n())
        };
        seq.push(next);
    }
    seq
}

fn property_suite() -> Outcome {
    let mut r = rng(5);
    let mut counts = [0usize; 9];
    while counts[0] < 200 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.2..0.8);
        let g = random::gnp(&mut r, n, p);
        if g.connected_components().len() != 1 {
            continue;
        }
        if g.diameter() > nd::neighborhood_diversity(&g) {
            return Err(format!("diameter above nd on {g:?}"));
        }
        counts[0] += 1;
    }
    for i in 0..400 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.2..0.7);
        let g = if i % 2 == 0 { random::gnp(&mut r, n, p) } else { random::random_digraph(&mut r, n, p) };
        let d = nd::neighborhood_diversity(&g);
        if longest_induced_edges(&g) > d {
            return Err(format!("induced path longer than the type count on {g:?}"));
        }
        counts[1] += 1;
        if !g.is_directed() {
            continue;
        }
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if dnd_related(&g, u, v) && dnd_related(&g, v, w) && !dnd_related(&g, u, w) {
                        return Err(format!("relation not transitive on {g:?}"));
                    }
                }
            }
        }
        counts[2] += 1;
        let cls = nd::dnd_classes(&g).unwrap();
        for (c, kind) in cls.classes.iter().zip(&cls.kinds) {
            let all_arcs = c.iter().all(|&a| c.iter().all(|&b| a == b || g.has_edge(a, b)));
            let no_arcs = c.iter().all(|&a| c.iter().all(|&b| !g.has_edge(a, b)));
            let ok = match kind {
                ClassKind::Clique => all_arcs,
                ClassKind::Independent => no_arcs,
            };
            if !ok {
                return Err(format!("class {c:?} is neither a bidirected clique nor independent"));
            }
        }
        counts[3] += 1;
        if nd::neighborhood_diversity(&g.underlying_undirected()) > d {
            return Err(format!("nd(U(G)) above dnd on {g:?}"));
        }
        counts[4] += 1;
    }
    while counts[5] < 200 {
        let n = r.gen_range(1..=9);
        let p = r.gen_range(0.05..0.4);
        let g = random::random_digraph(&mut r, n, p);
        let vc = vc::min_vertex_cover(&g.underlying_undirected()).len();
        if vc > 3 {
            continue;
        }
        if nd::neighborhood_diversity(&g) > 4usize.pow(vc as u32) + vc {
            return Err(format!("dnd above 4^vc + vc on {g:?}"));
        }
        counts[5] += 1;
    }
    for _ in 0..200 {
        let n = r.gen_range(1..=7);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                arcs.push(if r.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
        let t = Graph::directed(n, &arcs).unwrap();
        if nd::neighborhood_diversity(&t) != n {
            return Err(format!("tournament with dnd below n: {t:?}"));
        }
        counts[6] += 1;
    }
    // verdict implications on undirected graphs and DAGs
    for i in 0..400 {
        let g = small_graph(&mut r, 8, i % 2 == 1);
        let dist = g.all_pairs_distances();
        for _ in 0..20 {
            let s = random_sequence(&mut r, &g);
            let shortest = is_shortest_path(&g, &dist, &s);
            let induced = is_induced_path(&g, &s);
            if (shortest && !induced) || (induced && !is_path(&g, &s)) {
                return Err(format!("path verdicts out of order for {s:?} on {g:?}"));
            }
        }
        for kind in PathKind::ALL {
            let sys = exact(&g, Variant::new(kind, CoverMode::Partition));
            for weaker in PathKind::ALL.iter().filter(|&&k| k <= kind) {
                if !verify(&g, &PathSystem::new(Variant::new(*weaker, CoverMode::Partition), sys.paths.clone())).is_valid() {
                    return Err(format!("{kind:?} system rejected as {weaker:?}"));
                }
            }
            for mode in [CoverMode::EdgeDisjointCover, CoverMode::Cover] {
                if !verify(&g, &PathSystem::new(Variant::new(kind, mode), sys.paths.clone())).is_valid() {
                    return Err(format!("partition rejected as {mode:?}"));
                }
            }
            let ed = exact(&g, Variant::new(kind, CoverMode::EdgeDisjointCover));
            if !verify(&g, &PathSystem::new(Variant::new(kind, CoverMode::Cover), ed.paths)).is_valid() {
                return Err("edge-disjoint cover rejected as cover".into());
            }
        }
        counts[7] += 1;
        counts[8] += 1;
    }
    Ok(format!(
        "diam<=nd {} / induced<=types {} / transitive {} / class shape {} / nd<=dnd {} / dnd<=4^vc+vc {} / tournaments {} / kind implications {} / mode implications {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], counts[6], counts[7], counts[8]
    ))
}

type Projection = (Vec<u32>, Vec<((usize, usize), u32)>);

fn project(g: &Graph, class_of: &[usize], d: usize, path: &[usize]) -> Projection {
    let mut counts = vec![0u32; d];
    for &v in path {
        counts[class_of[v]] += 1;
    }
    let mut edges: HashMap<(usize, usize), u32> = HashMap::new();
    for w in path.windows(2) {
        let (a, b) = (class_of[w[0]], class_of[w[1]]);
        let key = if g.is_directed() { (a, b) } else { (a.min(b), a.max(b)) };
        *edges.entry(key).or_default() += 1;
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    (counts, edges)
}

fn projection_completeness() -> Outcome {
    let mut r = rng(8);
    let mut graphs = 0;
    for i in 0..300 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.15..0.8);
        let g = match i % 3 {
            0 => random::gnp(&mut r, n, p),
            1 => random::random_dag(&mut r, n, p),
            _ => random::random_digraph(&mut r, n, p * 0.6),
        };
        let cls = nd::type_classes(&g);
        for kind in [PathKind::Induced, PathKind::Shortest] {
            let listed: BTreeSet<Projection> = nd::enumerate_path_classes(&g, &cls, kind)
                .unwrap()
                .into_iter()
                .map(|v| (v.counts, v.edges))
                .collect();
            let brute: BTreeSet<Projection> = (0..n)
                .flat_map(|s| oracle::enumerate_valid_paths(&g, kind, s))
                .map(|p| project(&g, &cls.class_of, cls.len(), &p))
                .collect();
            if listed != brute {
                return Err(format!("{kind:?} projections differ on {g:?}"));
            }
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, induced and shortest projections equal"))
}

fn combos(n: usize, q: usize, from: usize) -> Vec<Vec<usize>> {
    if q == 0 {
        return vec![vec![]];
    }
    (from..n)
        .flat_map(|first| {
            combos(n, q - 1, first + 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn claims_hold(out: &forge::ReductionOutput) -> Result<(), String> {
    for c in forge::verify_reduction(out) {
        if !c.holds {
            return Err(format!("claim {} fails: {}", c.name, c.detail));
        }
    }
    Ok(())
}

fn reduction_equivalence() -> Outcome {
    let spp = Variant::new(PathKind::Shortest, CoverMode::Partition);
    let ipp = Variant::new(PathKind::Induced, CoverMode::Partition);
    let budget = OracleBudget::unlimited();
    let mut tallies = [0usize; 3];
    for p in 1..=2usize {
        let mut all = Vec::new();
        for x in 0..p {
            for y in p..2 * p {
                for z in 2 * p..3 * p {
                    all.push([x, y, z]);
                }
            }
        }
        for q in 0..=3 {
            for idx in combos(all.len(), q, 0) {
                let inst = ThreeDmInstance { p, triples: idx.iter().map(|&i| all[i]).collect() };
                let Ok(out) = forge::gen_3dm_to_dagspp(&inst, None) else { continue };
                let rotated = forge::gen_3dm_to_dagspp(&inst, Some(&vec![Orientation::Rotated; q])).unwrap();
                claims_hold(&out)?;
                let want = forge::has_perfect_3dm(&inst);
                for (g, variant) in [(&out.graph, spp), (&out.graph, ipp), (&rotated.graph, spp)] {
                    if oracle::decide(g, variant, out.k, budget).unwrap().is_yes() != want {
                        return Err(format!("3-DM {inst:?} disagrees for {variant:?}"));
                    }
                }
                tallies[0] += 1;
            }
        }
    }
    for n in 2..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0..1u32 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            let g = Graph::undirected(n, &edges).unwrap();
            let out = forge::gen_clique_to_dagspp(&g, 2).unwrap();
            claims_hold(&out)?;
            if oracle::decide(&out.graph, spp, out.k, budget).unwrap().is_yes() != forge::has_clique(&g, 2) {
                return Err(format!("clique instance {edges:?} disagrees"));
            }
            tallies[1] += 1;
        }
    }
    let mut r = rng(31);
    let mut check_p4 = |g: &Graph| -> Result<(), String> {
        let Ok(out) = forge::gen_4uipp_to_uspp(g) else { return Ok(()) };
        claims_hold(&out)?;
        if spp_xp::solve_spp_xp(&out.graph, out.k).unwrap().is_yes() != forge::has_induced_p4_partition(g) {
            return Err(format!("P4 instance {g:?} disagrees"));
        }
        tallies[2] += 1;
        Ok(())
    };
    let pairs4: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    for mask in 0..1u32 << pairs4.len() {
        let edges: Vec<_> = pairs4.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        check_p4(&Graph::undirected(4, &edges).unwrap())?;
    }
    for _ in 0..150 {
        let left = r.gen_range(2..=6);
        let p = r.gen_range(0.3..0.8);
        let g = random::random_bipartite_bounded(&mut r, left, 8 - left, p, 3);
        check_p4(&g)?;
    }
    Ok(format!("3-DM {} instances, clique {} graphs, induced P4 {} graphs", tallies[0], tallies[1], tallies[2]))
}

fn kernel_and_dual() -> Outcome {
    let mut r = rng(13);
    let mut kernels = 0;
    let mut shrunk = 0;
    while kernels < 220 {
        let n = r.gen_range(2..=9);
        // sparse graphs with a small cover leave many twins outside it
        let g = if kernels % 2 == 0 { random::random_low_nd(&mut r, 3, 3, 0.5) } else { random::gnp(&mut r, n, 0.25) };
        if g.n() > 9 {
            continue;
        }
        let k = vc::kernelize_vc(&g, &vc::min_vertex_cover(&g));
        if !k.removed.is_empty() {
            shrunk += 1;
        }
        for kind in PathKind::ALL {
            let variant = Variant::new(kind, CoverMode::Partition);
            let full = exact(&g, variant).len();
            let reduced = exact(&k.graph, variant).len() + k.removed.len();
            if full != reduced {
                return Err(format!("kernel changed the {kind:?} optimum on {g:?}"));
            }
        }
        kernels += 1;
    }
    let mut duals = 0;
    let mut shortcuts = 0;
    for i in 0..400 {
        let g = small_graph(&mut r, 8, i % 2 == 1);
        let n = g.n();
        for kind in PathKind::ALL {
            if g.is_directed() && kind == PathKind::Unrestricted {
                continue;
            }
            let variant = Variant::new(kind, CoverMode::Partition);
            let opt = exact(&g, variant).len();
            let greedy = pathpart::matching::greedy_maximal_matching(&g).len();
            for kd in 0..=n {
                let d = vc::solve_dual(&g, kd, variant, VcOptions::default()).map_err(|e| e.to_string())?;
                if d.is_yes() != (opt + kd <= n) {
                    return Err(format!("dual wrong for k_dual {kd} on {g:?}"));
                }
                if let Decision::Yes(sys) = &d {
                    if !verify(&g, sys).is_valid() {
                        return Err("dual witness invalid".into());
                    }
                    if kd <= greedy && kd < n {
                        shortcuts += 1;
                        if sys.len() != n - kd {
                            return Err(format!("matching witness has {} paths, want {}", sys.len(), n - kd));
                        }
                    }
                }
                duals += 1;
            }
        }
    }
    Ok(format!("{kernels} kernels ({shrunk} shrunk) keep optima; {duals} dual answers, {shortcuts} matching witnesses of size n - k"))
}

fn candidate_law() -> Outcome {
    let mut r = rng(21);
    let mut graphs = 0;
    let mut seen = 0usize;
    while graphs < 60 {
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.2..0.5);
        let g = random::gnp(&mut r, n, p);
        if vc::min_vertex_cover(&g).len() > 5 {
            continue;
        }
        let mut bad = None;
        let mut obs = |c: &Candidate| {
            seen += 1;
            if c.paths.len() as u64 + c.weight != c.n as u64 && bad.is_none() {
                bad = Some(format!("{} paths, weight {}, {} vertices", c.paths.len(), c.weight, c.n));
            }
        };
        vc::solve_upp_vc_with(&g, VcOptions { threads: 1, prune: false }, Some(&mut obs)).unwrap();
        if let Some(b) = bad {
            return Err(b);
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, {seen} candidates obey paths = n - w(M)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("worked vertex-cover example", worked_example),
        ("cross-solver oracle sweep", cross_solver_sweep),
        ("terminal distance identity and filter removal", xp_identity),
        ("combinatorial property suite", property_suite),
        ("path-class projection completeness", projection_completeness),
        ("reduction equivalence and structure", reduction_equivalence),
        ("kernel and dual soundness", kernel_and_dual),
        ("candidate-size law", candidate_law),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
