//! Browser bindings: solve a pasted graph, report its parameters, or
//! generate a reduction instance. Every export takes and returns plain
//! strings so the page needs no glue beyond `JSON.parse`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use pathpart::checker::verify;
use pathpart::dag_pp::solve_dag_pp;
use pathpart::forge::{self, ThreeDmInstance};
use pathpart::oracle::{self, OracleBudget};
use pathpart::{io, nd, random, vc, CoverMode, Graph, PathKind, PathSystem, Variant};

/// Above this many vertices the page refuses exponential fallbacks.
const ORACLE_MAX: usize = 12;

#[derive(Serialize)]
struct Solved {
    algorithm: &'static str,
    value: usize,
    /// 1-indexed, as in the graph text.
    paths: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    directed: bool,
    n: usize,
}

#[derive(Serialize)]
struct Params {
    n: usize,
    m: usize,
    directed: bool,
    diameter: usize,
    degeneracy: usize,
    bipartite: bool,
    nd: usize,
    vc: usize,
}

#[derive(Serialize)]
struct Generated {
    graph: String,
    labels: Vec<String>,
    k_target: usize,
}

fn parse(text: &str) -> Result<Graph, String> {
    io::parse_graph(text).map_err(|e| e.to_string())
}

fn pick(g: &Graph, variant: Variant) -> Result<(&'static str, PathSystem), String> {
    let partition = variant.mode == CoverMode::Partition;
    if variant.kind == PathKind::Unrestricted && partition && g.is_directed() && g.is_dag() {
        return Ok(("dag-pp", solve_dag_pp(g).map_err(|e| e.to_string())?));
    }
    if variant.kind != PathKind::Unrestricted && nd::neighborhood_diversity(g) <= 6 {
        return Ok(("nd", nd::solve_nd(g, variant).map_err(|e| e.to_string())?));
    }
    if variant.kind == PathKind::Unrestricted && partition && !g.is_directed() && vc::min_vertex_cover(g).len() <= 6 {
        return Ok(("vc", vc::solve_upp_vc(g).map_err(|e| e.to_string())?));
    }
    let budget = OracleBudget { max_vertices: ORACLE_MAX, ..OracleBudget::for_mode(variant.mode) };
    Ok(("oracle", oracle::solve_exact(g, variant, budget).map_err(|e| e.to_string())?))
}

/// Minimum path system as JSON. `kind` is pp/ipp/spp, `mode` is
/// partition/cover/ed-cover.
pub fn solve_text(text: &str, kind: &str, mode: &str) -> Result<String, String> {
    let g = parse(text)?;
    let variant = Variant::new(kind.parse()?, mode.parse()?);
    let (algorithm, sys) = pick(&g, variant)?;
    if !verify(&g, &sys).is_valid() {
        return Err(format!("{algorithm} returned an invalid system"));
    }
    let out = Solved {
        algorithm,
        value: sys.len(),
        paths: sys.paths.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect(),
        edges: g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
        directed: g.is_directed(),
        n: g.n(),
    };
    Ok(serde_json::to_string(&out).expect("plain data"))
}

pub fn params_text(text: &str) -> Result<String, String> {
    let g = parse(text)?;
    let u = g.underlying_undirected();
    let out = Params {
        n: g.n(),
        m: g.m(),
        directed: g.is_directed(),
        diameter: g.diameter(),
        degeneracy: u.degeneracy().0,
        bipartite: u.bipartition().is_ok(),
        nd: nd::neighborhood_diversity(&g),
        vc: vc::min_vertex_cover(&u).len(),
    };
    Ok(serde_json::to_string(&out).expect("plain data"))
}

/// `which` is 3dm (size = p, one triple per x), clique (size = n, k = 2)
/// or 4uipp (size = vertex count of the random base graph).
pub fn generate_text(which: &str, size: usize, seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed);
    let out = match which {
        "3dm" => {
            use rand::Rng;
            let p = size.max(1);
            let triples = (0..p).map(|x| [x, p + rng.gen_range(0..p), 2 * p + rng.gen_range(0..p)]).collect();
            forge::gen_3dm_to_dagspp(&ThreeDmInstance { p, triples }, None)
        }
        "clique" => forge::gen_clique_to_dagspp(&random::gnp(&mut rng, size, 0.5), 2),
        "4uipp" => forge::gen_4uipp_to_uspp(&random::random_bipartite_bounded(&mut rng, size / 2, size - size / 2, 0.5, 3)),
        other => return Err(format!("unknown generator `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    let doc = Generated { graph: io::write_graph(&out.graph), labels: out.labels, k_target: out.k };
    Ok(serde_json::to_string(&doc).expect("plain data"))
}

#[wasm_bindgen]
pub fn solve(text: &str, kind: &str, mode: &str) -> Result<String, JsValue> {
    solve_text(text, kind, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn params(text: &str) -> Result<String, JsValue> {
    params_text(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(which: &str, size: usize, seed: u32) -> Result<String, JsValue> {
    generate_text(which, size, seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_path() {
        let out = solve_text("p undirected 3 2\ne 1 2\ne 2 3\n", "spp", "partition").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 1);
        assert_eq!(v["paths"][0].as_array().unwrap().len(), 3);
    }

    #[test]
    fn reports_bad_input() {
        assert!(solve_text("p undirected 3 2\ne 1 2\n", "pp", "partition").is_err());
        assert!(solve_text("p undirected 1 0\n", "zz", "partition").is_err());
    }

    #[test]
    fn generators_round_trip() {
        for which in ["3dm", "clique", "4uipp"] {
            let out = generate_text(which, 4, 1).unwrap();
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            let g = io::parse_graph(v["graph"].as_str().unwrap()).unwrap();
            assert_eq!(g.n(), v["labels"].as_array().unwrap().len());
        }
        assert!(params_text("p directed 2 1\ne 1 2\n").unwrap().contains("\"diameter\":1"));
    }
}
