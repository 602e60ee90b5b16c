use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pathpart_cli::ResultDocument;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pathpart"));
    c.env_remove("PATHPART_LIMITS");
    c
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn solve(file: &str, extra: &[&str]) -> ResultDocument {
    let path = fixture(file);
    let mut args = vec!["solve", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert!(out.status.success(), "{file} {extra:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("result json")
}

#[test]
fn p6_is_one_shortest_path() {
    let doc = solve("p6.graph", &["--kind", "spp"]);
    assert_eq!(doc.answer, "optimum");
    assert_eq!(doc.value, Some(1));
    assert_eq!(doc.paths, vec![vec![1, 2, 3, 4, 5, 6]]);
    assert!(doc.verified);
}

#[test]
fn triangle_needs_two_induced_paths() {
    let doc = solve("k3.graph", &["--kind", "ipp", "--algo", "oracle"]);
    assert_eq!(doc.value, Some(2));
    assert_eq!(doc.algorithm, "oracle");
}

#[test]
fn worked_example_via_vc() {
    let doc = solve("example_e.graph", &["--algo", "vc"]);
    assert_eq!(doc.value, Some(5));
    assert_eq!(doc.n, 17);
}

#[test]
fn decisions_and_dual() {
    let yes = solve("c5.graph", &["--kind", "spp", "--k", "2"]);
    assert_eq!((yes.answer.as_str(), yes.k_requested), ("yes", Some(2)));
    assert_eq!(yes.algorithm, "xp");
    let no = solve("c5.graph", &["--kind", "spp", "--k", "1"]);
    assert_eq!(no.answer, "no");
    assert_eq!(no.value, None);
    assert!(no.paths.is_empty());
    let dual = solve("star.graph", &["--algo", "dual", "--k-dual", "1"]);
    assert_eq!(dual.answer, "yes");
    assert_eq!(dual.value, Some(4));
    let dual_no = solve("star.graph", &["--algo", "dual", "--k-dual", "3"]);
    assert_eq!(dual_no.answer, "no");
}

#[test]
fn auto_picks_by_structure() {
    assert_eq!(solve("dag.graph", &[]).algorithm, "dag-pp");
    assert_eq!(solve("k4.graph", &["--kind", "ipp"]).algorithm, "nd");
    assert_eq!(solve("petersen.graph", &[]).algorithm, "vc");
    assert_eq!(solve("cyclic.graph", &["--kind", "spp"]).algorithm, "nd");
    assert_eq!(solve("cyclic.graph", &["--mode", "cover"]).algorithm, "oracle");
}

const ALGOS: [&str; 5] = ["oracle", "dag-pp", "xp", "nd", "vc"];

/// Every algorithm that accepts a fixture agrees with the oracle.
#[test]
fn fixtures_agree_with_oracle() {
    let files = ["p6.graph", "k3.graph", "k4.graph", "c5.graph", "star.graph", "dag.graph", "tournament5.graph", "cyclic.graph", "petersen.graph"];
    for file in files {
        for kind in ["pp", "ipp", "spp"] {
            for mode in ["partition", "cover", "ed-cover"] {
                let base = solve(file, &["--kind", kind, "--mode", mode, "--algo", "oracle"]);
                for algo in ALGOS.iter().skip(1) {
                    let path = fixture(file);
                    let out = run(&["solve", path.to_str().unwrap(), "--kind", kind, "--mode", mode, "--algo", algo]);
                    match out.status.code() {
                        Some(0) => {
                            let doc: ResultDocument = serde_json::from_slice(&out.stdout).unwrap();
                            assert_eq!(doc.value, base.value, "{file} {kind} {mode} {algo}");
                            assert!(doc.verified);
                        }
                        Some(3) => {}
                        other => panic!("{file} {kind} {mode} {algo}: exit {other:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn unsupported_combinations_exit_3() {
    let cyclic = fixture("cyclic.graph");
    let out = run(&["solve", cyclic.to_str().unwrap(), "--kind", "spp", "--algo", "xp", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let k4 = fixture("k4.graph");
    let out = run(&["solve", k4.to_str().unwrap(), "--algo", "dag-pp"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["solve", k4.to_str().unwrap(), "--algo", "vc", "--mode", "cover"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "p undirected 2 1\ne 1 5\n").unwrap();
    let out = run(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["solve", bad.to_str().unwrap(), "--kind", "zigzag"]);
    assert_eq!(out.status.code(), Some(2));
    let k4 = fixture("k4.graph");
    let out = run(&["solve", k4.to_str().unwrap(), "--algo", "dual"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let limits = dir.path().join("limits");
    std::fs::write(&limits, "oracle_max_vertices = 3\n").unwrap();
    let out = bin()
        .args(["solve", fixture("c5.graph").to_str().unwrap(), "--algo", "oracle"])
        .env("PATHPART_LIMITS", &limits)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn limits_file_steers_auto() {
    let dir = tempfile::tempdir().unwrap();
    let limits = dir.path().join("limits");
    std::fs::write(&limits, "nd_max = 0\nxp_max_k = 0\n").unwrap();
    let out = bin()
        .args(["solve", fixture("c5.graph").to_str().unwrap(), "--kind", "spp", "--k", "2"])
        .env("PATHPART_LIMITS", &limits)
        .output()
        .unwrap();
    let doc: ResultDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.algorithm, "oracle");
}

#[test]
fn threads_do_not_change_results() {
    let one = solve("petersen.graph", &["--algo", "vc"]);
    let four = solve("petersen.graph", &["--algo", "vc", "--threads", "4"]);
    assert_eq!(one.paths, four.paths);
    let one = solve("petersen.graph", &["--kind", "spp", "--algo", "xp", "--k", "4"]);
    let four = solve("petersen.graph", &["--kind", "spp", "--algo", "xp", "--k", "4", "--threads", "4"]);
    assert_eq!(one.paths, four.paths);
}

#[test]
fn params_report() {
    let out = run(&["params", fixture("k4.graph").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["nd"], 1);
    assert_eq!(v["vc"], 3);
    assert_eq!(v["degeneracy"], 3);
    assert!(v.get("dnd").is_none());
    let out = run(&["params", fixture("tournament5.graph").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dnd"], 5);
}

fn generate(args: &[&str], dir: &Path) -> (String, PathBuf) {
    let out_file = dir.join("g.graph");
    let mut all = vec!["generate"];
    all.extend_from_slice(args);
    all.extend(["--out", out_file.to_str().unwrap()]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    (String::from_utf8(out.stdout).unwrap(), out_file)
}

#[test]
fn generators_write_graph_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let (stdout, file) = generate(&["clique", "--base", fixture("k3.graph").to_str().unwrap(), "--k", "2"], dir.path());
    assert_eq!(stdout.trim(), "k_target 7");
    let g = pathpart::io::parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert!(g.is_dag());
    let labels = std::fs::read_to_string(dir.path().join("g.graph.labels")).unwrap();
    assert_eq!(labels.lines().count(), g.n());
    assert!(labels.lines().any(|l| l.ends_with("\ts_1,2")));

    let (stdout, file) = generate(&["3dm", "--p", "1", "--q", "1"], dir.path());
    assert_eq!(stdout.trim(), "k_target 4");
    let g = pathpart::io::parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g.n(), 12);

    let p4 = dir.path().join("p4.graph");
    std::fs::write(&p4, "p undirected 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
    let (stdout, file) = generate(&["4uipp", "--base", p4.to_str().unwrap()], dir.path());
    assert_eq!(stdout.trim(), "k_target 3");
    let g = pathpart::io::parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g.n(), 14);
    let out = run(&["params", file.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["diameter"], 4);
    assert_eq!(v["bipartite"], true);
}

#[test]
fn generation_is_seeded() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let (_, fa) = generate(&["clique", "--n", "5", "--k", "3", "--seed", "9"], a.path());
    let (_, fb) = generate(&["clique", "--n", "5", "--k", "3", "--seed", "9"], b.path());
    assert_eq!(std::fs::read(fa).unwrap(), std::fs::read(fb).unwrap());
}

#[test]
fn generator_errors_exit_5() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("g.graph");
    let k3 = fixture("k3.graph");
    let out = run(&["generate", "clique", "--base", k3.to_str().unwrap(), "--k", "5", "--out", out_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["generate", "3dm", "--p", "1", "--q", "2", "--out", out_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["generate", "4uipp", "--base", k3.to_str().unwrap(), "--out", out_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
}

fn verify(graph: &str, solution: &str) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.graph");
    let s = dir.path().join("s.json");
    std::fs::write(&g, graph).unwrap();
    std::fs::write(&s, solution).unwrap();
    run(&["verify", g.to_str().unwrap(), s.to_str().unwrap()])
}

const P3: &str = "p undirected 3 2\ne 1 2\ne 2 3\n";

#[test]
fn verify_exit_codes() {
    let ok = verify(P3, r#"{"kind":"pp","mode":"partition","paths":[[1,2,3]]}"#);
    assert_eq!(ok.status.code(), Some(0));
    let reused = verify(P3, r#"{"kind":"pp","mode":"partition","paths":[[1,2],[2,3]]}"#);
    assert_eq!(reused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&reused.stdout).contains("VERTEX_REUSED"));
    let tri = "p undirected 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    let long = verify(tri, r#"{"kind":"spp","mode":"partition","paths":[[1,2,3]]}"#);
    assert_eq!(long.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&long.stdout).contains("NOT_SHORTEST"));
    let garbage = verify(P3, "{paths: nope}");
    assert_eq!(garbage.status.code(), Some(2));
    let out_of_range = verify(P3, r#"{"kind":"pp","mode":"partition","paths":[[1,9]]}"#);
    assert_eq!(out_of_range.status.code(), Some(2));
}

#[test]
fn solve_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let file = fixture("petersen.graph");
    let out = run(&["solve", file.to_str().unwrap(), "--kind", "ipp", "--mode", "cover"]);
    let sol = dir.path().join("sol.json");
    std::fs::write(&sol, &out.stdout).unwrap();
    let v = run(&["verify", file.to_str().unwrap(), sol.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", String::from_utf8_lossy(&v.stdout));
}

#[test]
fn ilp_dump() {
    let out = run(&["ilp", fixture("k4.graph").to_str().unwrap(), "--kind", "spp"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("min "));
    assert!(lines[1].ends_with("= 4"));
}
