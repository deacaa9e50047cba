use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shallowcc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn result<'a>(report: &'a Value, param: &str) -> &'a Value {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["param"] == param)
        .unwrap_or_else(|| panic!("no {param} result"))
}

#[test]
fn compute_k33_beta_hat() {
    let out = run(&[
        "compute",
        "--construct",
        "complete_bipartite",
        "--params",
        "a=3,b=3",
        "--param",
        "beta_hat,ccw",
        "--t",
        "0",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["schema"], "shallowcc.report/1");
    assert_eq!(report["graph"]["n"], 6);
    let b = result(&report, "beta_hat");
    assert_eq!(b["value"]["text"], "3");
    assert_eq!(b["bound"], "exact");
    assert_eq!(b["t"], 0);
    assert!(b.get("wall_ms").is_none());
}

#[test]
fn compute_reads_edge_list_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k4.txt");
    fs::write(&graph, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let csv = dir.path().join("k4.csv");
    let report = dir.path().join("k4.json");
    let out = run(&[
        "compute",
        "--input",
        graph.to_str().unwrap(),
        "--param",
        "grad",
        "--t",
        "1",
        "--json",
        report.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(result(&report, "grad")["value"]["text"], "3/2");
    assert_eq!(
        fs::read_to_string(csv).unwrap(),
        "graph_id,n,m,param,value_num,value_den,exhaustive,witness_ref\nk4,4,6,grad@1,3,2,true,k4#grad@1\n"
    );
}

#[test]
fn dimacs_input() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p3.col");
    fs::write(&graph, "c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    let out = run(&["compute", "--input", graph.to_str().unwrap(), "--format", "dimacs", "--param", "beta"]);
    assert_eq!(code(&out), 0);
    assert_eq!(result(&json(&out), "beta")["value"]["text"], "2");
}

#[test]
fn validation_errors_exit_2() {
    assert_eq!(code(&run(&["compute", "--input", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&run(&["construct", "path", "--params", "n=150"])), 2);
    assert_eq!(code(&run(&["construct", "no_such_family"])), 2);
    assert_eq!(code(&run(&["compute", "--construct", "path", "--params", "n=4", "--param", "bogus"])), 2);
    assert_eq!(code(&run(&["compute", "--construct", "path", "--params", "n=4", "--t-range", "3..1"])), 2);
}

#[test]
fn capacity_exit_3() {
    let out = run(&["compute", "--construct", "complete", "--params", "n=70", "--param", "beta"]);
    assert_eq!(code(&out), 3);
    let report = json(&out);
    assert_eq!(report["errors"][0]["kind"], "capacity");
    assert!(report["results"].as_array().unwrap().is_empty());
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--construct", "path", "--params", "n=5"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(json(&ok)["summary"]["fail"], 0);
    // K_{1,3}: ccw 1 is below ceil(3/2).
    let bad = run(&["verify", "--construct", "star", "--params", "leaves=3"]);
    assert_eq!(code(&bad), 4);
    let report = json(&bad);
    let failing: Vec<_> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(failing, ["incomparability:ceil(s/2)<=ccw"]);
}

#[test]
fn construct_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("obs2.txt");
    let out = run(&["construct", "obs2", "--params", "n=4,t=2", "--seed", "5", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# vertices 8\n"));
    assert_eq!(text.lines().count(), 8);
    let sidecar: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("obs2.txt.provenance.json")).unwrap()).unwrap();
    assert_eq!(sidecar["family"], "obs2");
    assert_eq!(sidecar["params"]["n"], 4);
    assert_eq!(sidecar["seed"], 5);
    assert_eq!(sidecar["labels"][0], "x1");
    assert_eq!(sidecar["model"]["branch_sets"][0], serde_json::json!([0, 1]));

    let again = run(&["compute", "--input", path.to_str().unwrap(), "--param", "ccw"]);
    assert_eq!(result(&json(&again), "ccw")["value"]["text"], "1");
}

#[test]
fn construct_to_stdout_is_deterministic() {
    let args = ["construct", "chordal", "--params", "n=9", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn reports_are_byte_identical() {
    let args = ["verify", "--corpus", "chordal:5:8", "--t-range", "0..1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let seq = run(&[&args[..], &["--sequential"]].concat());
    let strip = |o: &Output| json(o)["checks"].clone();
    assert_eq!(strip(&a), strip(&seq));
}

#[test]
fn conjecture_harnesses_emit_csv() {
    let dir = tempfile::tempdir().unwrap();
    let c1 = dir.path().join("c1.csv");
    let out = run(&[
        "conjecture1",
        "--corpus",
        "incomparability:4:7",
        "--t",
        "1",
        "--csv",
        c1.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&c1).unwrap();
    assert!(text.starts_with("graph_id,n,seed,s,t,s_t,ratio_num,ratio_den,ratio,exhaustive,note\n"));
    assert_eq!(text.lines().count(), 5);

    let c2 = dir.path().join("c2.csv");
    let out = run(&[
        "conjecture2",
        "--corpus",
        "interval:4:7",
        "--cover",
        "chordal",
        "--csv",
        c2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&c2).unwrap();
    assert!(text.starts_with("graph_id,n,seed,cover,blocks,min_separator,ceil_sqrt_blocks,status,note\n"));
    assert_eq!(run(&["conjecture2", "--cover", "nonsense"]).status.code(), Some(2));
}
