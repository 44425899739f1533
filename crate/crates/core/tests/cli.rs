mod common;

use std::process::{Command, Output};

use deza::families::lattice_in_triangular;
use deza::graph6::from_graph6;

use common::deza_by_counting;

fn deza(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deza")).args(args).output().expect("run deza")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn construct(args: &[&str]) -> String {
    let o = deza(&[&["construct"], args].concat());
    assert!(o.status.success());
    stdout(&o).trim().to_string()
}

fn t7_subset() -> String {
    lattice_in_triangular(7, 3).unwrap().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

const L3_TRANSPOSE: &str = "0,3,6,1,4,7,2,5,8";

#[test]
fn construct_prints_graph6() {
    let t7 = construct(&["triangular", "7"]);
    let g = from_graph6(t7.as_bytes()).unwrap();
    assert_eq!(g.n(), 21);
    assert_eq!(construct(&["lattice", "4"]).len(), 1 + (16 * 15 / 2usize).div_ceil(6));
    assert_eq!(deza(&["construct", "petersen"]).status.code(), Some(2));
    assert_eq!(deza(&["construct", "lattice", "0"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_checks_expectations() {
    let t7 = construct(&["triangular", "7"]);
    let o = deza(&["verify", &t7]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(report["srg"], serde_json::json!([21, 10, 5, 4]));
    assert_eq!(report["spectrum"], "{10^1, 3^6, -2^14}");
    assert_eq!(deza(&["verify", &t7, "--expect", "21,10,5,4"]).status.code(), Some(0));
    assert_eq!(deza(&["verify", &t7, "--expect", "21,10,6,4"]).status.code(), Some(1));
    assert_eq!(deza(&["verify", "not graph6 at all"]).status.code(), Some(2));
}

#[test]
fn switch_outputs_and_exit_codes() {
    let t7 = construct(&["triangular", "7"]);
    let subset = t7_subset();
    let o = deza(&["switch", "gdss1", &t7, "--subset", &subset, "--perm", L3_TRANSPOSE]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let g = from_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!(deza_by_counting(&g), Some((21, 10, 5, 4)));

    let o = deza(&["switch", "gdss1", &t7, "--subset", &subset, "--perm", L3_TRANSPOSE, "--variant", "n2", "--json"]);
    assert!(o.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["construction"], "gdss1");

    // lambda = mu for L2(4)
    let l4 = construct(&["lattice", "4"]);
    let o = deza(&["switch", "dual-seidel", &l4, "--search"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda = mu"));
    // a permutation that is not a Seidel automorphism
    let bad = (0..16).map(|i| ((i + 1) % 16).to_string()).collect::<Vec<_>>().join(",");
    assert_eq!(deza(&["switch", "add-perm", &l4, "--perm", &bad]).status.code(), Some(1));
    // malformed permutation
    assert_eq!(deza(&["switch", "add-perm", &l4, "--perm", "0,0,1"]).status.code(), Some(2));
    let o = deza(&["switch", "add-perm", &l4, "--search"]);
    assert!(o.status.success());
    let g = from_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!(deza_by_counting(&g), Some((16, 7, 4, 2)));
}

#[test]
fn seidel_search_lists_images() {
    let l3 = construct(&["lattice", "3"]);
    let o = deza(&["seidel-search", &l3, "--limit", "10"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().any(|l| l == L3_TRANSPOSE));
    let o = deza(&["seidel-search", &construct(&["lattice", "4"]), "--fpf", "--limit", "3"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn census_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let pipeline = dir.path().join("tasks.jsonl");
    let census = dir.path().join("census.jsonl");
    std::fs::write(
        &pipeline,
        concat!(
            "# T(7) and the lattice chain\n",
            r#"{"family": "triangular", "params": [7], "construction": "gdss1", "subgraph": "lattice:3", "witness": "transpose", "variant": "N1"}"#,
            "\n",
            r#"{"family": "lattice", "params": [6], "construction": "chain-gdss2"}"#,
            "\n",
            r#"{"family": "lattice", "params": [4], "construction": "dual-seidel", "witness": "search"}"#,
            "\n",
        ),
    )
    .unwrap();
    let (p, c) = (pipeline.to_str().unwrap(), census.to_str().unwrap());
    let first = deza(&["census", p, "--out", c]);
    let text = std::fs::read_to_string(&census).unwrap();
    let (records, errors): (Vec<serde_json::Value>, Vec<serde_json::Value>) = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .partition(|r| r.get("graph6").is_some());
    assert_eq!(records.len(), 4, "{text}");
    assert_eq!(errors.len(), 1, "{text}");
    assert!(errors[0]["error"].as_str().unwrap().contains("lambda = mu"));
    assert_eq!(records.iter().filter(|r| r["inputs"]["construction"] == "chain-gdss2").count(), 3);
    for r in &records {
        let g = from_graph6(r["graph6"].as_str().unwrap().as_bytes()).unwrap();
        let t = (r["n"].as_u64().unwrap() as usize, r["k"].as_u64().unwrap() as usize, r["b"].as_u64().unwrap() as usize, r["a"].as_u64().unwrap() as usize);
        assert_eq!(deza_by_counting(&g), Some(t));
    }
    // the failing dual-seidel task makes the run fail
    assert_eq!(first.status.code(), Some(1));

    assert_eq!(deza(&["census", p, "--out", c]).status.code(), Some(1));
    assert_eq!(std::fs::read_to_string(&census).unwrap(), text);
    assert_eq!(deza(&["verify", "--census", c]).status.code(), Some(0));
}

#[test]
fn reproduce_reports_every_scenario() {
    let o = deza(&["reproduce-paper"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(lines.len(), 10, "{out}");
    assert!(out.contains("{10^1, 3^4, 2^3, -2^11, -3^2}"));
    assert!(out.contains("3 pairwise non-isomorphic"));
    let any_fail = lines.iter().any(|l| l.starts_with("FAIL"));
    assert_eq!(o.status.code(), Some(if any_fail { 1 } else { 0 }));
}
