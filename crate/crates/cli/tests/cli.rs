use std::path::PathBuf;
use std::process::{Command, Output};

use cqg_core::io::{parse_witness, WitnessDoc};

fn corpus(path: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus");
    root.join(path).to_string_lossy().into_owned()
}

fn cqg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqg"))
        .args(args)
        .env_remove("CQG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn witness_z2_writes_verified_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let o = cqg(&["witness", &corpus("rings/z2.json"), "g", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("a = g - 1"));
    let text = std::fs::read_to_string(&out).unwrap();
    let doc: WitnessDoc = serde_json::from_str(&text).unwrap();
    assert!(doc.verified);
    assert_eq!(doc.display, "(g - 1) * (g + 1) = 0");
    assert!(parse_witness(&text).unwrap().verify());
}

#[test]
fn connected_s3() {
    let o = cqg(&["connected", &corpus("rings/s3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sgn, std"));
}

#[test]
fn su2_torsion_is_inconclusive() {
    let o = cqg(&["torsion", "--su2", "u1", "--cap", "32"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cqg(&["torsion", "--su2", "u0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = cqg(&["torsion", &corpus("rings/su2.json"), "u1", "--cap", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(cqg(&["validate", &corpus("rings/s4.json")]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("fib_dims.json");
    std::fs::write(
        &bad,
        r#"{"labels":["1","tau"],"unit":0,"dual":[0,1],
            "triples":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,1]],"dims":["1","2"]}"#,
    )
    .unwrap();
    let o = cqg(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("dimension"));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(cqg(&["validate", garbage.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(cqg(&["validate", "/nonexistent/ring.json"]).status.code(), Some(3));
    assert_eq!(cqg(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn domain_decisions_and_seed() {
    let o = cqg(&["domain", &corpus("rings/fibonacci.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("domain: tau"));
    let o = cqg(&["domain", &corpus("rings/ising.json")]);
    assert!(stdout(&o).contains("not a domain"));
    let o = cqg(&["domain", &corpus("rings/s3_group.json")]);
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_cqg"))
        .args(["domain", &corpus("rings/z5.json")])
        .env("CQG_SEED", "7")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("seed 7"));
    let o = Command::new(env!("CARGO_BIN_EXE_cqg"))
        .args(["domain", &corpus("rings/z5.json")])
        .env("CQG_SEED", "seven")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn witness_errors() {
    assert_eq!(cqg(&["witness", &corpus("rings/s3.json"), "triv"]).status.code(), Some(1));
    assert_eq!(cqg(&["witness", &corpus("rings/ising.json"), "sigma"]).status.code(), Some(1));
    assert_eq!(cqg(&["witness", &corpus("rings/s3.json"), "nope"]).status.code(), Some(3));
}

#[test]
fn search_and_multimatrix() {
    let o = cqg(&["search", &corpus("rings/z2.json"), "--support", "2", "--height", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = cqg(&["search", &corpus("rings/fibonacci.json"), "--support", "2", "--height", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(cqg(&["multimatrix", "1", "1"]).status.code(), Some(0));
    assert_eq!(cqg(&["multimatrix", "3"]).status.code(), Some(1));
}

#[test]
fn chartable_ingestion() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ring.json");
    let o = cqg(&["ingest-chartable", &corpus("tables/s3.json"), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("std * std = std + sgn + triv"));
    let ring = cqg_core::io::parse_ring(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(ring.rank(), Some(3));

    let scaled = dir.path().join("scaled.json");
    std::fs::write(
        &scaled,
        r#"{"order":6,"class_sizes":[1,3,2],"labels":["triv","sgn","std"],
            "chars":[[1,1,1],[1,-1,1],[4,0,-2]]}"#,
    )
    .unwrap();
    assert_eq!(cqg(&["ingest-chartable", scaled.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn group_subcommands() {
    let z6 = corpus("groups/z6.json");
    let o = cqg(&["group", &z6, "order", "g"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 6"));
    let z = corpus("groups/z.json");
    assert_eq!(cqg(&["group", &z, "order", "t"]).status.code(), Some(2));
    assert_eq!(cqg(&["group", &z, "kaplansky", "t"]).status.code(), Some(2));
    assert_eq!(cqg(&["group", &z6, "kaplansky", "1"]).status.code(), Some(1));
    let o = cqg(&["group", &corpus("groups/s4.json"), "kaplansky", "v"]);
    assert_eq!(o.status.code(), Some(0));

    let o = cqg(&["group", &z, "balls", "--radius", "4"]);
    assert!(stdout(&o).contains("1 3 5 7 9"));
    let o = cqg(&["group", &z, "balls", "--radius", "4", "--gens", "t"]);
    assert_eq!(o.status.code(), Some(3));
    let o = cqg(&["group", &corpus("groups/f2.json"), "growth", "--radius", "10"]);
    assert!(stdout(&o).contains("exponential suspected"));
    assert_eq!(cqg(&["group", &corpus("groups/heisenberg.json"), "fusion"]).status.code(), Some(1));
    let o = cqg(&["group", &corpus("groups/s3.json"), "fusion"]);
    assert!(stdout(&o).contains("rank 6 (noncommutative)"));
    let o = cqg(&["group", &corpus("groups/z2_lattice.json"), "search", "--window", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tensor_product() {
    let o = cqg(&["tensor", &corpus("rings/ising.json"), "sigma", "sigma"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= eps + 1"));
}
