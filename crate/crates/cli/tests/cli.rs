use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(args)
        .env_remove("EDGEIDEAL_FIELD")
        .env_remove("EDGEIDEAL_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn invariants_of_k4() {
    let o = run(&["--format", "json", "invariants", "--graph6", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["reg"].as_u64(), v["alpha"].as_u64(), v["degH"].as_u64()), (Some(1), Some(1), Some(1)));
    assert_eq!(v["hPoly"], "1 + 3*t");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["n", "edges", "alpha", "alphaPrime", "cover", "dim", "hPoly", "degH", "reg", "projDim", "depth", "field", "boundsOk"] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn invariants_from_an_edge_list() {
    let ribbon = temp_file("5\n0 1\n0 2\n0 3\n0 4\n1 2\n3 4\n");
    let o = run(&["--format", "json", "invariants", "--edges", ribbon.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["reg"].as_u64(), v["hPoly"].as_str()), (Some(2), Some("1 + 3*t")));
    let single = run(&["--format", "json", "invariants", "--graph6", "@"]);
    let v = json(&single);
    assert_eq!((v["reg"].as_u64(), v["hPoly"].as_str()), (Some(0), Some("1")));
}

#[test]
fn invariants_errors() {
    assert_eq!(run(&["invariants", "--graph6", "!!"]).status.code(), Some(2));
    let bad = temp_file("3\n0 5\n");
    assert_eq!(run(&["invariants", "--edges", bad.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["invariants"]).status.code(), Some(2));
    // 13 vertices is above the default cap.
    let o = run(&["invariants", "--graph6", "L?????????????"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--cap"));
    assert_eq!(run(&["--cap", "13", "invariants", "--graph6", "L?????????????"]).status.code(), Some(0));
    assert_eq!(run(&["--cap", "63", "invariants", "--graph6", "@"]).status.code(), Some(2));
}

#[test]
fn fields_and_environment() {
    let q = run(&["--field", "q", "--format", "json", "invariants", "--graph6", "Cl"]);
    assert_eq!(json(&q)["field"], "Q");
    let env = Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(["--format", "json", "invariants", "--graph6", "Cl"])
        .env("EDGEIDEAL_FIELD", "3")
        .env("EDGEIDEAL_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(json(&env)["field"], "GF(3)");
    assert_eq!(run(&["--field", "4", "invariants", "--graph6", "Cl"]).status.code(), Some(2));
    assert_eq!(run(&["--workers", "0", "invariants", "--graph6", "Cl"]).status.code(), Some(2));
}

#[test]
fn construct_checks() {
    assert_eq!(run(&["construct", "--family", "realize", "-r", "4", "-d", "2", "--check"]).status.code(), Some(0));
    assert_eq!(run(&["construct", "--family", "kdd", "-d", "3", "--check"]).status.code(), Some(0));
    assert_eq!(run(&["construct", "--family", "gr", "-r", "2"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--family", "kdd"]).status.code(), Some(2));
    let ribbon = run(&["construct", "--family", "ribbon"]);
    assert_eq!(stdout(&ribbon).trim(), "D{c");
    let edges = run(&["construct", "--family", "matching", "-m", "2", "--output", "edges"]);
    assert_eq!(stdout(&edges), "4\n0 1\n2 3\n");
    let g3 = run(&["--format", "json", "construct", "--family", "gr", "-r", "3", "--check"]);
    let v = json(&g3);
    assert_eq!((v["n"].as_u64(), v["check"]["passed"].as_bool()), (Some(10), Some(true)));
}

#[test]
fn construct_cone() {
    // Two disjoint edges coned over all four vertices: the ribbon.
    let o = run(&["--format", "json", "construct", "--family", "cone", "--base", "C`", "--subset", "0,1,2,3", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["check"]["series"], "(1 + 3*t)/(1 - t)^2");
    assert_eq!(v["check"]["applicable"], true);
    let short = run(&["construct", "--family", "cone", "--base", "C`", "--subset", "0,1,2", "--check"]);
    assert_eq!(short.status.code(), Some(1));
    assert_eq!(run(&["construct", "--family", "cone", "--base", "C`"]).status.code(), Some(2));
}

#[test]
fn enumerate_small() {
    let o = run(&["enumerate", "--n", "4", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("r\td\tcount\twitness_graph6"));
    let total: u64 = lines.map(|l| l.split('\t').nth(2).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 11);
    let json_out = run(&["--format", "json", "enumerate", "--n", "5", "--quiet"]);
    assert_eq!(json(&json_out)["totalGraphs"], 34);
    assert_eq!(run(&["enumerate", "--n", "5", "--quiet", "--expect-absent", "3,1"]).status.code(), Some(0));
    assert_eq!(run(&["enumerate", "--n", "5", "--quiet", "--expect-absent", "1,1"]).status.code(), Some(1));
    assert_eq!(run(&["enumerate", "--n", "11"]).status.code(), Some(3));
    assert_eq!(run(&["enumerate", "--n", "4", "--expect-absent", "x"]).status.code(), Some(2));
}

#[test]
fn enumerate_is_stable_across_workers() {
    let one = run(&["--workers", "1", "--format", "json", "enumerate", "--n", "6", "--quiet"]);
    let four = run(&["--workers", "4", "--format", "json", "enumerate", "--n", "6", "--quiet"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn enumerate_and_verify_a_corpus() {
    let corpus = temp_file(">>graph6<<C~\nA_\n\nD{c\n");
    let path = corpus.path().to_str().unwrap();
    let o = run(&["--format", "json", "enumerate", "--input", path]);
    assert_eq!(json(&o)["totalGraphs"], 3);
    let v = run(&["--format", "json", "verify", "--input", path, "--checks", "sum-bound"]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(json(&v)["checks"]["sum-bound"]["passed"], 3);
    let all = run(&["verify", "--input", path]);
    assert_eq!(all.status.code(), Some(0));
    let empty = temp_file("");
    assert_eq!(run(&["verify", "--input", empty.path().to_str().unwrap()]).status.code(), Some(0));
    let broken = temp_file("C~\n??x\n");
    let b = run(&["verify", "--input", broken.path().to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&b.stderr).contains("line 2"));
    assert_eq!(run(&["verify", "--input", path, "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn seeded_samples_repeat() {
    let a = run(&["sample", "--n", "7", "--count", "5", "--seed", "9"]);
    let b = run(&["sample", "--n", "7", "--count", "5", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 5);
    assert_ne!(a.stdout, run(&["sample", "--n", "7", "--count", "5", "--seed", "10"]).stdout);
}
