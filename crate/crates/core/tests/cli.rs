use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use zagreb::format::{decode_graph6, parse_edge_list};
use zagreb::{pi1, pi2, Pi2Form};

fn zagreb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn index_of_p4_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p4.edges");
    fs::write(&file, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = zagreb(&["index", "--input", path_str(&file), "--index", "pi2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "16\n");
    let out = zagreb(&[
        "index",
        "--input",
        path_str(&file),
        "--index",
        "pi1",
        "--log",
    ]);
    assert_eq!(stdout(&out), "2.77258872224\n");
}

#[test]
fn knk_as_graph6() {
    let out = zagreb(&["construct", "knk", "--n", "5", "--k", "2", "--format", "g6"]);
    assert!(out.status.success());
    let g = decode_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g.degree_sequence().sorted(), vec![2, 3, 3, 4, 4]);
}

#[test]
fn construct_then_index_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for n in 2..=9usize {
        let mut cases: Vec<Vec<String>> = ["complete", "path", "star"]
            .iter()
            .map(|f| vec![f.to_string(), "--n".into(), n.to_string()])
            .collect();
        for k in 1..n {
            cases.push(vec![
                "knk".into(),
                "--n".into(),
                n.to_string(),
                "--k".into(),
                k.to_string(),
            ]);
            if n >= k + 2 {
                cases.push(vec![
                    "sandwich".into(),
                    "--n".into(),
                    n.to_string(),
                    "--k".into(),
                    k.to_string(),
                    "--j".into(),
                    "1".into(),
                ]);
            }
        }
        for case in cases {
            for format in ["g6", "edges"] {
                let file = dir.path().join(format!("g.{format}"));
                let mut args: Vec<&str> = vec!["construct"];
                args.extend(case.iter().map(String::as_str));
                args.extend(["--format", format, "--output", path_str(&file)]);
                let built = zagreb(&args);
                assert!(built.status.success(), "{case:?}");
                let text = fs::read_to_string(&file).unwrap();
                let g = match format {
                    "g6" => decode_graph6(text.trim()).unwrap(),
                    _ => parse_edge_list(&text).unwrap(),
                };
                assert_eq!(g.order(), n);
                let out = zagreb(&["index", "--input", path_str(&file)]);
                assert!(out.status.success());
                let expected = format!("pi1={} pi2={} ", pi1(&g), pi2(&g, Pi2Form::Edge));
                assert!(stdout(&out).starts_with(&expected), "{case:?} {format}");
            }
        }
    }
}

#[test]
fn enumerate_six() {
    let out = zagreb(&["enumerate", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 112);
    assert!(text
        .lines()
        .all(|l| decode_graph6(l).unwrap().is_connected()));
    let out = zagreb(&["enumerate", "--n", "6", "--jobs", "4"]);
    assert_eq!(stdout(&out), text);
}

#[test]
fn enumeration_guard_and_override() {
    let out = zagreb(&["enumerate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(["enumerate", "--n", "9", "--trees"])
        .env("ZAGREB_MAX_N", "9")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 47);
}

#[test]
fn malformed_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.edges");
    fs::write(&file, "4 3\n0 1\n1 2\n2 x\n").unwrap();
    let out = zagreb(&["index", "--input", path_str(&file)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.edges") && err.contains("line 4"), "{err}");

    fs::write(&file, "3 1\n0 3\n").unwrap();
    let out = zagreb(&["connectivity", "--input", path_str(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    let out = zagreb(&["index", "--input", path_str(&dir.path().join("missing.g6"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn connectivity_of_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("many.g6");
    fs::write(&file, "Bw\nBg\nC~\n").unwrap();
    let out = zagreb(&["connectivity", "--input", path_str(&file)]);
    assert_eq!(stdout(&out), "2 2\n1 1\n3 3\n");
}

#[test]
fn verify_two_theorems() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = zagreb(&[
        "verify",
        "--claims",
        "thm1,thm3",
        "--n-max",
        "7",
        "--report",
        path_str(&report),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let entries = json.as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["status"] != "refuted"));
    assert!(entries
        .iter()
        .all(|e| e["claim_id"] == "thm1" || e["claim_id"] == "thm3"));
    assert!(entries.iter().all(|e| e["elapsed_ms"].is_null()));
}
