use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rexlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rexlab"))
        .args(args)
        .env("REXLAB_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn construct_then_count_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let out = dir.path().join("t6.g6");
    let o = rexlab(&cache, &["construct", r#"{"family":"THEOREM6","n":12,"k":7}"#, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("t6.json")).unwrap()).unwrap();
    let art = &manifest["artifacts"][0];
    assert_eq!(art["triangles"], "40");
    assert_eq!(art["degree"], 5);
    let g6 = std::fs::read_to_string(&out).unwrap();
    assert_eq!(g6.trim(), art["graph6"].as_str().unwrap());

    let o = rexlab(&cache, &["count", "--pattern", "K3", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["copies"], art["triangles"]);
}

#[test]
fn construct_families_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let out = dir.path().join("g.g6");
    let o = rexlab(&cache, &["--json", "construct", "--family", "G_FAMILY", "--k", "10", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arts = m["artifacts"].as_array().unwrap();
    assert_eq!(arts.len(), 2);
    assert!(arts.iter().all(|a| a["triangles"] == "30"));
    let o = rexlab(&cache, &["count", "--pattern", "K3", out.to_str().unwrap()]);
    let counts: Vec<String> = json_lines(&o).iter().map(|r| r["copies"].as_str().unwrap().to_string()).collect();
    assert_eq!(counts, ["30", "30"]);

    let o = rexlab(&cache, &["--json", "construct", r#"{"family":"HIGH_GIRTH_REGULAR","n":10,"r":3,"g":5,"seed":1}"#]);
    assert_eq!(code(&o), 0);
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(m["artifacts"][0]["girth"].as_u64().unwrap() >= 5);
    assert_eq!(m["artifacts"][0]["degree"], 3);
}

#[test]
fn recipe_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let recipe = dir.path().join("r.json");
    std::fs::write(&recipe, r#"{"family":"APEX_WITNESS","params":{"n":16}}"#).unwrap();
    let o = rexlab(&dir.path().join("c.jsonl"), &["--json", "construct", recipe.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(m["artifacts"][0]["triangles"], "6");
}

#[test]
fn count_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let host = dir.path().join("h.g6");
    let cases = [
        ("K3", r#"{"family":"CLIQUE_MINUS_MATCHING","m":6}"#, "8"),
        ("C5", r#"{"family":"HIGH_GIRTH_REGULAR","n":10,"r":3,"g":5,"seed":0}"#, "12"),
        ("P7", r#"{"family":"THEOREM6","n":12,"k":7}"#, "0"),
    ];
    for (pattern, recipe, want) in cases {
        let o = rexlab(&cache, &["construct", recipe, "--out", host.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let o = rexlab(&cache, &["count", "--pattern", pattern, host.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json_lines(&o)[0]["copies"], want, "{pattern} in {recipe}");
    }
    std::fs::write(&host, "# order: 4\n0 1\n1 2\n2 0\n2 3\n").unwrap();
    let o = rexlab(&cache, &["count", "--pattern", "K3", host.to_str().unwrap()]);
    assert_eq!(json_lines(&o)[0]["copies"], "1");
}

#[test]
fn brute_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let args = ["--json", "brute", "--n", "9", "--pattern", "K3", "--forbid", "K4"];
    let first = rexlab(&cache, &args);
    assert_eq!(code(&first), 0);
    let rec: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(rec["best_value"], "27");
    assert_eq!(rec["exhaustive"], true);
    let second = rexlab(&cache, &args);
    assert_eq!(stdout(&first), stdout(&second));
    let mut again = args.to_vec();
    again.push("--no-cache");
    let third = rexlab(&cache, &again);
    assert_eq!(code(&third), 0);
    assert_eq!(stdout(&first), stdout(&third));
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 1);

    let o = rexlab(&cache, &["--json", "brute", "--n", "6", "--pattern", "K3", "--forbid", "P4"]);
    assert_eq!(json_lines(&o)[0]["best_value"], "2");
    let o = rexlab(&cache, &["--json", "cache", "show"]);
    assert_eq!(json_lines(&o).len(), 2);
    assert_eq!(code(&rexlab(&cache, &["cache", "clear"])), 0);
    assert!(!cache.exists());
}

#[test]
fn brute_unique_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let o = rexlab(&dir.path().join("c.jsonl"), &["--json", "brute", "--n", "11", "--pattern", "K3", "--forbid", "P7"]);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["best_value"], "18");
    assert_eq!(rec["certificates"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    // usage
    assert_eq!(code(&rexlab(&cache, &["verify", "no-such-suite"])), 2);
    assert_eq!(code(&rexlab(&cache, &["count", "--pattern", "Q9", "missing.g6"])), 2);
    assert_eq!(code(&rexlab(&cache, &["construct", r#"{"family":"TURAN","n":9}"#])), 2);
    assert_eq!(code(&rexlab(&cache, &["construct", "{not json"])), 2);
    assert_eq!(code(&rexlab(&cache, &["brute", "--n", "40", "--pattern", "K3", "--forbid", "K4"])), 2);
    // infeasible
    assert_eq!(code(&rexlab(&cache, &["construct", "--family", "HIGH_GIRTH_REGULAR", "--n", "9", "--r", "3", "--g", "5"])), 3);
    assert_eq!(code(&rexlab(&cache, &["construct", "--family", "HIGH_GIRTH_REGULAR", "--n", "12", "--r", "3", "--g", "7"])), 3);
    assert_eq!(code(&rexlab(&cache, &["construct", "--family", "APEX_WITNESS", "--n", "12"])), 3);
    assert_eq!(
        code(&rexlab(&cache, &["construct", "--family", "BLOWUP_COVER", "--g", "5", "--param", "h=K3", "--param", "f=K3"])),
        3
    );
    // verification failure: a tampered cache row disagrees with recomputation
    let args = ["--json", "brute", "--n", "6", "--pattern", "K3", "--forbid", "P4"];
    let o = rexlab(&cache, &args);
    let tampered = stdout(&o).replace(r#""best_value":"2""#, r#""best_value":"3""#);
    std::fs::write(&cache, tampered).unwrap();
    let mut again = args.to_vec();
    again.push("--no-cache");
    assert_eq!(code(&rexlab(&cache, &again)), 1);
}

#[test]
fn verify_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let runs: [&[&str]; 8] = [
        &["paths", "--k", "7", "--n-max", "13"],
        &["families", "--k-max", "14"],
        &["dichotomy-blowup", "--n", "4"],
        &["dichotomy-friendship"],
        &["cycle-rich"],
        &["turan-regular", "--n", "9"],
        &["regex-trees"],
        &["c5-stability", "--n-max", "20"],
    ];
    for args in runs {
        let mut full = vec!["--json", "verify"];
        full.extend_from_slice(args);
        let o = rexlab(&cache, &full);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
        let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(rep["totals"]["fail"], 0);
        assert!(rep["totals"]["pass"].as_u64().unwrap() > 0, "{args:?}");
        assert!(rep["rows"].as_array().unwrap().iter().all(|r| r["anchor"].as_str().is_some_and(|a| !a.is_empty())));
    }
    let o = rexlab(&cache, &["verify", "turan-regular", "--n", "9"]);
    assert!(stdout(&o).contains("27, unique"));
}

#[test]
fn budget_is_inconclusive_not_failure() {
    let dir = tempfile::tempdir().unwrap();
    let o = rexlab(&dir.path().join("c.jsonl"), &["--json", "verify", "turan-regular", "--n", "9", "--budget", "3"]);
    assert_eq!(code(&o), 0);
    let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["totals"]["inconclusive"], 1);
    assert_eq!(rep["rows"][0]["status"], "INCONCLUSIVE");
}
