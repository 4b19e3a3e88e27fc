use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn domset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domset"))
        .args(args)
        .env_remove("DOMSET_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn ids(v: &Value) -> Vec<u64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_fig5a_with_oracle() {
    let v = json(&domset(&["solve", "fig5a-ring", "--exact"]));
    assert!(ids(&v["greedy_set"]).len() <= 9);
    assert_eq!(ids(&v["purified_set"]).len(), 6);
    assert_eq!(v["gamma"], 6);
    assert_eq!(v["report"]["realized_ratio"], 1.0);
    assert_eq!(v["report"]["parekh_bound"], 9.0);
    assert_eq!(v["labels"].as_array().unwrap().len(), 15);
}

#[test]
fn solve_p5_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.edgelist", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let v = json(&domset(&["solve", &p5]));
    assert_eq!(ids(&v["greedy_set"]), [1, 2, 3]);
    assert_eq!(ids(&v["purified_set"]), [1, 3]);
    assert_eq!(v["tied_pairs"], serde_json::json!([[1, 2], [2, 3]]));
}

#[test]
fn solve_star_is_certified() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(
        dir.path(),
        "star.dimacs",
        "c star\np edge 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n",
    );
    let v = json(&domset(&["solve", &star]));
    assert_eq!(ids(&v["greedy_set"]), [0]);
    assert_eq!(ids(&v["purified_set"]), [0]);
    assert_eq!(v["certificates"][0]["kind"], "size-at-most-two");
}

#[test]
fn strict_and_extended_modes() {
    let dir = tempfile::tempdir().unwrap();
    let spider = write(dir.path(), "spider.txt", "5 4\n0 1\n1 3\n0 2\n2 4\n");
    let strict = json(&domset(&["solve", &spider, "--purify-mode", "strict"]));
    assert_eq!(ids(&strict["purified_set"]), [0, 1, 2]);
    assert_eq!(strict["report"]["within_half"], false);
    let extended = json(&domset(&["solve", &spider]));
    assert_eq!(ids(&extended["purified_set"]), [1, 2]);
    let swept = json(&domset(&[
        "solve",
        &spider,
        "--purify-mode",
        "strict",
        "--ensure-minimal",
    ]));
    assert_eq!(ids(&swept["purified_set"]), [1, 2]);
    assert_eq!(ids(&swept["sweep_removed"]), [0]);
}

#[test]
fn disconnected_input_needs_components_flag() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.txt", "6 4\n0 1\n1 2\n3 4\n4 5\n");
    let out = domset(&["solve", &two]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 components"));
    let v = json(&domset(&["solve", &two, "--components", "--exact"]));
    assert_eq!(ids(&v["purified_set"]), [1, 4]);
    assert_eq!(v["gamma"], 2);
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "4 3\n0 5\n");
    let out = domset(&["solve", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(domset(&["solve", "no-such-fixture"]).status.code(), Some(1));
    assert_eq!(domset(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        domset(&["solve", "fig3-counter", "--purify-mode", "lax"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(domset(&["--help"]).status.code(), Some(0));
}

#[test]
fn exact_reports_unique_witness() {
    let v = json(&domset(&["exact", "fig3-counter"]));
    assert_eq!(v["gamma"], 2);
    assert_eq!(ids(&v["witness"]), [2, 4]);
    let out = domset(&["exact", "fig1-spider", "--limit", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_reports_redundancy() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let v = json(&domset(&["verify", &p5, "--set", "1,2,3"]));
    assert_eq!(v["dominating"], true);
    assert_eq!(v["minimal"], false);
    assert_eq!(ids(&v["redundant"]), [2]);
    let v = json(&domset(&["verify", &p5, "--set", "0"]));
    assert_eq!(v["dominating"], false);
    assert_eq!(ids(&v["undominated"]), [2, 3, 4]);
}

#[test]
fn gen_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5k1.dimacs");
    let out = domset(&[
        "gen",
        "--family",
        "corona",
        "--base",
        "cycle:5",
        "--attach",
        "complete:1",
        "--format",
        "dimacs",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&domset(&["solve", path.to_str().unwrap(), "--exact"]));
    assert_eq!(v["n"], 10);
    assert_eq!(ids(&v["purified_set"]).len(), 5);
    assert_eq!(v["gamma"], 5);
}

#[test]
fn seed_variable_overrides_flag() {
    let gen = |seed_flag: &str, env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_domset"));
        cmd.args([
            "gen", "--family", "random", "--n", "30", "--m", "40", "--seed", seed_flag,
        ]);
        match env {
            Some(s) => cmd.env("DOMSET_SEED", s),
            None => cmd.env_remove("DOMSET_SEED"),
        };
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(gen("1", Some("9")), gen("9", None));
    assert_ne!(gen("1", None), gen("9", None));
    assert_eq!(gen("1", None), gen("1", None));
}

#[test]
fn bench_csv_and_json() {
    let out = domset(&["bench", "--count", "0"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());

    let out = domset(&[
        "bench",
        "--count",
        "6",
        "--n",
        "10..18",
        "--m-factor",
        "1.3",
        "--seed",
        "1",
        "--exact",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("no,n,m,greedy,purified,purification,reduction_pct"));
    assert_eq!(lines.count(), 6);

    let run = || {
        json(&domset(&[
            "bench", "--count", "6", "--n", "10..18", "--seed", "4", "--exact", "--output", "json",
        ]))
    };
    let strip = |v: &Value| -> Vec<Value> {
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                serde_json::json!([
                    r["no"],
                    r["n"],
                    r["m"],
                    r["greedy"],
                    r["purified"],
                    r["gamma"]
                ])
            })
            .collect()
    };
    let (a, b) = (run(), run());
    assert_eq!(strip(&a), strip(&b));
    for row in a["rows"].as_array().unwrap() {
        let greedy = row["greedy"].as_u64().unwrap();
        let purified = row["purified"].as_u64().unwrap();
        assert_eq!(purified + row["purification"].as_u64().unwrap(), greedy);
        let pct = row["reduction_pct"].as_f64().unwrap();
        assert!((pct - 100.0 * (greedy - purified) as f64 / greedy as f64).abs() < 1e-9);
    }
}

#[test]
fn bench_skips_infeasible_instances() {
    let out = domset(&["bench", "--count", "2", "--n", "8", "--m-factor", "0.5"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped instance 1"));
}
