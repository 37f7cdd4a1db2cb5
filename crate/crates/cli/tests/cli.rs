use std::io::Write;
use std::process::{Command, Output, Stdio};

use pernull_core::{to_graph6, Graph};
use serde_json::Value;

fn pernull(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pernull"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn jsonl(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap()
}

#[test]
fn nullity_from_stdin() {
    let o = pernull(&["nullity"], "Bw\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("eta=0"), "{}", stdout(&o));
}

#[test]
fn nullity_examples_as_jsonl() {
    let o = pernull(
        &["--format", "jsonl", "nullity", "--oracle", "A_", "B?", "Bw"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let records = jsonl(&o);
    let eta: Vec<u64> = records
        .iter()
        .map(|r| r["eta_structural"].as_u64().unwrap())
        .collect();
    assert_eq!(eta, vec![0, 3, 0]);
    assert!(records
        .iter()
        .all(|r| r["eta_oracle"] == r["eta_structural"]));
    assert_eq!(records[0]["case_fired"][0], "PERFECT_MATCHING");
    assert_eq!(records[2]["case_fired"][0], "GENERAL");
    let keys: Vec<&str> = records[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert!(keys.contains(&"components") && keys.contains(&"m_stat"));
}

#[test]
fn oracle_field_only_on_request() {
    let o = pernull(&["--format", "jsonl", "nullity", "Bw"], "");
    assert!(jsonl(&o)[0].get("eta_oracle").is_none());
}

#[test]
fn decompose_examples() {
    let run = |g: &Graph| {
        let o = pernull(&["--format", "jsonl", "decompose", &g6(g)], "");
        assert_eq!(o.status.code(), Some(0));
        jsonl(&o).remove(0)
    };
    let p3 = run(&Graph::path(3));
    assert_eq!(p3["d"], serde_json::json!([0, 2]));
    assert_eq!(p3["b"], serde_json::json!([1]));
    assert_eq!(p3["c"], serde_json::json!([]));

    let c4 = run(&Graph::cycle(4));
    assert_eq!(c4["d"], serde_json::json!([]));
    assert_eq!(c4["c"], serde_json::json!([0, 1, 2, 3]));

    let c5 = run(&Graph::cycle(5));
    assert_eq!(c5["d"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(c5["factor_critical"].as_array().unwrap().len(), 1);
    assert_eq!(c5["nu"], c5["nu_from_partition"]);
}

#[test]
fn polynomial_examples() {
    let o = pernull(&["polynomial", "Bw", "A_", "A?"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 0 3 -2\n1 0 1\n1 0 0\n");
    for method in ["sachs", "interp", "both"] {
        let o = pernull(&["polynomial", "--method", method, "Bw"], "");
        assert_eq!(stdout(&o), "1 0 3 -2\n");
    }
    let o = pernull(&["--format", "json", "polynomial", "Bw"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v[0]["coefficients"],
        serde_json::json!(["1", "0", "3", "-2"])
    );
}

#[test]
fn edge_list_input() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("p3.edges");
    std::fs::write(&path, "# a path\n3\n0 1\n1 2\n").unwrap();
    let o = pernull(
        &[
            "--format",
            "jsonl",
            "nullity",
            "--edges",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(jsonl(&o)[0]["eta_structural"], 1);

    std::fs::write(&path, "3\n0 1\n1 7\n").unwrap();
    let o = pernull(&["nullity", "--edges", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn verify_examples() {
    let o = pernull(
        &[
            "verify",
            "--all-labeled",
            "5",
            "--checks",
            "oracle_equivalence",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = pernull(
        &[
            "verify",
            "--unicyclic",
            "1000",
            "--n",
            "12",
            "--seed",
            "7",
            "--checks",
            "unicyclic_sandwich,unicyclic_thm",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("unicyclic_thm"));
}

#[test]
fn verify_json_is_reproducible() {
    let args = [
        "--format",
        "json",
        "verify",
        "--gnp",
        "300",
        "--n-min",
        "2",
        "--n-max",
        "9",
        "--seed",
        "11",
        "--checks",
        "oracle_equivalence,m_statistic_oracle",
    ];
    let a = pernull(&args, "");
    let b = pernull(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["graphs"], 300);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(
        pernull(&["verify", "--checks", "no_such_check"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pernull(&["nullity", "--no-such-flag"], "").status.code(),
        Some(2)
    );
    assert_eq!(pernull(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        pernull(&["nullity", "Bw", "--edges", "x.edges"], "")
            .status
            .code(),
        Some(2)
    );
    let o = pernull(&["nullity"], "Bw\nB~\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn scale_guard_exits_3() {
    let big = g6(&Graph::empty(15));
    let o = pernull(&["polynomial", "--method", "interp", &big], "");
    assert_eq!(o.status.code(), Some(3));
    let o = pernull(
        &[
            "--unsafe-override-guards",
            "polynomial",
            "--method",
            "interp",
            &big,
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().count(), 16);
    let o = pernull(
        &["verify", "--all-labeled", "8", "--checks", "ge_soundness"],
        "",
    );
    assert_eq!(o.status.code(), Some(3));
}
