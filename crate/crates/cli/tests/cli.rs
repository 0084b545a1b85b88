use std::process::{Command, Output};

use forkalg::algebra::ExportedAlgebra;
use serde_json::Value;

fn forkalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forkalg")).args(args).output().expect("run forkalg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_lists_the_block() {
    let o = forkalg(&["enumerate", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for w in ["^^v", "^v^", "v^^"] {
        assert!(text.contains(w), "{text}");
    }
    assert!(text.ends_with("3 weights, dim A_(3,2) = 28\n"), "{text}");

    let o = forkalg(&["--format", "json", "enumerate", "--n", "8", "--k", "4"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let z = v["weights"].as_array().unwrap().iter().find(|w| w["weight"] == "^^v^vv^v").unwrap();
    assert_eq!(z["b"], serde_json::json!([4, 3, 3, 2, 2, 2, 1, 1]));
    assert_eq!(z["up_distances"], serde_json::json!([0, 0, 1, 3]));
    assert_eq!(z["down_distances"], serde_json::json!([2, 1, 1, 0]));

    let o = forkalg(&["--format", "tsv", "enumerate", "2", "1"]);
    assert!(stdout(&o).starts_with("weight\tdowns\tz_up\tz_down\tb\tdefect\tlength\n"));
}

#[test]
fn mult_multiplies_basis_elements() {
    let x = "(lower=v^^^v eta=^v^^v sigma=2,1,3 upper=v^^v^)";
    let y = "(lower=v^^v^ eta=^v^v^ sigma=1,2,3 upper=v^v^^)";
    let o = forkalg(&["--format", "tsv", "mult", "5", "3", x, y]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\t(lower=v^^^v eta=^v^^v sigma=3,1,2 upper=v^v^^)\n");

    let o = forkalg(&["--format", "json", "mult", "5", "3", y, x]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["product"], serde_json::json!([]));
    assert!(v["note"].is_string());
}

#[test]
fn export_is_deterministic_and_round_trips() {
    let a = forkalg(&["export", "4", "2"]);
    let b = forkalg(&["--jobs", "1", "export", "--n", "4", "--k", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let parsed = ExportedAlgebra::from_json(&text).unwrap();
    assert_eq!(parsed.to_json().unwrap() + "\n", text);

    let dir = std::env::temp_dir().join(format!("forkalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a32.json");
    let o = forkalg(&["--out", path.to_str().unwrap(), "export", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(ExportedAlgebra::from_json(&written).unwrap().basis.len(), 28);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports_and_sets_the_exit_code() {
    let o = forkalg(&["verify", "algebra", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS") && !text.contains("FAIL"), "{text}");

    let o = forkalg(&["--format", "json", "verify", "--suite", "all", "--n", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let suites: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["suite"].as_str().unwrap()).collect();
    for s in ["polyring", "quotient", "hecke", "psi", "algebra", "cellular", "stratified", "duality", "functors"] {
        assert!(suites.contains(&s), "{s} missing");
    }
}

#[test]
fn queries_on_small_blocks() {
    let o = forkalg(&["--format", "json", "center", "4", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["presentation"], v["center"]);

    let o = forkalg(&["--format", "json", "cartan", "3", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m = v["matrix"].as_array().unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x, &m[j][i]);
        }
    }

    let o = forkalg(&["--format", "json", "decomposition", "3", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for (i, row) in v["matrix"].as_array().unwrap().iter().enumerate() {
        assert_eq!(row[i], "1");
    }

    let o = forkalg(&["kl", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(forkalg(&["enumerate", "2", "3"]).status.code(), Some(2));
    assert_eq!(forkalg(&["mult", "3", "1", "nonsense", "(x)"]).status.code(), Some(2));
    assert_eq!(forkalg(&["center", "3", "3"]).status.code(), Some(2));
    assert_eq!(forkalg(&["export", "9", "1"]).status.code(), Some(2));
    assert_eq!(forkalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(forkalg(&["verify"]).status.code(), Some(2));
    let o = forkalg(&["--out", "/nonexistent-dir/x.json", "enumerate", "2", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    let o = Command::new(env!("CARGO_BIN_EXE_forkalg"))
        .args(["export", "5", "2"])
        .env("FORKALG_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
