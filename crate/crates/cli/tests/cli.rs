use std::path::Path;
use std::process::Command;

use chordcycle::gadgets::{gen_mycielski, ConnectorModel};
use chordcycle::io::to_json;
use chordcycle::Graph;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    report: Value,
    stdout: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_chordcycle"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run {
        code: out.status.code().unwrap(),
        report,
        stdout,
    }
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, to_json(g, None)).unwrap();
    path.to_str().unwrap().to_string()
}

fn all_checks_pass(report: &Value) -> bool {
    report["verification"] == "pass"
        && report["checks"]
            .as_array()
            .is_some_and(|cs| cs.iter().all(|c| c["predicted"] == c["measured"]))
}

#[test]
fn chords_on_k33_hamilton_cycle() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("k33.col");
    std::fs::write(&path, "c K33\np edge 6 9\ne 1 4\ne 1 5\ne 1 6\ne 2 4\ne 2 5\ne 2 6\ne 3 4\ne 3 5\ne 3 6\n").unwrap();
    let r = run(&["chords", "--graph", path.to_str().unwrap(), "--cycle", "0,3,1,4,2,5"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["outcome"]["chords"], 3);
    assert!(all_checks_pass(&r.report));
}

#[test]
fn chords_on_triangle_and_malformed_cycle() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "k3.json", &Graph::complete(3));
    let r = run(&["chords", "--graph", &g, "--cycle", "0,1,2"]);
    assert_eq!((r.code, r.report["outcome"]["chords"].as_u64()), (0, Some(0)));

    let r = run(&["chords", "--graph", &g, "--cycle", "0,1,1"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["verification"], "fail");
    assert!(r.report["error"].is_string());
}

#[test]
fn find_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k4 = write_graph(&dir, "k4.json", &Graph::complete(4));
    let r = run(&["find", "--graph", &k4, "--k", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["outcome"]["status"], "found");
    assert!(all_checks_pass(&r.report));

    let tree = write_graph(&dir, "tree.json", &Graph::path(6));
    let r = run(&["find", "--graph", &tree, "--k", "0"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["outcome"]["status"], "none_up_to");
}

#[test]
fn spectrum_witnesses_reverify() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "k5.json", &Graph::complete(5));
    let r = run(&["spectrum", "--graph", &g, "--max-len", "5"]);
    assert_eq!(r.code, 0);
    let keys: Vec<&String> = r.report["outcome"]["achievable"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["0", "2", "5"]);
    assert!(all_checks_pass(&r.report));
}

#[test]
fn decompositions() {
    let r = run(&["decompose", "squares20", "--k", "80", "--c", "1"]);
    assert_eq!(r.report["outcome"]["terms"], serde_json::json!(vec![2; 20]));
    let r = run(&["decompose", "pronic80", "--k", "160", "--c", "1"]);
    assert_eq!(r.report["outcome"]["terms"], serde_json::json!(vec![1; 80]));
    let r = run(&["decompose", "squares4", "--k", "7"]);
    assert_eq!(r.report["outcome"]["terms"], serde_json::json!([2, 1, 1, 1]));
    assert!(all_checks_pass(&r.report));

    // 79 = 20 squares of bases >= 2 would need at least 80
    let r = run(&["decompose", "squares20", "--k", "79", "--c", "1"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["outcome"]["status"], "infeasible");
}

#[test]
fn gadgets_reverify() {
    let r = run(&["gadget", "wheel", "7", "7"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["outcome"]["formula_id"], "wheel");
    assert!(all_checks_pass(&r.report));

    let r = run(&["gadget", "mycielski", "4"]);
    assert_eq!(r.report["outcome"]["n"], 11);
    assert_eq!(r.report["outcome"]["chi"], 4);
    assert!(all_checks_pass(&r.report));

    let r = run(&["gadget", "complete-case", "3", "1", "2", "0", "--hub-edges", "0-2"]);
    assert_eq!(r.report["outcome"]["predicted_chords"], 36);
    assert!(all_checks_pass(&r.report));

    let r = run(&["gadget", "chord-table", "1", "1"]);
    assert_eq!(r.code, 1);

    let r = run(&["gadget", "fan", "9", "5"]);
    assert_eq!(r.code, 0);
}

#[test]
fn multi_biclique_with_model_file() {
    let dir = TempDir::new().unwrap();
    let model = ConnectorModel::new(4, 4).complete_to(2, 1, 0);
    let path = dir.path().join("model.json");
    std::fs::write(&path, serde_json::to_string(&model).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    let zero = run(&["gadget", "multi-biclique", "4", "0", "0", "0", "0", "--model", p]);
    let some = run(&["gadget", "multi-biclique", "4", "0", "3", "0", "0", "--model", p]);
    let c0 = zero.report["outcome"]["predicted_chords"].as_u64().unwrap();
    assert_eq!(some.report["outcome"]["measured_chords"].as_u64(), Some(c0 + 12));
    assert!(all_checks_pass(&some.report));
}

#[test]
fn extract_on_grotzsch() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "grotzsch.json", &gen_mycielski(4).unwrap());
    let r = run(&["extract", "--graph", &g, "--p", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["outcome"]["chi"], 4);
    assert_eq!(r.report["outcome"]["steps"].as_array().unwrap().len(), 1);
    assert!(all_checks_pass(&r.report));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["random", "--n", "12", "--prob", "0.3", "--seed", "42", "--connected"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.report["outcome"]["connected"], true);
    let c = run(&["random", "--n", "12", "--prob", "0.3", "--seed", "43", "--connected"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn random_out_feeds_other_commands() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.col");
    let p = path.to_str().unwrap();
    let r = run(&["random", "--n", "8", "--prob", "0.5", "--seed", "7", "--format", "dimacs", "--out", p]);
    assert_eq!(r.code, 0);
    assert!(Path::new(p).exists());
    let s = run(&["spectrum", "--graph", p]);
    assert_eq!(s.code, 0);
    assert!(all_checks_pass(&s.report));
}

#[test]
fn out_writes_report_copy() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let r = run(&["--out", path.to_str().unwrap(), "gadget", "biclique-path", "6", "4"]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, r.stdout);
    assert_eq!(r.report["outcome"]["measured_chords"], 16);
}
