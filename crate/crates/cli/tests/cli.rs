use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lss_core::{cycle_gadget, ones_modulo, Alphabet, Dfa};

fn lss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_dfa(dir: &Path, name: &str, dfa: &Dfa) -> String {
    let path = dir.join(name);
    fs::write(&path, dfa.to_json_pretty()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn witness_pass_and_swap() {
    let out = lss(&["witness", "--m", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("length 5"), "{text}");
    assert!(text.contains("PASS"));

    let out = lss(&["witness", "--m", "5", "--n", "2", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["swapped"], true);
    assert_eq!(doc["m"], 2);
    assert_eq!(doc["expected"], 9);
    assert!(String::from_utf8_lossy(&out.stderr).contains("swapped"));

    let out = lss(&["witness", "--m", "1", "--n", "1", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["computed_lss"], 0);
    assert_eq!(doc["witness_word"], "");
}

#[test]
fn witness_writes_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = lss(&[
        "witness",
        "--m",
        "2",
        "--n",
        "3",
        "--dot",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let gadget = fs::read_to_string(dir.path().join("cycle_gadget_2_3.dot")).unwrap();
    assert!(gadget.contains("\"q_2\" [shape=doublecircle];"));
    assert_eq!(gadget.matches("[label=").count(), 6);
    let pair = fs::read_to_string(dir.path().join("product_2_3.dot")).unwrap();
    assert!(pair.contains("\"(p_0,q_0)\""));
    assert!(dir.path().join("ones_modulo_2.dot").exists());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        lss(&["witness", "--m", "0", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(lss(&["search"]).status.code(), Some(2));
    assert_eq!(lss(&["search", "--sizes", ""]).status.code(), Some(2));
    assert_eq!(lss(&["search", "--sizes", "4,4,5"]).status.code(), Some(2));
    assert_eq!(lss(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(lss(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_tables() {
    let out = lss(&["verify", "--max-n", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 6);
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));

    let out = lss(&["verify", "--max-n", "30", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pairs"], 465);
    assert_eq!(doc["failed"], 0);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 30 * 31 / 2);
}

#[test]
fn search_outputs_are_deterministic() {
    let args = ["search", "--sizes", "2,3", "--format", "structured"];
    let a = lss(&args);
    let b = lss(&[
        "search",
        "--sizes",
        "2,3",
        "--format",
        "structured",
        "--workers",
        "3",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, lss(&args).stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["max_lss"], 5);
    assert_eq!(doc["attained"], true);

    let stamped = lss(&[
        "search",
        "--sizes",
        "2,2",
        "--format",
        "structured",
        "--timestamp",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&stamped.stdout).unwrap();
    assert!(doc["generated_at_unix"].is_u64());
    assert_eq!(doc["max_lss"], 3);
}

#[test]
fn search_two_two_three() {
    let out = lss(&[
        "search",
        "--sizes",
        "2,2,3",
        "--format",
        "structured",
        "--workers",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["target"], 11);
    assert_eq!(doc["attained"], false);
    assert_eq!(doc["max_lss"], 7);
    assert_eq!(doc["witness_tuple"].as_array().unwrap().len(), 3);
}

#[test]
fn lss_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_dfa(dir.path(), "a.json", &ones_modulo(2).unwrap());
    let b = write_dfa(dir.path(), "b.json", &cycle_gadget(2, 3).unwrap());
    let out = lss(&["lss", "--dfa", &a, "--dfa", &b]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "length 5\nwitness 10010\n");

    let empty = Dfa::new(Alphabet::binary(), 1, 0, &[], &[vec![0, 0]]).unwrap();
    let e = write_dfa(dir.path(), "e.json", &empty);
    let out = lss(&["lss", "--dfa", &a, "--dfa", &e]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "empty intersection\n");

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"states":1,"alphabet":["0","1"],"initial":0,"accepting":[0],"delta":[[0,0]],"start":0}"#).unwrap();
    let out = lss(&["lss", "--dfa", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("start"));

    let broken = dir.path().join("broken.json");
    fs::write(
        &broken,
        r#"{"states":1,"alphabet":["0","1"],"initial":0,"accepting":[0],"delta":[[0,1]]}"#,
    )
    .unwrap();
    let out = lss(&["lss", "--dfa", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("delta entry out of range"));

    let unary = Dfa::new(Alphabet::unary(), 1, 0, &[0], &[vec![0]]).unwrap();
    let u = write_dfa(dir.path(), "u.json", &unary);
    let out = lss(&["lss", "--dfa", &a, "--dfa", &u]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alphabet mismatch"));
}

#[test]
fn export_dot_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m2.dot");
    let out = lss(&[
        "export-dot",
        "--family",
        "cycle-gadget",
        "--m",
        "2",
        "--n",
        "3",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let again = stdout(&lss(&[
        "export-dot",
        "--family",
        "cycle-gadget",
        "--m",
        "2",
        "--n",
        "3",
    ]));
    assert_eq!(text, again);

    let a = write_dfa(dir.path(), "a.json", &ones_modulo(2).unwrap());
    let b = write_dfa(dir.path(), "b.json", &cycle_gadget(2, 3).unwrap());
    let single = stdout(&lss(&["export-dot", "--dfa", &a]));
    assert!(single.contains("\"0\" -> \"1\" [label=\"1\"];"));
    let pair = stdout(&lss(&["export-dot", "--dfa", &a, "--dfa", &b]));
    let nodes =
        pair.matches("[shape=circle]").count() + pair.matches("[shape=doublecircle]").count();
    assert!(nodes <= 6, "{pair}");
    assert!(pair.contains("\"(0,0)\""));
}
