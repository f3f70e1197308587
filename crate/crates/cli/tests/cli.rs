use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qutrit-synth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    let p: PathBuf = dir.join(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn zeta_round_trip_and_embedding() {
    let dir = tempfile::tempdir().unwrap();
    let (m, c, e) = (path(dir.path(), "m.json"), path(dir.path(), "c.json"), path(dir.path(), "e.json"));
    assert!(run(&["random", "--ring", "zeta", "--wires", "1", "--length", "12", "--seed", "4", "--out", &m])
        .status
        .success());
    let out = run(&["synth", "--ring", "zeta", "--in", &m, "--out", &c]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["ring"], "zeta");
    assert_eq!(report["ancillas_used"], 1);
    assert!(run(&["verify", "--circuit", &c, "--matrix", &m, "--catalytic"]).status.success());
    assert!(run(&["embed", "--in", &m, "--out", &e]).status.success());
    assert!(run(&["verify", "--circuit", &c, "--matrix", &e]).status.success());
    // the zeta matrix itself is not the circuit's matrix
    assert_eq!(run(&["verify", "--circuit", &c, "--matrix", &m]).status.code(), Some(1));
}

#[test]
fn stats_lists_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (m, c) = (path(dir.path(), "m.json"), path(dir.path(), "c.json"));
    run(&["random", "--ring", "omega", "--wires", "2", "--length", "10", "--out", &m]);
    run(&["synth", "--ring", "omega", "--in", &m, "--out", &c, "--report", &path(dir.path(), "r.json")]);
    let out = run(&["stats", "--circuit", &c, "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all |2> controls true"));
    assert!(text.contains("wires 2 ancillas 0"));
}

#[test]
fn precondition_and_io_codes() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    run(&["random", "--ring", "omega", "--wires", "1", "--length", "5", "--out", &m]);
    let out = path(dir.path(), "out.json");
    assert_eq!(run(&["synth", "--ring", "zeta", "--in", &m, "--out", &out]).status.code(), Some(3));
    assert_eq!(run(&["embed", "--in", &m, "--out", &out]).status.code(), Some(3));
    assert_eq!(
        run(&["random", "--ring", "omega", "--wires", "0", "--length", "5", "--out", &out]).status.code(),
        Some(3)
    );
    let missing = path(dir.path(), "missing.json");
    assert_eq!(run(&["synth", "--ring", "omega", "--in", &missing, "--out", &out]).status.code(), Some(2));

    let four = path(dir.path(), "four.json");
    std::fs::write(
        &four,
        r#"{"ring":"omega","dim":2,"entries":[[{"a":"1","b":"0","k":0},{"a":"0","b":"0","k":0}],[{"a":"0","b":"0","k":0},{"a":"1","b":"0","k":0}]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["synth", "--ring", "omega", "--in", &four, "--out", &out]).status.code(), Some(3));
}
