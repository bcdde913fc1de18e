use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopgrass"))
        .args(args)
        .output()
        .expect("spawn loopgrass")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn series_a1_matches() {
    let o = run(&["series", "--type", "A1", "--max-dim", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 1 1 1 1\nMATCHES product formula\n");
}

#[test]
fn series_json_fields() {
    let o = run(&[
        "series",
        "--type",
        "C3",
        "--max-dim",
        "6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matches"], true);
    assert_eq!(v["series"], v["productFormula"]);
    assert_eq!(v["series"].as_array().unwrap().len(), 7);
}

#[test]
fn cells_lists_a2_low_dims() {
    let o = run(&["cells", "--type", "A2sl", "--max-dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"(0,0,0) dim=0".to_string()));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "motive",
        "--type",
        "B3",
        "--max-twist",
        "8",
        "--char",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn motive_text_and_json() {
    let o = run(&["motive", "--type", "C2", "--max-twist", "4", "--char", "0"]);
    assert_eq!(
        stdout(&o),
        "Z ⊕ Z(1)[2] ⊕ Z(2)[4] ⊕ 2·Z(3)[6] ⊕ 2·Z(4)[8]\n"
    );
    let o = run(&[
        "motive",
        "--type",
        "A1",
        "--max-twist",
        "1",
        "--char",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], "Z[1/2]");
    assert_eq!(v["truncatedAt"], 1);
}

#[test]
fn motive_stage_has_no_truncation_marker() {
    let o = run(&["motive", "--type", "A1", "--stage", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.get("truncatedAt").is_none());
    assert_eq!(v["summands"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["motive", "--type", "A1"]).status.code(), Some(2));
    assert_eq!(
        run(&["motive", "--type", "A1", "--stage", "-2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "--type", "A1", "--max-dim", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn classify_emit_canonical_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":2,"field":"F5","entries":[["t","1"],["0","t^-1"]]}"#,
    );
    let first = run(&["classify", "--matrix", &m]);
    let canon = run(&["classify", "--matrix", &m, "--emit-canonical"]);
    assert_eq!(canon.status.code(), Some(0));
    let c = write(dir.path(), "c.json", &stdout(&canon));
    let again = run(&["classify", "--matrix", &c]);
    assert_eq!(stdout(&first), stdout(&again));
    let twice = run(&["classify", "--matrix", &c, "--emit-canonical"]);
    assert_eq!(stdout(&canon), stdout(&twice));
}

#[test]
fn classify_reports_coweight_and_component() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":2,"field":"Q","entries":[["t","0"],["0","t"]]}"#,
    );
    let o = run(&["classify", "--matrix", &m, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coweight"], serde_json::json!([1, 1]));
    assert_eq!(v["component"], 2);
    assert_eq!(v["cellDim"], 0);
}

#[test]
fn birkhoff_outside_big_cell_is_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":2,"field":"Q","entries":[["t","0"],["0","t^-1"]]}"#,
    );
    let o = run(&["birkhoff", "--matrix", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "NOT_IN_BIG_CELL\n");
}

#[test]
fn birkhoff_factors_multiply_back() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":2,"field":"F5","entries":[["t","1"],["0","t^-1"]]}"#,
    );
    let o = run(&["birkhoff", "--matrix", &m, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["inBigCell"], true);
    assert_eq!(
        v["negative"],
        serde_json::json!([["1", "0"], ["t^-1", "1"]])
    );
    assert_eq!(v["positive"], serde_json::json!([["t", "1"], ["4", "0"]]));
}

#[test]
fn chart_finds_translate() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":2,"field":"Q","entries":[["t","0"],["0","t^-1"]]}"#,
    );
    let o = run(&["chart", "--matrix", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("nu: (1,-1)\n"));
}

#[test]
fn errors_are_reported_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let singular = write(
        dir.path(),
        "s.json",
        r#"{"n":1,"field":"Q","entries":[["1 + t"]]}"#,
    );
    let o = run(&["classify", "--matrix", &singular, "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(v["error"].as_str().is_some());

    let o = run(&["classify", "--matrix", "/nonexistent/m.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn field_override() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n":1,"field":"Fp","entries":[["3*t"]]}"#,
    );
    assert_eq!(run(&["classify", "--matrix", &m]).status.code(), Some(1));
    let o = run(&["classify", "--matrix", &m, "--field", "F7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("coweight: (1)\n"));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}
