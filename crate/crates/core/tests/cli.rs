use std::io::Write;
use std::process::{Command, Output, Stdio};

use monobrick::{DiagramRecord, NclPartition};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monobrick"))
        .args(args)
        .env_remove("MONOBRICK_MAX_LINEAR")
        .env_remove("MONOBRICK_MAX_CYCLIC")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_streams_records_then_count() {
    let o = run(
        &["enumerate", "--algebra", "A", "--n", "3", "--kind", "monobrick"],
        "",
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23);
    assert_eq!(lines[22], r#"{"count":22}"#);
    for line in &lines[..22] {
        let record: DiagramRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&record).unwrap(), *line);
        assert!(record.to_diagram().unwrap().is_monobrick());
    }

    let semi = run(
        &["enumerate", "--algebra", "B", "--n", "2", "--kind", "semibrick"],
        "",
    );
    assert_eq!(stdout(&semi).lines().count(), 7);
    let tiny = run(&["enumerate", "--algebra", "A", "--n", "1"], "");
    assert_eq!(stdout(&tiny).lines().count(), 3);
}

#[test]
fn output_is_deterministic_across_workers() {
    let args = [
        "enumerate",
        "--algebra",
        "B",
        "--n",
        "3",
        "--kind",
        "cofinally-closed",
    ];
    let serial = stdout(&run(&args, ""));
    assert_eq!(serial, stdout(&run(&args, "")));
    let mut parallel = args.to_vec();
    parallel.extend(["--workers", "4"]);
    assert_eq!(serial, stdout(&run(&parallel, "")));
}

#[test]
fn count_table() {
    let o = run(&["count", "--algebra", "A", "--from", "3", "--to", "3"], "");
    assert!(stdout(&o).contains("| 3 | 22 | 22 | true |"));
    let o = run(
        &[
            "count",
            "--algebra",
            "B",
            "--from",
            "2",
            "--to",
            "5",
            "--format",
            "csv",
        ],
        "",
    );
    let text = stdout(&o);
    assert!(text.contains("2,8,8,true"));
    assert!(text.contains("5,1002,1002,true"));
}

#[test]
fn closure_and_mmax() {
    let chain = r#"{"n":3,"algebra":"A","arcs":[[1,2],[1,3],[1,4]]}"#;
    let o = run(&["closure"], r#"{"n":3,"algebra":"A","arcs":[[1,4]]}"#);
    assert_eq!(stdout(&o).trim(), chain);
    let o = run(&["mmax", "--hasse"], chain);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), r#"{"n":3,"algebra":"A","arcs":[[1,4]]}"#);
    let hasse: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(hasse["hasse"].as_array().unwrap().len(), 2);
    let o = run(&["closure"], r#"{"n":3,"algebra":"A","arcs":[]}"#);
    assert_eq!(stdout(&o).trim(), r#"{"n":3,"algebra":"A","arcs":[]}"#);
}

#[test]
fn non_monobrick_input_names_the_pair() {
    let o = run(&["closure"], r#"{"n":3,"algebra":"A","arcs":[[1,3],[2,4]]}"#);
    assert_eq!(code(&o), 4);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("(1,3)") && err.contains("(2,4)"), "{err}");
}

#[test]
fn ncl_conversions() {
    let o = run(&["ncl"], r#"{"n":4,"blocks":[[2,3],[1,2,4]]}"#);
    let diagram = stdout(&o);
    assert_eq!(
        diagram.trim(),
        r#"{"n":3,"algebra":"A","arcs":[[1,2],[1,4],[2,3]]}"#
    );
    let back = run(&["ncl"], &diagram);
    let p: NclPartition = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(p, NclPartition::new(4, [vec![1, 2, 4], vec![2, 3]]));

    let o = run(&["ncl"], r#"{"n":3,"blocks":[[1],[2],[3]]}"#);
    assert_eq!(stdout(&o).trim(), r#"{"n":2,"algebra":"A","arcs":[]}"#);

    let o = run(&["ncl"], r#"{"n":4,"blocks":[[1,3],[2,4]]}"#);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8(o.stderr).unwrap().contains("NCL2"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["enumerate", "--algebra", "C", "--n", "3"], "")), 2);
    assert_eq!(code(&run(&["enumerate", "--algebra", "B", "--n", "0"], "")), 2);
    assert_eq!(code(&run(&["enumerate", "--algebra", "B", "--n", "9"], "")), 3);
    assert_eq!(code(&run(&["oracle", "verify", "--preset", "e6"], "")), 2);
    assert_eq!(code(&run(&["closure"], "not json")), 2);
    assert_eq!(
        code(&run(&["render"], r#"{"n":3,"algebra":"A","arcs":[[3,2]]}"#)),
        4
    );

    let o = Command::new(env!("CARGO_BIN_EXE_monobrick"))
        .args(["enumerate", "--algebra", "A", "--n", "4"])
        .env("MONOBRICK_MAX_LINEAR", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn render_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("render.txt");
    let o = run(
        &["render", "--out", path.to_str().unwrap()],
        r#"{"n":3,"algebra":"A","arcs":[[1,2],[1,4],[3,4]]}"#,
    );
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text, "+-----------+\n+---+   +---+\n1   2   3   4\n");
}

#[test]
fn oracle_verify_reports() {
    let o = run(&["oracle", "verify", "--preset", "nak2", "--format", "json"], "");
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["monobricks"], 8);
    let tables = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "tables")
        .unwrap();
    assert_eq!(tables["passed"], true);
}
