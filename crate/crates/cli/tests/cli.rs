use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cutcomplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutcomplex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn conjecture_table_matches_golden_files() {
    let text = cutcomplex(&["conjecture", "--n", "9..11", "--homology"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text), golden("conjecture_9_11.txt"));
    let json = cutcomplex(&["conjecture", "--n", "9..11", "--homology", "--format", "json-lines"]);
    assert_eq!(json.status.code(), Some(0));
    assert_eq!(stdout(&json), golden("conjecture_9_11.jsonl"));
}

#[test]
fn text_and_json_rows_carry_the_same_numbers() {
    let args = ["conjecture", "--n", "9..13", "--homology", "--field", "gf3"];
    let text = stdout(&cutcomplex(&args));
    let json = stdout(&cutcomplex(&[&args[..], &["--format", "json-lines"]].concat()));
    let rows: Vec<Vec<String>> =
        text.lines().skip(1).map(|l| l.split_whitespace().map(str::to_string).collect()).collect();
    let records: Vec<serde_json::Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(records.len(), 5);
    for (row, rec) in rows.iter().zip(&records) {
        let n = rec["n"].as_u64().unwrap();
        assert_eq!(row[0], n.to_string());
        assert_eq!(row[1], rec["facet_count"].to_string());
        assert_eq!(row[2] == "valid", rec["shelling_valid"].as_bool().unwrap());
        assert_eq!(row[3], rec["spanning_from_order"].to_string());
        assert_eq!(row[4], rec["spanning_from_S"].to_string());
        assert_eq!(row[5], rec["spanning_from_formula"].to_string());
        assert_eq!(row[6], rec["betti"]["values"][(n - 3) as usize].to_string());
        assert_eq!(row[7] == "yes", rec["all_pass"].as_bool().unwrap());
    }
    let spanning: Vec<&str> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(spanning, ["1", "6", "12", "19", "27"]);
}

#[test]
fn reversed_order_reports_a_witness() {
    let text = cutcomplex(&["shelling", "--n", "9", "--k", "3", "--order", "reversed"]);
    assert_eq!(text.status.code(), Some(1));
    assert_eq!(stdout(&text), golden("shelling_9_reversed.txt"));
    let json = cutcomplex(&["shelling", "--n", "9", "--order", "reversed", "--format", "json-lines"]);
    assert_eq!(json.status.code(), Some(1));
    assert_eq!(stdout(&json), golden("shelling_9_reversed.jsonl"));
    let rec: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert!(stdout(&text).contains(&format!("position {}", rec["witness"]["later"])));
}

#[test]
fn betti_over_the_rationals() {
    let o = cutcomplex(&["betti", "--n", "9", "--k", "3", "--field", "rational", "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["values"], serde_json::json!([0, 0, 0, 0, 0, 0, 1]));
    let text = stdout(&cutcomplex(&["betti", "--n", "9", "--field", "rational"]));
    assert!(text.contains("dim  5: 1"));
}

#[test]
fn build_export_reimport_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let built = dir.path().join("built.txt");
    let exported = dir.path().join("exported.txt");
    let b = cutcomplex(&["build", "--n", "10", "--k", "3", "--out", built.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    let e = cutcomplex(&["export", "--complex", built.to_str().unwrap(), "--out", exported.to_str().unwrap()]);
    assert_eq!(e.status.code(), Some(0));
    let first = fs::read_to_string(&built).unwrap();
    let second = fs::read_to_string(&exported).unwrap();
    assert_eq!(first, second);
    let a = cutcomplex::SimplicialComplex::parse_facet_file(&first).unwrap();
    let direct = cutcomplex::cut_complex(&cutcomplex::squared_cycle(10).unwrap(), 3).unwrap();
    assert_eq!(a, direct);
}

#[test]
fn graph_input_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    // 4-cycle: not chordal, so its 2-cut complex is not shellable
    fs::write(&path, "4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = cutcomplex(&["shelling", "--graph", path.to_str().unwrap(), "--k", "2", "--order", "search"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "search: not shellable");
    fs::write(&path, "4\n0 1\n1 2\n2 3\n").unwrap();
    let o = cutcomplex(&["shelling", "--graph", path.to_str().unwrap(), "--k", "2", "--order", "search"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid: yes"));
}

#[test]
fn order_file_is_checked() {
    let dir = tempfile::tempdir().unwrap();
    let order = dir.path().join("order.txt");
    let built = stdout(&cutcomplex(&["build", "--n", "9"]));
    fs::write(&order, &built).unwrap();
    let arg = format!("file:{}", order.display());
    let o = cutcomplex(&["shelling", "--n", "9", "--order", &arg]);
    // lexicographic facet order: a definite verdict either way
    assert!(matches!(o.status.code(), Some(0) | Some(1)));
    let truncated: String = built.lines().take(3).collect::<Vec<_>>().join("\n");
    fs::write(&order, truncated).unwrap();
    let o = cutcomplex(&["shelling", "--n", "9", "--order", &arg]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_with_status_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_graph = dir.path().join("g.txt");
    fs::write(&bad_graph, "3\n0 1\n# comment\n0 7\n").unwrap();
    let o = cutcomplex(&["betti", "--graph", bad_graph.to_str().unwrap(), "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let bad_complex = dir.path().join("c.txt");
    fs::write(&bad_complex, "4 2\n0 1\n2 1\n").unwrap();
    let o = cutcomplex(&["export", "--complex", bad_complex.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));

    assert_eq!(cutcomplex(&["conjecture"]).status.code(), Some(2));
    assert_eq!(cutcomplex(&["betti", "--n", "9", "--field", "gf4"]).status.code(), Some(2));
    assert_eq!(cutcomplex(&["conjecture", "--n", "5"]).status.code(), Some(2));
    assert_eq!(cutcomplex(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn jobs_flag_limits_workers_without_changing_output() {
    let one = cutcomplex(&["conjecture", "--n", "9..12", "--jobs", "1"]);
    let many = cutcomplex(&["conjecture", "--n", "9..12"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&many));
}
