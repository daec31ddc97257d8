use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hoeffspecht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dims_n6() {
    let o = run(&["dims", "--n", "6"]);
    assert!(o.status.success());
    let dims: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(2).unwrap().to_string())
        .collect();
    assert_eq!(dims, ["1", "5", "9", "5"]);
}

#[test]
fn verify_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = run(&["verify", "--n", "5", "--m", "2", "--seed", "1", "--trials", "5", "--report", path(&report)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let suites = json.as_array().unwrap();
    assert_eq!(suites.len(), 4);
    for s in suites {
        assert_eq!(s["n"], 5);
        assert!(s["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["verify", "--n", "5", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n/2"));
    assert_eq!(run(&["verify", "--n", "5", "--m", "2", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn decompose_reconstruct_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("h.txt");
    let text = "n = 6\nl = 3\n1,2,3 = 5/7\n1,4,6 = -2\n2,5,6 = 1/3\n";
    fs::write(&input, text).unwrap();
    let dec = dir.path().join("d.txt");
    let o = run(&["decompose", "--n", "6", "--m", "3", "--input", path(&input), "--out", path(&dec)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let d = fs::read_to_string(&dec).unwrap();
    assert!(d.contains("[kernel 3]") && d.contains("[component 0]"));
    let o = run(&["reconstruct", "--input", path(&dec)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), text);
}

#[test]
fn constant_input_has_zero_kernels() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c.txt");
    let mut text = String::from("n = 4\nl = 2\n");
    for s in ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"] {
        text += &format!("{s} = 3/2\n");
    }
    fs::write(&input, text).unwrap();
    let o = run(&["decompose", "--n", "4", "--m", "2", "--input", path(&input)]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("mean = 3/2"));
    // kernel sections carry headers only
    for section in out.split("\n[").filter(|s| s.starts_with("kernel")) {
        assert_eq!(section.lines().count(), 3, "{section}");
    }
}

#[test]
fn shape_mismatch_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "n = 6\nl = 2\n1,2 = 1\n3,4 = 1/0\n").unwrap();
    let o = run(&["decompose", "--n", "6", "--m", "2", "--input", path(&input)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
    fs::write(&input, "n = 6\nl = 2\n1,2 = 1\n").unwrap();
    let o = run(&["decompose", "--n", "6", "--m", "3", "--input", path(&input)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn specht_writes_one_file_per_standard_tableau() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("basis");
    let o = run(&["specht", "--n", "6", "--l", "2", "--out", path(&out)]);
    assert!(o.status.success());
    let files: Vec<_> = fs::read_dir(&out).unwrap().collect();
    assert_eq!(files.len(), 9);
    let v = fs::read_to_string(out.join("5,6.txt")).unwrap();
    assert!(v.starts_with("# polytabloid of"));
    assert!(v.contains("1,2 = 1\n") && v.contains("5,6 = 1\n"));
}

#[test]
fn chartable_csv() {
    let o = run(&["chartable", "--n", "4"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("cycle_type,class_size,chi_0,chi_1,chi_2"));
    assert_eq!(lines.count(), 5);
    assert!(run(&["chartable", "--n", "4", "--max-l", "3"]).status.code() == Some(2));
}

#[test]
fn bench_reports_both_routes() {
    let o = run(&["bench", "--n", "7", "--m", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("oracle route:") && out.contains("kernel route faster: yes"));
    let o = run(&["bench", "--n", "10", "--m", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
}
