use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecolor")).args(args).output().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn gen_color_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.el");
    let out = path(dir.path(), "out.col");
    let stats = path(dir.path(), "stats.json");
    assert!(run(&["gen", "gnm", "300", "6000", "--seed", "2", "-o", &g]).status.success());
    let o = run(&["color", "--algo", "fast", "--seed", "7", "--stats-out", &stats, &g, &out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = run(&["verify", &g, &out]);
    assert!(v.status.success());
    assert!(String::from_utf8_lossy(&v.stdout).starts_with("proper=true complete=true"));
    let s: serde_json::Value = serde_json::from_str(&fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(s["schema"], 1);
    assert_eq!(s["branch"], "fast");
    assert!(s.get("timings").is_none());
    let p = &s["phases"];
    let sum: u64 = ["base", "light", "heavy", "per_edge", "fallback"].iter().map(|k| p[k].as_u64().unwrap()).sum();
    assert_eq!(sum, 6000);
}

#[test]
fn baseline_on_odd_cycle_uses_three_colors() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "c5.el");
    fs::write(&g, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = run(&["color", "--algo", "baseline", &g]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let mut colors: Vec<&str> = text.lines().map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    colors.sort_unstable();
    colors.dedup();
    assert_eq!(colors.len(), 3);
    assert_eq!(String::from_utf8(run(&["oracle", &g]).stdout).unwrap().trim(), "3");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.el");
    assert!(run(&["gen", "regular", "400", "40", "--seed", "1", "-o", &g]).status.success());
    let args = ["color", "--seed", "5", "--mode", "practical", "--cap-l", "6", &g];
    let first = run(&args);
    assert!(first.status.success());
    for _ in 0..3 {
        let again = run(&args);
        assert_eq!(again.stdout, first.stdout);
        assert_eq!(again.stderr, first.stderr);
    }
}

#[test]
fn verify_reports_tampering_and_holes() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "k4.el");
    let col = path(dir.path(), "k4.col");
    fs::write(&g, String::from_utf8(run(&["gen", "complete", "4"]).stdout).unwrap()).unwrap();
    assert!(run(&["color", &g, &col]).status.success());
    let good = fs::read_to_string(&col).unwrap();

    let mut lines: Vec<String> = good.lines().map(String::from).collect();
    let first: Vec<&str> = lines[0].split_whitespace().collect();
    let second: Vec<&str> = lines[1].split_whitespace().collect();
    // Edges 0-1 and 0-2 share vertex 0.
    lines[0] = format!("{} {} {}", first[0], first[1], second[2]);
    fs::write(&col, lines.join("\n")).unwrap();
    let v = run(&["verify", &g, &col]);
    assert_eq!(v.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&v.stdout).contains("violation"));

    let holes: Vec<&str> = good.lines().skip(1).collect();
    fs::write(&col, holes.join("\n")).unwrap();
    let v = run(&["verify", &g, &col]);
    assert_eq!(v.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&v.stdout).contains("uncolored=1"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["color", &path(dir.path(), "missing.el")]).status.code(), Some(2));
    let bad = path(dir.path(), "bad.el");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    assert_eq!(run(&["color", &bad]).status.code(), Some(3));
    assert_eq!(run(&["gen", "regular", "5", "3"]).status.code(), Some(4));
    let big = path(dir.path(), "k8.el");
    assert!(run(&["gen", "complete", "8", "-o", &big]).status.success());
    assert_eq!(run(&["oracle", &big]).status.code(), Some(4));
}

#[test]
fn dimacs_input_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "p.dimacs");
    assert!(run(&["gen", "petersen", "--format", "dimacs", "-o", &g]).status.success());
    assert!(fs::read_to_string(&g).unwrap().contains("p edge 10 15"));
    let o = run(&["color", &g]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 15);
    assert_eq!(String::from_utf8(run(&["oracle", &g]).stdout).unwrap().trim(), "4");
}

#[test]
fn bench_small_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "bench.csv");
    assert!(run(&["bench", "--grid", "small", "-o", &csv]).status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!(header.contains(&"phase_sum") && header.contains(&"extend_median_iterations"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    // 3 graphs x 3 seeds x 2 algorithms.
    assert_eq!(rows.len(), 18);
    let (m, sum, valid) = (
        header.iter().position(|&h| h == "m").unwrap(),
        header.iter().position(|&h| h == "phase_sum").unwrap(),
        header.iter().position(|&h| h == "valid").unwrap(),
    );
    assert!(rows.iter().all(|r| r[m] == r[sum] && r[valid] == "true"));
}
