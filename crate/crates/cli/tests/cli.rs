use std::fs;
use std::process::{Command, Output};

use fermat_descent::{RecordStatus, ReportRecord, Triplet};

const BIN: &str = env!("CARGO_BIN_EXE_fermat-descent");
const SMALL: [&str; 4] = ["--d-max", "2", "--a-max", "20000"];

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("FERMAT_DESCENT_BOUNDS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn eq_args(a: &str, b: &str, c: &str) -> Vec<String> {
    ["-A", a, "-B", b, "-C", c, "-p", "5"].iter().map(|s| s.to_string()).collect()
}

fn solve(a: &str, b: &str, c: &str, extra: &[&str]) -> Output {
    let mut args = vec!["solve".to_owned()];
    args.extend(eq_args(a, b, c));
    args.extend(extra.iter().map(|s| s.to_string()));
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    run(&refs)
}

#[test]
fn solve_recovers_the_known_solution() {
    let o = solve("2", "9", "11", &SMALL);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(99 : 98010 : 1)"), "{text}");
    assert!(text.contains("solutions (1"), "{text}");
    assert!(text.contains("  (1, 1, -1)\n"), "{text}");
}

#[test]
fn solve_without_solutions_says_so() {
    let o = solve("2", "3", "121", &SMALL);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no rational triplets found within the search box"));
}

#[test]
fn invalid_equations_exit_with_validation_status() {
    let o = solve("2", "4", "11", &SMALL);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let mut args = vec!["solve"];
    args.extend(["-A", "2", "-B", "9", "-C", "11", "-p", "6"]);
    assert_eq!(run(&args).status.code(), Some(2));
    assert_eq!(solve("2", "9", "11", &["--d-max", "0"]).status.code(), Some(2));
}

#[test]
fn relaxed_mode_accepts_shared_factors() {
    let o = solve("2", "4", "11", &["--relaxed", "--d-max", "1", "--a-max", "100"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn zero_budget_exits_with_budget_status() {
    let o = solve("2", "9", "11", &["--time-budget", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("INCOMPLETE"));
}

#[test]
fn canonical_json_is_byte_identical_across_runs() {
    let args = [&SMALL[..], &["--format", "json", "--canonical"]].concat();
    let first = solve("2", "9", "11", &args);
    let second = solve("2", "9", "11", &args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let rec = ReportRecord::from_json(stdout(&first).trim()).unwrap();
    assert_eq!(rec.status, RecordStatus::Ok);
    assert!(rec.timestamp.is_none());
    let report = rec.report.unwrap();
    assert_eq!(report.solutions.into_iter().collect::<Vec<_>>(), vec![Triplet::from_i64(1, 1, -1)]);
}

#[test]
fn human_and_json_agree_on_points_and_solutions() {
    let human = stdout(&solve("2", "9", "11", &SMALL));
    let json = stdout(&solve("2", "9", "11", &[&SMALL[..], &["--format", "json"]].concat()));
    let report = ReportRecord::from_json(json.trim()).unwrap().report.unwrap();
    assert!(human.contains(&format!("points ({}):", report.search.points.len())));
    for pt in &report.search.points {
        assert!(human.contains(&format!("  {pt}  [integral")), "missing {pt}");
    }
    for t in &report.solutions {
        assert!(human.contains(&format!("  {t}\n")), "missing {t}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = solve("2", "9", "11", &[&SMALL[..], &["--format", "json", "-o", p]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let rec = ReportRecord::from_json(fs::read_to_string(&path).unwrap().trim()).unwrap();
    assert_eq!(rec.bounds.d_max, 2);
}

#[test]
fn bounds_come_from_the_environment_unless_overridden() {
    let json = |extra: &[&str]| {
        let mut args = vec!["solve", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "--format", "json"];
        args.extend(extra);
        let o = Command::new(BIN)
            .args(&args)
            .env("FERMAT_DESCENT_BOUNDS", "1,500")
            .output()
            .unwrap();
        ReportRecord::from_json(stdout(&o).trim()).unwrap()
    };
    let rec = json(&[]);
    assert_eq!((rec.bounds.d_max, rec.bounds.a_max), (1, 500));
    let rec = json(&["--a-max", "700"]);
    assert_eq!((rec.bounds.d_max, rec.bounds.a_max), (1, 700));

    let o = Command::new(BIN)
        .args(["solve", "-A", "2", "-B", "9", "-C", "11", "-p", "5"])
        .env("FERMAT_DESCENT_BOUNDS", "garbage")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn curve_prints_constants_and_genus() {
    let o = run(&["curve", "-A", "16", "-B", "9", "-C", "7", "-p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("c = 1008189504"), "{text}");
    assert!(text.contains("g = 2"), "{text}");
    let o = run(&["curve", "-A", "16", "-B", "9", "-C", "7", "-p", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 2);
    assert_eq!(v["rational_constant"], "1008189504");
}

#[test]
fn map_point_and_verify() {
    let o = run(&["map-point", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "-t", "1,1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(99 : 98010 : 1)"));

    let verify = |point: &str| {
        run(&["verify", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "-t", "1,1,-1", "--point", point])
    };
    assert_eq!(verify("99,98010").status.code(), Some(0));
    assert_eq!(verify("99,-98010").status.code(), Some(0));
    let bad = verify("99,98011");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("inconsistent"));

    let o = run(&["map-point", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "-t", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn orbit_lists_eight_solved_variants() {
    let o = run(&["orbit", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "-t", "1,1,-1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 8);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let eq: fermat_descent::FermatEquation = serde_json::from_value(v["variant"]["equation"].clone()).unwrap();
        let t: Triplet = serde_json::from_value(v["triplet"].clone()).unwrap();
        assert!(eq.is_solution(&t));
    }
    let human = run(&["orbit", "-A", "2", "-B", "9", "-C", "11", "-p", "5", "-t", "1,1,-1"]);
    assert_eq!(stdout(&human).lines().count(), 8);
}

#[test]
fn batch_writes_one_record_per_line_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.jsonl");
    fs::write(&input, "# examples\n2,3,121,5,2,20000\n\n2,9,11,5,2,20000\n16,9,7,5,2,20000\n2,4,11,5\nnot a line\n")
        .unwrap();
    let args = ["batch", "-i", input.to_str().unwrap(), "-o", output.to_str().unwrap(), "--canonical"];
    assert_eq!(run(&args).status.code(), Some(0));

    let records: Vec<ReportRecord> = fs::read_to_string(&output)
        .unwrap()
        .lines()
        .map(|l| ReportRecord::from_json(l).unwrap())
        .collect();
    let statuses: Vec<RecordStatus> = records.iter().map(|r| r.status).collect();
    use RecordStatus::*;
    assert_eq!(statuses, [Ok, Ok, Ok, ValidationError, ParseError]);
    assert_eq!(records[1].input.as_deref(), Some("2,9,11,5,2,20000"));
    assert!(records[0].report.as_ref().unwrap().solutions.is_empty());
    assert_eq!(records[1].report.as_ref().unwrap().solutions.len(), 1);
    assert!(records[3].error.is_some());

    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&output).unwrap().lines().count(), 10);
}

#[test]
fn batch_handles_empty_and_missing_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let o = run(&["batch", "-i", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let missing = dir.path().join("missing.txt");
    let o = run(&["batch", "-i", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}
