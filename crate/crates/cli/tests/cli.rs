use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foliation-index")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn indices_on_fermat_germ() {
    let o = run(&["indices", &path("fermat_p4_k3.scn")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let row = out.lines().find(|l| l.starts_with("vertex")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    // point chart at(4 cells) class(4 cells) mu_F mu_D tau m GSV Sch Res
    assert_eq!(&cells[cells.len() - 7..], ["1", "16", "16", "3", "-15", "1", "16"]);
    assert!(out.contains("certified at"));
}

#[test]
fn indices_refuses_non_invariant_pair() {
    let o = run(&["indices", &path("negative/not_invariant.scn")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("remainder x2"));
}

#[test]
fn malformed_input_reports_location() {
    let o = run(&["verify", &path("negative/malformed.scn")]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed.scn:3:17"));
    assert_eq!(code(&run(&["verify", "/nonexistent.scn"])), 1);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&run(&["verify", &path("fermat_p4_k3.scn")])), 0);
    assert_eq!(code(&run(&["verify", &path("negative/omitted_point.scn")])), 3);
    assert_eq!(code(&run(&["verify", &path("negative/tampered_expectation.scn")])), 3);
    assert_eq!(code(&run(&["verify", "--nmax", "4", &path("fermat_p4_k3.scn")])), 2);
}

#[test]
fn json_output_is_sorted_and_stringly_numeric() {
    let o = run(&["--json", "verify", &path("diagonal_p2_line.scn")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["globals"]["baum_bott_total"], "3");
    assert_eq!(v["points"][0]["indices"]["mu_f"], "1");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn chern_examples() {
    let o = run(&["chern", "--n", "4", "--d", "0", "--k", "3", "--mu", "16"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("schwartz_total   1\n"));
    let o = run(&["--json", "chern", "--n", "2", "--d", "1", "--k", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gsv_total"], "2");
    assert_eq!(v["baum_bott_total"], "3");
    let o = run(&["chern", "--n", "2", "--d", "2", "--k", "5"]);
    assert!(stdout(&o).contains("negativity_sum   -5  negative"));
    let o = run(&["chern", "--n", "3", "--d", "2", "--k", "9"]);
    assert!(stdout(&o).contains("negativity_sum   423  nonnegative"));
    assert_eq!(code(&run(&["chern", "--n", "2", "--d", "1", "--k", "0"])), 1);
}

#[test]
fn sweep_exit_codes() {
    let o = run(&["sweep"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("770 triples"));
    assert_eq!(code(&run(&["sweep", "--nmax", "2"])), 0);
    assert_eq!(code(&run(&["sweep", "--nmax", "1"])), 1);
    let o = run(&["--json", "sweep", "--nmax", "3", "--dmax", "2", "--kmax", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["triples"], "30");
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
}
