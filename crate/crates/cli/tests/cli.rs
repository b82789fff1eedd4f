use std::process::{Command, Output};

use maclab_core::verify::Report;
use maclab_core::MonomialSym;
use serde_json::Value;

fn maclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maclab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn single_box() {
    let o = maclab(&["compute", "--shape", "1", "--alphabet", "1", "--via", "hhl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m[1]: 1\n");
}

#[test]
fn three_two_coefficient_at_four_one() {
    let o = maclab(&["compute", "--shape", "3,2", "--mu", "4,1", "--via", "monomial", "--formula", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t^2 + t^3 + t^4 + q*t^3 + q*t^4\n");
}

#[test]
fn compact_matches_hhl() {
    let hhl = maclab(&["compute", "--shape", "2,2", "--alphabet", "4", "--via", "hhl"]);
    let compact = maclab(&[
        "compute",
        "--shape",
        "2,2",
        "--alphabet",
        "4",
        "--via",
        "compact",
        "--mode",
        "canonical",
        "--stat",
        "S2",
    ]);
    assert_eq!(stdout(&hhl), stdout(&compact));
    let dual = maclab(&[
        "compute",
        "--shape",
        "2,2",
        "--alphabet",
        "4",
        "--via",
        "compact",
        "--mode",
        "dual",
        "--stat",
        "S5*",
    ]);
    assert_eq!(stdout(&hhl), stdout(&dual));
}

#[test]
fn monomial_matches_hhl() {
    let hhl = maclab(&["compute", "--shape", "3,1", "--via", "hhl"]);
    for f in ["1", "2", "3", "4"] {
        let m = maclab(&["compute", "--shape", "3,1", "--via", "monomial", "--formula", f]);
        assert_eq!(stdout(&hhl), stdout(&m), "formula {f}");
    }
}

#[test]
fn json_result_round_trips() {
    let o = maclab(&["--output", "json", "compute", "--shape", "2,1", "--via", "hhl"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let h: MonomialSym = serde_json::from_value(v["result"].clone()).unwrap();
    let again: Value = serde_json::to_value(&h).unwrap();
    assert_eq!(again, v["result"]);
}

#[test]
fn verify_all_etas() {
    let o = maclab(&["verify", "--shape", "2,1", "--alphabet", "3", "--all-etas"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS sixteen-statistics"));
}

#[test]
fn verify_braid_reports_json() {
    let o = maclab(&["verify", "--braid", "--width", "3", "--height", "3", "--alphabet", "3", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Report> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.pass));
    assert_eq!(reports[0].check, "delta-braid");
}

#[test]
fn verify_formulas() {
    let o = maclab(&["verify", "--formulas", "--size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("25 (lambda, mu) pairs"));
}

#[test]
fn examples_by_name_and_alias() {
    for (name, alias) in maclab_core::golden::EXAMPLES {
        let a = maclab(&["example", name]);
        let b = maclab(&["example", alias]);
        assert_eq!(a.status.code(), Some(0), "{name}");
        assert!(stdout(&a).starts_with("PASS"), "{name}");
        assert_eq!(stdout(&a), stdout(&b));
    }
    assert_eq!(maclab(&["example", "no-such-example"]).status.code(), Some(2));
}

#[test]
fn gamma_on_the_two_row_tableau() {
    let o = maclab(&["gamma", "--filling", "2 3 2 4 4 5 4 5 6 8 7/3 5 1 3 7 6 5 1 4 2 6", "--set", "S2"]);
    assert_eq!(stdout(&o), "image:\n2 3 2 4 4 5 4 5 6 8 7\n3 2 5 1 7 5 6 1 4 3 6\nmaj 6 -> 6, quinv 72 -> eta_S2 72\n");
}

#[test]
fn canonicalize_three_rows() {
    let o = maclab(&["canonicalize", "--filling", "5 1 3 2 1/3 3 2 4 7/3 8 1 2 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("canonical form:\n5 3 2 1 1\n3 2 7 4 3\n8 1 2 2 3\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(maclab(&["compute", "--shape", "2,x"]).status.code(), Some(2));
    assert_eq!(maclab(&["compute", "--shape", "1,2"]).status.code(), Some(2));
    assert_eq!(maclab(&["compute", "--shape", "2,2", "--via", "compact", "--stat", "S3"]).status.code(), Some(3));
    assert_eq!(maclab(&["compute", "--shape", "2,2", "--via", "compact", "--stat", "inv"]).status.code(), Some(3));
    assert_eq!(maclab(&["verify"]).status.code(), Some(2));
    let capped = maclab(&["compute", "--shape", "5,5,5", "--alphabet", "9"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("--max-fillings"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_maclab"))
            .args(["--output", "json", "compute", "--shape", "2,2,1", "--via", "hhl"])
            .env("MACLAB_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
