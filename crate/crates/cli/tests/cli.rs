use rhbw_cli::envelope::{Payload, ReportEnvelope};
use rhbw_cli::{run_args, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_USAGE};

fn ok(args: &[&str]) -> String {
    let mut full = vec!["rhbw"];
    full.extend_from_slice(args);
    let out = run_args(full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["rhbw"];
    full.extend_from_slice(args);
    run_args(full).code
}

#[test]
fn json_reports_round_trip() {
    for args in [
        &["bandwidth", "E6", "6"][..],
        &["bandwidth", "B4", "2", "--dir", "1"],
        &["levels", "E6", "6", "--dir", "6"],
        &["levels", "D5", "3", "--dir", "2", "--stream"],
        &["bb", "C4", "2", "--dir", "4"],
        &["poincare", "G2", "1", "--eval", "2"],
        &["hasse", "A3", "2", "--format", "json"],
        &["polytope", "F4", "4"],
        &["fuzz", "B3", "1", "--trials", "20", "--seed", "3"],
        &["table1", "--nmax", "4", "--format", "json"],
    ] {
        let text = ok(args);
        let env = ReportEnvelope::from_json(&text).unwrap();
        assert_eq!(env.to_json(), text, "{args:?}");
        assert_eq!(env.format, "json");
    }
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["levels", "E7", "7", "--dir", "1"]);
    let b = ok(&["levels", "E7", "7", "--dir", "1"]);
    assert_eq!(a, b);
}

#[test]
fn poincare_eval() {
    let env = ReportEnvelope::from_json(&ok(&["poincare", "A3", "2", "--eval", "1"])).unwrap();
    let Payload::Poincare(p) = env.payload else { panic!("wrong payload") };
    assert_eq!(p.value_at, Some((1, "6".to_string())));
    assert_eq!(env.input.node, Some(2));
}

#[test]
fn csv_has_header_and_rows() {
    let csv = ok(&["polytope", "D4", "1", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "index,m1,m2,m3,m4");
    assert_eq!(lines.len(), 1 + 8);
    let csv = ok(&["levels", "E6", "6", "--dir", "6", "--format", "csv"]);
    assert!(csv.starts_with("value,label,count,component,"));
    assert_eq!(csv.lines().count(), 4);
    let csv = ok(&["bandwidth", "A4", "2", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn hasse_text_and_dot() {
    let text = ok(&["hasse", "A2", "1", "--format", "text"]);
    assert_eq!(text.lines().count(), 3 + 2);
    let dot = ok(&["hasse", "A2", "1"]);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn fuzz_finds_tight_witness() {
    let env = ReportEnvelope::from_json(&ok(&["fuzz", "C3", "1", "--trials", "200", "--seed", "42"])).unwrap();
    let Payload::Fuzz(r) = env.payload else { panic!("wrong payload") };
    assert!(r.violations.is_empty());
    assert!(r.tight);
    assert_eq!(r.tightest.coweight.coeffs(), &[0, 0, 1]);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["bandwidth", "Z3", "1"]), EXIT_USAGE);
    assert_eq!(code(&["bandwidth", "E6", "7"]), EXIT_USAGE);
    assert_eq!(code(&["bandwidth", "B1", "1"]), EXIT_USAGE);
    assert_eq!(code(&["levels", "A3", "1", "--dir", "0"]), EXIT_USAGE);
    assert_eq!(code(&["fuzz", "A2", "1", "--trials", "0", "--seed", "1"]), EXIT_USAGE);
    assert_eq!(code(&["hasse", "A2", "1", "--format", "png"]), EXIT_USAGE);
}

#[test]
fn resource_error_names_required_cap() {
    let out = run_args(["rhbw", "--cap", "10", "polytope", "E7", "7"]);
    assert_eq!(out.code, EXIT_RESOURCE);
    assert!(out.stderr.contains("at least 56"), "{}", out.stderr);
}

#[test]
fn table1_passes_and_mismatch_code_is_distinct() {
    assert!(ok(&["table1"]).contains("all match"));
    assert_ne!(EXIT_MISMATCH, 0);
}
