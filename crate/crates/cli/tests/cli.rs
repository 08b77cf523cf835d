use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fcomplex::checks::all_pure_complexes;
use fcomplex_cli::format::{parse_complex, parse_complex_list, write_complex};
use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

fn fcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// A scratch directory unique to this test process and `name`.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fcx-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn documented_examples() {
    let o = fcx(&["check", "f-ideal", &fixture("sec2.cx")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "f-ideal: true (route: both-agree, |G|=10=C(6,3)/2)\n");

    let o = fcx(&["betti", &fixture("sec2.cx"), "--as", "facet-ideal"]);
    assert_eq!(stdout(&o), "(0,3):10\n(1,4):15\n(2,5):6\nlinear: true\n");

    let o = fcx(&["enumerate", "--n", "4", "--d", "2", "--facets", "3", "--classify"]);
    assert_eq!(stdout(&o), "total 20, f 12, well-distributed 0, strong 12\n");
}

#[test]
fn false_verdicts_exit_zero() {
    let o = fcx(&["check", "strong", &fixture("sec3.cx")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("strong: false"), "{text}");
    assert!(text.contains("Δ′: L fails: 12 is not covered"), "{text}");

    let o = fcx(&["check", "lu", &fixture("sec3-complement.cx")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L fails: 12 is not covered"));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let dir = scratch("parse");
    let bad = write_file(&dir, "bad.cx", "n 4\n1 5\n");
    let o = fcx(&["info", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2: vertex 5 is out of range"), "{}", stderr(&o));

    let dup = write_file(&dir, "dup.cx", "n 4\n1 2\n2 1\n");
    assert_eq!(fcx(&["info", &dup]).status.code(), Some(2));
    assert_eq!(fcx(&["info", &dir.join("missing.cx").display().to_string()]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let sec2 = fixture("sec2.cx");
    assert_eq!(fcx(&["dual", &sec2]).status.code(), Some(2));
    assert_eq!(fcx(&["dual", &sec2, "--newton", "--hcomp"]).status.code(), Some(2));
    assert_eq!(fcx(&["cm", &sec2, "--field", "gf:4"]).status.code(), Some(2));
    assert_eq!(fcx(&["verify", "paper", "--only", "nosuch"]).status.code(), Some(2));
    assert_eq!(fcx(&["enumerate", "--n", "4", "--d", "5", "--facets", "1"]).status.code(), Some(2));
    assert_eq!(fcx(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fcx(&["--help"]).status.code(), Some(0));
}

#[test]
fn precondition_violations_exit_three() {
    let dir = scratch("pre");
    let odd = write_file(&dir, "odd.cx", "n 5\n12\n13\n");
    let o = fcx(&["check", "well-distributed", &odd]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("even vertex count"));

    let mixed = write_file(&dir, "mixed.cx", "n 4\n123\n4\n");
    assert_eq!(fcx(&["check", "lu", &mixed]).status.code(), Some(3));
    assert_eq!(fcx(&["dual", &mixed, "--hcomp"]).status.code(), Some(3));
    assert_eq!(fcx(&["shellable", &mixed]).status.code(), Some(3));

    let simplex = write_file(&dir, "simplex.cx", "n 3\n1 2 3\n");
    assert_eq!(fcx(&["dual", &simplex, "--newton"]).status.code(), Some(3));
    assert_eq!(fcx(&["betti", &simplex, "--as", "stanley-reisner"]).status.code(), Some(3));
}

#[test]
fn exhausted_budget_exits_four() {
    let o = fcx(&["shellable", &fixture("sec2.cx"), "--budget", "1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("budget"));
    let o = fcx(&["shellable", &fixture("sec2.cx")]);
    assert_eq!(stdout(&o), "shellable: false\n");
}

#[test]
fn records_and_text_agree() {
    let sec2 = fixture("sec2.cx");
    let sec3 = fixture("sec3.cx");
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "f-ideal", &sec2],
        vec!["check", "lu", &sec3],
        vec!["check", "well-distributed", &sec3],
        vec!["check", "strong", &sec3],
        vec!["cm", &sec2],
        vec!["--field", "gf:2", "cm", &sec2],
        vec!["linear", &sec2],
        vec!["--field", "gf:2", "linear", &sec2],
        vec!["unmixed", &sec2, "--as", "stanley-reisner"],
        vec!["shellable", &sec3],
    ];
    for args in cases {
        let text = stdout(&fcx(&args));
        let mut with_records = vec!["--records"];
        with_records.extend(&args);
        let record: Value = serde_json::from_str(stdout(&fcx(&with_records)).trim()).unwrap();
        let verdict = &record["verdict"];
        let head = format!("{}: {}", verdict["predicate"].as_str().unwrap(), verdict["value"]);
        assert!(text.starts_with(&head), "{args:?}: {text} vs {record}");
        for w in record["witnesses"].as_array().unwrap() {
            assert!(text.contains(w.as_str().unwrap()), "{args:?}");
        }
        assert!(record["timing_ms"].is_number());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = scratch("out");
    let target = dir.join("dual.cx");
    let o = fcx(&["dual", &fixture("sec2.cx"), "--alexander", "--output", &target.display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let sec2 = parse_complex(&std::fs::read_to_string(fixture("sec2.cx")).unwrap()).unwrap();
    assert_eq!(parse_complex(&written).unwrap(), sec2);
}

#[test]
fn duals_print_in_the_file_format() {
    let o = fcx(&["dual", &fixture("sec3.cx"), "--hcomp"]);
    let printed = parse_complex(&stdout(&o)).unwrap();
    let want = parse_complex(&std::fs::read_to_string(fixture("sec3-complement.cx")).unwrap()).unwrap();
    assert_eq!(printed, want);
    assert!(stdout(&o).starts_with("n 6\n2 3 4\n1 3 5\n"));
}

#[test]
fn enumerate_listing_parses_back() {
    let o = fcx(&["enumerate", "--n", "4", "--d", "2", "--facets", "3"]);
    let listed = parse_complex_list(&stdout(&o)).unwrap();
    assert_eq!(listed.len(), 20);
    let o = fcx(&["enumerate", "--n", "4", "--d", "2", "--facets", "3", "--iso"]);
    let reps = parse_complex_list(&stdout(&o)).unwrap();
    assert_eq!(reps.len(), 3);
    assert!(stdout(&o).contains("# orbit 12"));
}

#[test]
fn worker_count_does_not_change_classification() {
    let args = ["enumerate", "--n", "5", "--d", "2", "--facets", "4", "--classify", "--iso", "--cm"];
    let one = stdout(&fcx(&args));
    let mut many = args.to_vec();
    many.extend(["--jobs", "4"]);
    assert_eq!(one, stdout(&fcx(&many)));
    assert!(one.starts_with("total 210, "));
}

#[test]
fn serialization_round_trips_for_small_complexes() {
    for n in 1..=5 {
        for c in all_pure_complexes(n) {
            let text = write_complex(&c);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(write_complex(&back), text);
        }
    }
}

#[test]
fn verify_single_check_and_listing() {
    let o = fcx(&["verify", "paper", "--only", "sec2-betti"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("pass  sec2-betti"), "{text}");
    assert!(text.ends_with("1 of 1 checks passed\n"), "{text}");

    let o = fcx(&["verify", "paper", "--list"]);
    assert!(stdout(&o).lines().any(|l| l == "props-n6-sampled"));
}

#[test]
fn verify_whole_suite_passes() {
    let o = fcx(&["--records", "verify", "paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let records: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = records.last().unwrap();
    assert_eq!(summary["verdict"]["failed"], 0);
    let gf2 = records.iter().find(|r| r["verdict"]["check"] == "sec2-betti-gf2").unwrap();
    assert_eq!(gf2["verdict"]["gating"], false);
}

fn corrupted_fixtures(name: &str, from: &str, to: &str) -> PathBuf {
    let dir = scratch(name);
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        std::fs::copy(&path, dir.join(path.file_name().unwrap())).unwrap();
    }
    let sec2 = std::fs::read_to_string(dir.join("sec2.cx")).unwrap();
    let line = format!("\n{from}\n");
    assert!(sec2.contains(&line));
    std::fs::write(dir.join("sec2.cx"), sec2.replacen(&line, &format!("\n{to}\n"), 1)).unwrap();
    dir
}

#[test]
fn corrupted_facet_fails_at_the_f_ideal_check() {
    let dir = corrupted_fixtures("neg-size", "123", "12");
    let o = fcx(&["verify", "paper", "--fixtures", &dir.display().to_string()]);
    assert_ne!(o.status.code(), Some(0));
    let text = stdout(&o);
    let first_failure = text.lines().find(|l| l.starts_with("FAIL")).unwrap();
    assert!(first_failure.contains("sec2-f-ideal"), "{text}");
    assert!(first_failure.contains("1 2 is not a facet"), "{first_failure}");
}

#[test]
fn swapped_facet_is_named() {
    let dir = corrupted_fixtures("neg-swap", "123", "124");
    let o = fcx(&["verify", "paper", "--fixtures", &dir.display().to_string(), "--only", "sec2-disjoint"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("facet 124 and its complement 356 are both facets"));
}
