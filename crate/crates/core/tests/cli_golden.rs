mod common;

use common::{check_golden, fixture, grainy, GOLDEN_CASES};
use grainy::GrainyFuzzySet;

#[test]
fn all_goldens_match() {
    let failures: Vec<String> = GOLDEN_CASES
        .iter()
        .filter_map(|c| check_golden(c).err())
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_repeatable() {
    for args in [
        &["hasse", "3"][..],
        &["laws", "3", "--format", "machine"],
        &["table", "4"],
    ] {
        assert_eq!(grainy(args).stdout, grainy(args).stdout);
    }
}

#[test]
fn table_4_has_31_rows() {
    let out = grainy(&["table", "4", "--format", "machine"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 31);
}

#[test]
fn table_3_contains_paper_row() {
    let out = String::from_utf8(grainy(&["table", "3"]).stdout).unwrap();
    assert!(out.lines().any(|l| l == "[1,[1,[1,0]]] | 111 | 1°2°3°"));
}

#[test]
fn op_add_of_a_set_with_itself_is_the_set() {
    let out = grainy(&[
        "fuzzy",
        "op",
        "add",
        "fixtures/high_educated.gfs",
        "fixtures/high_educated.gfs",
    ]);
    assert!(out.status.success());
    let result = GrainyFuzzySet::load(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let original =
        GrainyFuzzySet::load(&std::fs::read_to_string(fixture("high_educated.gfs")).unwrap())
            .unwrap();
    assert_eq!(result.name(), "HIGH_EDUCATED⊕HIGH_EDUCATED");
    assert!(result.same_memberships(&original));

    let canonical = grainy(&[
        "fuzzy",
        "show",
        "--format",
        "machine",
        "fixtures/high_educated.gfs",
    ]);
    let named = grainy(&[
        "fuzzy",
        "op",
        "add",
        "fixtures/high_educated.gfs",
        "fixtures/high_educated.gfs",
        "--name",
        "HIGH_EDUCATED",
    ]);
    assert_eq!(named.stdout, canonical.stdout);
}

#[test]
fn supp_output_file_round_trips_through_check_supp() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("low.gfs");
    let out_str = out_path.to_str().unwrap();
    let written = grainy(&[
        "fuzzy",
        "supp",
        "fixtures/very_high.gfs",
        "1°",
        "--output",
        out_str,
    ]);
    assert!(written.status.success());
    assert!(written.stdout.is_empty());
    let check = grainy(&[
        "fuzzy",
        "check-supp",
        "fixtures/very_high.gfs",
        out_str,
        "1°",
    ]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn exit_status_contract() {
    // verification failure
    let wrong_pair = grainy(&[
        "fuzzy",
        "check-supp",
        "fixtures/high_educated.gfs",
        "fixtures/very_low.gfs",
        "1°",
    ]);
    assert_eq!(wrong_pair.status.code(), Some(1));
    // wrong k
    let wrong_k = grainy(&[
        "fuzzy",
        "check-supp",
        "fixtures/high_educated.gfs",
        "fixtures/low_educated.gfs",
        "2°",
    ]);
    assert_eq!(wrong_k.status.code(), Some(1));
    // parse error with caret
    let bad = grainy(&["eval", "3°1° + 1°"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(bad.stderr).unwrap(),
        "error: positions must increase (1° after 3°)\n  3°1° + 1°\n    ^\n"
    );
    // usage error
    assert_eq!(grainy(&["laws"]).status.code(), Some(2));
    assert_eq!(grainy(&["hasse", "9"]).status.code(), Some(2));
    // `false` is a successful evaluation
    let f = grainy(&["eval", "1° >= 2°"]);
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(f.stdout, b"false\n");
}

#[test]
fn domain_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("other.gfs");
    std::fs::write(&other, "set OTHER\n8\t1°\n9\t1°\n").unwrap();
    let out = grainy(&[
        "fuzzy",
        "op",
        "mul",
        "fixtures/high_educated.gfs",
        other.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("domains differ at index 2"));
}

#[test]
fn load_error_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.gfs");
    std::fs::write(&dup, "set A\n16\t1°\n16\t2°\n").unwrap();
    let out = grainy(&["fuzzy", "show", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("line 3: duplicate label '16'"));
}

#[test]
fn cap_can_be_raised_by_environment() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_grainy"))
        .env("GRAINY_MAXLEN_CAP", "6")
        .args(["hasse", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let nodes = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .filter(|l| l.ends_with("\";") && !l.contains("->"))
        .count();
    assert_eq!(nodes, 127);
}

#[test]
fn laws_force_flag_bypasses_cap() {
    let run = |force: bool| {
        let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_grainy"));
        cmd.env("GRAINY_MAXLEN_CAP", "1")
            .args(["laws", "2", "--format", "machine"]);
        if force {
            cmd.arg("--force");
        }
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(false), Some(2));
    assert_eq!(run(true), Some(0));
}
