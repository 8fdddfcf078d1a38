//! End-to-end CLI runs. JSON outputs are compared against files in
//! `tests/golden/`; set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use fillcheck::cli::{run, Outcome, EXIT_OK, EXIT_USAGE};

fn fc(args: &str) -> Outcome {
    run(std::iter::once("fillcheck").chain(args.split_whitespace()))
}

fn golden(name: &str, args: &str) {
    let out = fc(args);
    assert_eq!(out.code, EXIT_OK, "{args}: {}", out.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out.stdout, expected, "{args} drifted from {name}");
}

#[test]
fn golden_json_outputs() {
    golden("alex_knm_2_1.json", "alex knm:2,1 --format json");
    golden("dinv_k2b_5_5.json", "dinv k2b:5,5 3 3 --format json");
    golden("dinv_knm_3_1.json", "dinv knm:3,1 10 --format json");
    golden("check_knm_3_1.json", "check knm:3,1 --format json");
    golden("check_ln_2.json", "check Ln:2 --p1 2 --p2 6 --format json");
    golden("slopes_torus_5_3.json", "slopes torus:5,3 --format json");
    golden("reproduce_k55.json", "reproduce --scope k55 --format json");
}

#[test]
fn alex_reports_agreement() {
    let out = fc("alex knm:2,1");
    assert_eq!(out.code, EXIT_OK);
    assert!(out
        .stdout
        .contains("closed form: t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4"));
    assert!(out.stdout.ends_with("AGREE\n"));
    assert!(fc("alex torus:2,3").stdout.contains("closed form: t - 1 + t^-1"));
    let sum = fc("alex sum:torus:2,3+torus:2,3");
    assert!(sum.stdout.contains("t^2 - 2*t + 3 - 2*t^-1 + t^-2"));
    assert!(fc("alex Ln:4").stdout.contains("recursion vs closed form: AGREE"));
}

#[test]
fn dinv_tables() {
    let out = fc("dinv knm:3,1 10");
    let rows: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with("i = ")).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.contains(": -")));
    let unknot = fc("dinv torus:unknot 5");
    assert!(unknot.stdout.contains("i = 0: 1  <- max"));
    assert!(unknot.stdout.contains("i = 2: -1/5"));
    let k55 = fc("dinv k2b:5,5 3 3");
    assert!(k55.stdout.contains("(0,0): -1\n"));
    assert!(k55.stdout.contains("max d = -1/3"));
}

#[test]
fn rationals_are_never_decimal() {
    for args in ["dinv knm:4,2 20", "check kpnm:3,2", "slopes torus:7,4", "dinv Ln:3 4 7"] {
        let out = fc(args);
        assert_eq!(out.code, EXIT_OK, "{args}: {}", out.stderr);
        assert!(
            !out.stdout.chars().any(|c| c == '.'),
            "{args} printed a decimal:\n{}",
            out.stdout
        );
    }
}

#[test]
fn check_verdicts() {
    let out = fc("check knm:3,1");
    assert!(out.stdout.contains("nonfillable [9, 10]"));
    assert!(out.stdout.contains("stein (-inf, 9)"));
    assert!(out.stdout.contains("stein [13, inf)"));
    let ln2 = fc("check Ln:2 --p1 2 --p2 6");
    assert!(ln2.stdout.contains("nonfillable {6}"));
    let ln3 = fc("check Ln:3 --p1 2 --p2 8");
    assert_eq!(ln3.code, EXIT_OK);
    assert!(ln3.stdout.contains("inapplicable"));
    assert!(!ln3.stdout.contains("nonfillable"));
    assert!(fc("check knm:3,1 --slope 19/2")
        .stdout
        .contains("r = 19/2 lies in the nonfillable window"));
}

#[test]
fn slopes_output() {
    let out = fc("slopes torus:3,2");
    assert!(out.stdout.contains("m = 4\n"));
    assert!(out.stdout.contains("Sfc = 4 [torus-knot-sfc]"));
    assert!(fc("slopes negtorus:3,5").stdout.contains("Sfc = -15"));
    assert!(fc("slopes unknot").stdout.contains("Sfc = -1"));
}

#[test]
fn reproduce_passes() {
    let out = fc("reproduce --scope knot-negativity --grid n=2..8,m=1..5 --jobs 2");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("PASS knot-negativity"));
    let all = fc("reproduce");
    assert_eq!(all.code, EXIT_OK, "{}", all.stdout);
    assert!(all.stdout.contains("8/8 scopes passed"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        "alex knot:1,2",
        "dinv knm:3,1 7/2",
        "dinv knm:3,1 0",
        "dinv k2b:5,5 3",
        "check Ln:2 --p1 2",
        "check knm:3,1 --p1 2 --p2 3",
        "slopes Ln:2",
        "reproduce --scope nonsense",
        "reproduce --grid n=0..3",
        "reproduce --jobs 0",
        "frobnicate",
    ] {
        let out = fc(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
    let pointer = fc("dinv knm:3,1 7/2");
    assert!(pointer.stderr.contains("--slope 7/2"));
}

#[test]
fn help_and_version_exit_zero() {
    let help = fc("--help");
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("reproduce"));
    assert_eq!(fc("--version").code, EXIT_OK);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("fillcheck-out-{}.json", std::process::id()));
    let out = run([
        "fillcheck",
        "slopes",
        "torus:3,2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    let written: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written["invariants"]["m_value"], "4/1");
    assert_eq!(written["sfc"]["kind"], "exact");
}
