//! End-to-end tests of the command-line surface: flag handling, output
//! schemas, byte-stable JSON, and exit codes.

use std::process::{Command, Output};

fn realclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_json_fields() {
    let out = realclass(&["count", "--q", "3", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["q"], 3);
    assert_eq!(v["n"], 2);
    assert_eq!(v["gl_real"], "6");
    assert_eq!(v["in_sl"], "5");
    assert_eq!(v["pgl_real"], "5");
    assert_eq!(v["pgu_real"], "5");
    assert_eq!(v["per_type"]["(1,1)"]["real"], "4");
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["count", "--q", "3", "--n", "4", "--format", "json"],
        vec![
            "series", "--q", "2", "--order", "10", "--which", "real", "--format", "json",
        ],
        vec![
            "census", "--kind", "gl", "--n", "2", "--q", "3", "--format", "json",
        ],
        vec!["polys", "--q", "3", "--degree", "2", "--format", "json"],
    ] {
        let out = realclass(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let line = text.trim_end();
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line, "{args:?}");
    }
}

#[test]
fn identical_commands_produce_identical_bytes() {
    let args = ["count", "--q", "5", "--n", "6", "--format", "json"];
    let first = realclass(&args);
    let second = realclass(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn series_theorem_values() {
    let out = realclass(&[
        "series", "--q", "3", "--order", "2", "--which", "theorem", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().map(str::trim).collect();
    assert_eq!(lines, vec!["n,coefficient", "0,1", "1,1", "2,5"]);

    let out = realclass(&["series", "--q", "3", "--order", "2", "--which", "theorem"]);
    assert!(stdout(&out).contains("1,1,5"));
}

#[test]
fn census_json_values() {
    let out = realclass(&[
        "census", "--kind", "gl", "--n", "2", "--q", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["num_classes"], 8);
    assert_eq!(v["real_classes"], 6);
    assert_eq!(v["real_in_det_one"], 5);
    assert_eq!(v["projective_real"], 5);

    let out = realclass(&[
        "census", "--kind", "u", "--n", "1", "--q", "3", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.trim().lines();
    assert_eq!(
        lines.next().unwrap(),
        "kind,n,q,group_order,num_classes,real_classes,real_in_det_one,projective_real"
    );
    assert_eq!(lines.next().unwrap(), "u,1,3,4,4,2,1,1");
}

#[test]
fn polys_enumeration() {
    let out = realclass(&[
        "polys",
        "--q",
        "3",
        "--degree",
        "2",
        "--filter",
        "self-reciprocal",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 5); // header + the four matches
    assert_eq!(
        lines[0],
        "poly,self_reciprocal,self_conjugate,zeta_self_reciprocal"
    );
    assert!(lines.iter().any(|l| l.starts_with("t^2 + 1,true")));
    assert!(lines.iter().any(|l| l.starts_with("t^2 + 2,true")));
}

#[test]
fn verify_small_grid_exits_zero() {
    let out = realclass(&["verify", "--max-n", "6", "--q", "2,3", "--order", "12"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    let out = realclass(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = realclass(&["count", "--q", "6", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime power"));

    // guard violations surface the offending quantity
    let out = realclass(&["census", "--kind", "gl", "--n", "4", "--q", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

#[test]
fn guard_env_var_only_raises() {
    // a value below the default never tightens the guard
    let out = Command::new(env!("CARGO_BIN_EXE_realclass"))
        .args([
            "census", "--kind", "gl", "--n", "2", "--q", "3", "--format", "csv",
        ])
        .env("REALCLASS_GUARD", "10")
        .output()
        .expect("binary runs");
    assert!(out.status.success());

    // unparseable values are ignored
    let out = Command::new(env!("CARGO_BIN_EXE_realclass"))
        .args([
            "census", "--kind", "gl", "--n", "2", "--q", "3", "--format", "csv",
        ])
        .env("REALCLASS_GUARD", "not-a-number")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}

#[test]
fn polys_rejects_inconsistent_flags() {
    // self-conjugacy needs the quadratic extension
    let out = realclass(&[
        "polys",
        "--q",
        "3",
        "--degree",
        "2",
        "--filter",
        "self-conjugate",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // no non-square scalar exists for even q
    let out = realclass(&[
        "polys",
        "--q",
        "2",
        "--degree",
        "2",
        "--ambient",
        "u",
        "--filter",
        "zeta-self-reciprocal",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unitary_polys_use_the_extension_field() {
    let out = realclass(&[
        "polys",
        "--q",
        "3",
        "--degree",
        "1",
        "--ambient",
        "u",
        "--filter",
        "self-conjugate",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], 4); // the norm-one scalars give 4 linear polynomials
    assert_eq!(v["zeta"], "x");
}
