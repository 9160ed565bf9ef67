use std::path::Path;
use std::process::{Command, Output};

fn polyb(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyb"))
        .args(args)
        .env("POLYB_CACHE_DIR", cache)
        .output()
        .expect("polyb runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = polyb(dir.path(), args);
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn compute_examples() {
    assert_eq!(
        stdout_of(&["compute", "bhat", "--n", "2", "--k", "2", "--m", "0"]),
        "14\n"
    );
    assert_eq!(
        stdout_of(&["compute", "cpoly", "--n", "2", "--k", "2"]),
        "2*x^2 + 15*x + 14\n"
    );
    assert_eq!(
        stdout_of(&["compute", "tpoly2", "--n", "2", "--k", "2"]),
        "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6\n"
    );
    assert_eq!(stdout_of(&["compute", "genocchi", "--n", "6"]), "-3\n");
    assert_eq!(stdout_of(&["compute", "gandhi", "--n", "5"]), "0\n");
}

#[test]
fn methods_agree() {
    for target in ["bhat", "cpoly", "tpoly"] {
        let outputs: Vec<String> = ["closed", "recurrence", "enumeration"]
            .iter()
            .map(|m| {
                stdout_of(&[
                    "compute", target, "--n", "3", "--k", "2", "--m", "1", "--method", m,
                ])
            })
            .collect();
        assert_eq!(outputs[0], outputs[1], "{target}");
        assert_eq!(outputs[0], outputs[2], "{target}");
    }
}

#[test]
fn compute_json_record() {
    let out = stdout_of(&[
        "--format", "json", "compute", "bhat", "--n", "2", "--k", "2", "--m", "0",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["target"], "bhat");
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["value"], "14");
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout_of(&["enumerate", "callan", "--n", "2", "--k", "2"]),
        "14\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "barred", "--n", "2", "--k", "2", "--m", "1"]),
        "31\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "tableaux", "--n", "2", "--k", "2", "--count"]),
        "31\n"
    );
    assert_eq!(
        stdout_of(&[
            "enumerate",
            "barred",
            "--n",
            "3",
            "--k",
            "1",
            "--m",
            "2",
            "--count"
        ]),
        "22\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "callan", "--n", "0", "--k", "0"]),
        "1\n"
    );
}

#[test]
fn enumerate_lists() {
    let out = stdout_of(&["enumerate", "callan", "--n", "1", "--k", "2", "--list"]);
    assert_eq!(out.lines().count(), 4);
    let out = stdout_of(&[
        "--format",
        "csv",
        "enumerate",
        "tableaux",
        "--n",
        "1",
        "--k",
        "2",
        "--list",
    ]);
    assert_eq!(out.lines().next(), Some("index,item"));
    assert_eq!(out.lines().count(), 8);
    let out = stdout_of(&[
        "--format",
        "json",
        "enumerate",
        "barred",
        "--n",
        "1",
        "--k",
        "1",
        "--m",
        "2",
        "--list",
    ]);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let bars: Vec<u64> = serde_json::from_value(v["bars"].clone()).unwrap();
        assert_eq!(bars.iter().sum::<u64>(), 2);
        assert_eq!(bars.len(), v["ordinary"].as_array().unwrap().len() + 1);
    }
}

#[test]
fn caps_are_enforced() {
    let (code, _, err) = run(&["enumerate", "tableaux", "--n", "5", "--k", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("n*k <= 16"), "{err}");
    let (code, _, err) = run(&[
        "compute",
        "cpoly",
        "--n",
        "6",
        "--k",
        "5",
        "--method",
        "enumeration",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("n+k <= 10"), "{err}");
    assert_eq!(
        stdout_of(&[
            "--unsafe-cap",
            "enumerate",
            "tableaux",
            "--n",
            "1",
            "--k",
            "17"
        ]),
        "262143\n"
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["compute", "bhat", "--n", "2"]).0, 2);
    assert_eq!(
        run(&[
            "compute",
            "tpoly2",
            "--n",
            "2",
            "--k",
            "2",
            "--method",
            "recurrence"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&["compute", "bhat", "--n", "2", "--k", "-1", "--m", "0"]).0,
        2
    );
    assert_eq!(run(&["--jobs", "0", "verify", "all"]).0, 2);
    assert_eq!(run(&["verify", "NO_SUCH_IDENTITY"]).0, 2);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "all"]);
    assert_eq!(code, 0);
    assert!(
        out.lines().take(18).all(|l| l.starts_with("PASS ")),
        "{out}"
    );
    assert_eq!(
        run(&[
            "verify",
            "os_theorem",
            "--max-n",
            "3",
            "--max-k",
            "3",
            "--max-m",
            "4"
        ])
        .0,
        0
    );
    assert_eq!(run(&["verify", "PERM_WEIGHT", "--max-n", "12"]).0, 2);
}

#[test]
fn verify_json() {
    let out = stdout_of(&[
        "--format", "json", "verify", "DIAG_SUM", "--max-n", "3", "--max-k", "3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["name"], "DIAG_SUM");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["cases_checked"], 16);
}

#[test]
fn conjecture_sweep_passes() {
    let (code, out, _) = run(&["conjecture"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("asserted cells (2,2) (3,2) (2,3): pass"),
        "{out}"
    );
    assert!(!out.contains('X'));
    let (code, out, _) = run(&["conjecture", "--max-n", "5", "--max-k", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains('-'), "cells beyond the cap are skipped: {out}");
}

#[test]
fn table_entries() {
    let out = stdout_of(&[
        "--format", "csv", "table", "bhat", "--max-n", "3", "--max-k", "3",
    ]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "n/k,0,1,2,3");
    assert_eq!(rows[3], "2,1,4,14,46");
    let via_rec = stdout_of(&[
        "--format",
        "csv",
        "table",
        "bhat",
        "--max-n",
        "3",
        "--max-k",
        "3",
        "--method",
        "recurrence",
    ]);
    assert_eq!(out, via_rec);
    let (code, _, _) = run(&["table", "genocchi", "--max-n", "2", "--max-k", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn oeis_fixtures() {
    let (code, out, _) = run(&["oeis"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
    assert_eq!(run(&["oeis", "--seq", "A000045"]).0, 2);
    assert_eq!(run(&["oeis", "--seq", "A001469", "--depth", "100000"]).0, 2);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = String::from_utf8(polyb(dir.path(), &["cache", "path"]).stdout).unwrap();
    assert_eq!(Path::new(path.trim()), dir.path().join("bhat.json"));

    let first = polyb(
        dir.path(),
        &[
            "compute",
            "bhat",
            "--n",
            "4",
            "--k",
            "3",
            "--m",
            "2",
            "--method",
            "recurrence",
        ],
    );
    assert!(first.status.success());
    assert!(dir.path().join("bhat.json").exists());
    let shown = String::from_utf8(polyb(dir.path(), &["cache", "show"]).stdout).unwrap();
    assert!(shown.contains("bhat/4/3/2 "), "{shown}");

    let second = polyb(
        dir.path(),
        &[
            "compute",
            "bhat",
            "--n",
            "4",
            "--k",
            "3",
            "--m",
            "2",
            "--method",
            "recurrence",
        ],
    );
    assert_eq!(first.stdout, second.stdout);

    std::fs::write(dir.path().join("bhat.json"), "{broken").unwrap();
    let third = polyb(
        dir.path(),
        &[
            "compute",
            "bhat",
            "--n",
            "4",
            "--k",
            "3",
            "--m",
            "2",
            "--method",
            "recurrence",
        ],
    );
    assert!(third.status.success());
    assert_eq!(first.stdout, third.stdout);

    let cleared = polyb(dir.path(), &["cache", "clear"]);
    assert!(cleared.status.success());
    assert!(!dir.path().join("bhat.json").exists());
}

#[test]
fn cache_flag_overrides_env() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let out = polyb(env_dir.path(), &["--cache-dir", flag, "cache", "path"]);
    let path = String::from_utf8(out.stdout).unwrap();
    assert_eq!(Path::new(path.trim()), flag_dir.path().join("bhat.json"));
}
