//! End-to-end checks of the binary: exit codes, config-echo headers,
//! determinism and the JSON report shape.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arith-harmonics"))
}

#[test]
fn sieve_dumps_rows() {
    let out = bin()
        .args(["sieve", "--kind", "mu", "--n-max", "10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# arith-harmonics sieve"));
    assert!(
        text.trim_end().ends_with("10,1"),
        "μ(10) = 1 row expected:\n{text}"
    );
    assert_eq!(text.lines().count(), 12); // header + column row + 10 rows
}

#[test]
fn sieve_jordan_value() {
    let out = bin()
        .args(["sieve", "--kind", "jordan", "--k", "2", "--n-max", "4"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.trim_end().ends_with("4,12"),
        "J₂(4) = 12 expected:\n{text}"
    );
}

#[test]
fn verify_exit_codes() {
    // strict pass → 0
    let out = bin()
        .args(["verify", "franel-sawtooth", "--r-max", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // heuristic-only (s = 1 Mangoldt case) → 3
    let out = bin()
        .args([
            "verify",
            "ramanujan-point",
            "--s",
            "1",
            "--k",
            "5",
            "--n-terms",
            "200000",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );

    // usage errors → 2
    let out = bin().args(["verify", "no-such-identity"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "franel-sawtooth", "--frobnicate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["sieve", "--kind", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_report_shape() {
    let out = bin()
        .args([
            "verify",
            "besicovitch",
            "--k",
            "4",
            "--s",
            "2",
            "--n-terms",
            "100000",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["subcommand"], "verify besicovitch");
    let reports = v["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r["name"].is_string());
        assert!(r["abs_error"].is_number());
        assert!(r["verdict"].is_string());
        assert!(r["params"].is_object());
        assert!(r["lhs"]["kind"].is_string());
    }
}

#[test]
fn figure_is_deterministic_with_footer() {
    let run = || {
        let out = bin()
            .args([
                "figure",
                "--which",
                "fig1",
                "--n-terms",
                "20000",
                "--grid-points",
                "50",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "byte-identical output for identical config");
    assert!(a.contains("rootsum_k=2,"));
    assert!(a.contains("rootsum_k=10,"));
    assert_eq!(a.matches("rootsum_k=").count(), 9);
}

#[test]
fn scan_emits_trend_rows() {
    let out = bin()
        .args([
            "scan",
            "--kind",
            "mu",
            "--shifts",
            "0",
            "--exponents",
            "2",
            "--m-limit",
            "40000",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("positive density"),
        "anti-example warning expected"
    );
    assert_eq!(
        text.lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with('M'))
            .count(),
        3
    );
}
