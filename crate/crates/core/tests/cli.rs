use std::process::{Command, Output};

fn permcluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcluster"))
        .args(args)
        .env_remove("PERMCLUSTER_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_reproduction_exits_zero() {
    for id in ["2", "6"] {
        let o = permcluster(&["table", id]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
}

#[test]
fn invalid_table_lists_valid_ids() {
    let o = permcluster(&["table", "12"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("1..=11"));
}

#[test]
fn closed_form_prints_table_one() {
    let o = permcluster(&[
        "poly",
        "--pattern",
        "123",
        "--family",
        "ides",
        "--n",
        "0..9",
        "--method",
        "closed",
        "--s",
        "0",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[3], "3\t4*t^2 + t^3");
    assert_eq!(
        lines[9],
        "9\t4*t^2 + 761*t^3 + 11610*t^4 + 39275*t^5 + 37450*t^6 + 9774*t^7 + 502*t^8 + t^9"
    );
}

#[test]
fn verify_suites_report_pass() {
    for args in [
        &["verify", "carlitz", "--n", "5", "--k", "6"][..],
        &["verify", "fqsym-identity", "--pattern", "123", "--N", "6"][..],
        &["verify", "claims", "--which", "ipk", "--m", "4", "--N", "9"][..],
    ] {
        let o = permcluster(args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
}

#[test]
fn cache_env_gives_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "poly",
        "--pattern",
        "1234",
        "--family",
        "ilpk",
        "--n",
        "0..7",
        "--format",
        "csv",
    ];
    let plain = permcluster(&args);
    let cached = || {
        Command::new(env!("CARGO_BIN_EXE_permcluster"))
            .args(args)
            .env("PERMCLUSTER_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let cold = cached();
    let warm = cached();
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 8);
}

#[test]
fn brute_cap_needs_override() {
    let o = permcluster(&["poly", "--pattern", "123", "--n", "11", "--s", "0"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-large"));
}
