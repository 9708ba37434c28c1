use std::process::Command;

fn fockforge(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fockforge")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn query_commands() {
    assert_eq!(fockforge(&["lr", "--lam", "2,1", "--mu", "1", "--nu", "2"]).1.trim(), "1");
    assert_eq!(fockforge(&["socle", "--lam", "1", "--mu", "1", "--layer", "1"]).1.trim(), "∅;∅: 1");
    assert_eq!(fockforge(&["vertex-apply", "--a", "-1", "--input", "∅"]).1.trim(), "0");
    assert_eq!(fockforge(&["vertex-apply", "--a", "2", "--input", "-"]).1.trim(), "s[2]");
    assert_eq!(fockforge(&["schur-expand", "--power", "2"]).1.trim(), "-s[1,1] + s[2]");
    let (_, json, _) = fockforge(&["--format", "json", "socle", "--lam", "1", "--mu", "1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v, serde_json::json!({"∅;∅": 1, "1;1": 1}));
}

#[test]
fn verify_and_exit_codes() {
    let (code, out, _) = fockforge(&["verify", "--case", "heisenberg", "--param", "m=3", "--param", "k=3", "--window", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
    let (code, _, err) = fockforge(&["verify", "--case", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown identity case"));
    let (code, _, _) = fockforge(&["verify", "--case", "koz2", "--param", "k_max"]);
    assert_eq!(code, 2);
    let (code, _, _) = fockforge(&["run-all", "--window", "-1"]);
    assert_eq!(code, 2);
    let (code, _, err) = fockforge(&["lr", "--lam", "1,2", "--mu", "1", "--nu", "1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["--format", "json", "run-all", "--window", "3", "--bound", "2"];
    let (code, first, _) = fockforge(&args);
    assert_eq!(code, 0);
    let (_, second, _) = fockforge(&args);
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let reports = v.as_array().unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r["case"]["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for r in reports {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["case", "status", "checked", "counterexample"]);
    }
}

#[test]
fn thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_fockforge"))
        .args(["verify", "--case", "v3", "--window", "3", "--bound", "2"])
        .env("FOCKFORGE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_fockforge"))
        .args(["list"])
        .env("FOCKFORGE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
