//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn gammacf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammacf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn stats_worked_example() {
    let out = gammacf(&["stats", "--perm", "9 3 7 4 6 10 5 8 1 2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["linear"]["drop"], 3);
    assert_eq!(doc["linear"]["fix"], 2);
    assert_eq!(doc["linear"]["inv"], 28);
    assert_eq!(doc["crossing"]["cros"], 5);
    assert_eq!(doc["crossing"]["nest"], 10);
}

#[test]
fn stats_colored_example() {
    let out = gammacf(&["stats", "--perm", "4 7^1 2 5^1 1^2 6 3", "--r", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["cros"], 6);
    assert_eq!(doc["colored"]["wexa"], 2);
    assert_eq!(doc["colored"]["csumd"], 2);
    assert_eq!(doc["weight"], "q^6 t^2 t~^2 w^2 w~ x y^2 y~^2");
}

#[test]
fn stats_rejects_bad_words() {
    let out = gammacf(&["stats", "--perm", "1 1 2"]);
    assert!(!out.status.success());
}

#[test]
fn bijection_roundtrip_through_file() {
    let out = gammacf(&["bijection", "--r", "3", "--perm", "4 7^1 2 5^1 1^2 6 3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let hist = lines.next().unwrap();
    let weight = lines.next().unwrap();
    assert_eq!(
        hist,
        "{\"steps\":[\"NE\",\"NE\",\"E\",\"E\",\"SE\",\"E\",\"SE\"],\"labels\":[[0,-2],[-1,0],[1,0],[-1,1],[2,2],[0,1],[1,1]],\"r\":3}"
    );
    assert_eq!(weight, "q^6 t^2 t~^2 w^2 w~ x y^2 y~^2");

    let path = std::env::temp_dir().join(format!("gammacf-hist-{}.json", std::process::id()));
    std::fs::write(&path, hist).unwrap();
    let back = gammacf(&["bijection", "--invert", "--history", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(back.status.success());
    assert_eq!(stdout(&back).trim(), "4 7^1 2 5^1 1^2 6 3");
}

#[test]
fn cfrac_named_and_custom_families() {
    let out = gammacf(&["cfrac", "--family", "derange-d", "--r", "2", "--order", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["moments"][3]["coeffs"], serde_json::json!([0, 8, 20, 1]));

    // b_h = 2h+1, lam_h = h^2 generates the factorials
    let out = gammacf(&[
        "cfrac",
        "--custom-b",
        "1,3,5,7,9",
        "--custom-lam",
        "1,4,9,16",
        "--order",
        "6",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let moments: Vec<i64> =
        (0..=6).map(|n| doc["moments"][n]["coeffs"][0].as_i64().unwrap()).collect();
    assert_eq!(moments, vec![1, 1, 2, 6, 24, 120, 720]);
}

#[test]
fn cfrac_rejects_short_coefficient_lists() {
    let out = gammacf(&["cfrac", "--custom-b", "1", "--custom-lam", "1", "--order", "9"]);
    assert!(!out.status.success());
}

#[test]
fn expand_both_bases_and_failure() {
    let out = gammacf(&["expand", "--coeffs", "1,11,11,1", "--basis", "gamma", "--d", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"basis\":\"gamma\",\"d\":3,\"gammas\":[1,8]}");

    let out = gammacf(&[
        "expand",
        "--coeffs",
        "0,1,15,57,87,57,15,1",
        "--basis",
        "sz",
        "--d",
        "4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"basis\":\"sz\",\"n\":4,\"coeffs\":[0,1,15,54,57]}");

    // t^2 about d/2 = 1 is asymmetric
    let out = gammacf(&["expand", "--coeffs", "0,0,1", "--basis", "gamma", "--d", "2"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not expressible"), "stderr: {err}");
}

#[test]
fn table_formats() {
    let out = gammacf(&["table", "--name", "gamma2", "--n", "6", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "6,0,1,53,184,95,15,1"));

    let out = gammacf(&["table", "--name", "D_poly", "--n", "4", "--r", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"][4]["entries"], serde_json::json!([0, 1, 15, 57, 87, 57, 15, 1]));

    let out = gammacf(&["table", "--name", "unknown", "--n", "3"]);
    assert!(!out.status.success());
}

#[test]
fn verify_single_and_exit_codes() {
    let out = gammacf(&["verify", "--identity", "inv-gamma", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS inv-gamma"));

    let out = gammacf(&["verify", "--identity", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(2));

    // S_10 exceeds the default budget
    let out = gammacf(&["verify", "--identity", "inv-gamma", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"), "stderr: {err}");

    // raising the cap admits S_9
    let out = gammacf(&["verify", "--identity", "inv-decomposition", "--n", "9", "--budget", "400000"]);
    assert!(out.status.success());
}

#[test]
fn verify_json_report_is_machine_readable() {
    let out = gammacf(&["verify", "--identity", "inv-de-values", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["all_pass"], true);
    assert_eq!(doc["reports"][0]["identity"], "inv-de-values");
    assert_eq!(doc["reports"][0]["status"], "pass");
}

#[test]
fn verify_list_names() {
    let out = gammacf(&["verify", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let names: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    assert!(names.contains(&"inv-gamma") && names.contains(&"bijection"));
}

#[test]
fn seed_env_controls_random_points() {
    let out = Command::new(env!("CARGO_BIN_EXE_gammacf"))
        .args(["verify", "--identity", "jacobi-rogers"])
        .env("GAMMACF_SEED", "42")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}
