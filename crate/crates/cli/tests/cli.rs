use std::process::{Command, Output};

fn affclus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affclus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compat_worked_example() {
    let o = affclus(&["compat", "--type", "D3(2)", "--c", "1,2,3", "--alpha", "2,1,0", "--beta", "0,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("arrows:   (-1, 1)"), "{s}");
    assert!(s.contains("degree:   1"), "{s}");
}

#[test]
fn compat_json() {
    let o = affclus(&["compat", "--type", "D3(2)", "--alpha", "2,1,0", "--beta", "0,1,0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], "1");
    assert_eq!(v["forward"], "-1");
    assert_eq!(v["backward"], "1");
}

#[test]
fn expand_a11() {
    let o = affclus(&["expand", "--type", "A1(1)", "--c", "1,2", "--vector", "1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1·(1,0) + 1·(0,-1)");
}

#[test]
fn verify_g2_table_line() {
    let o = affclus(&["verify", "--type", "G2(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "Π̃_fin = {α1+α2}: OK"));
}

#[test]
fn exit_codes() {
    assert_eq!(affclus(&["compat", "--type", "D3(2)", "--alpha", "2,1", "--beta", "0,1,0"]).status.code(), Some(1));
    assert_eq!(affclus(&["compat", "--type", "Z3(1)", "--alpha", "1,0", "--beta", "0,1"]).status.code(), Some(1));
    assert_eq!(affclus(&["compat", "--alpha", "1,0"]).status.code(), Some(1));
    assert_eq!(affclus(&["expand", "--type", "A2(1)", "--c", "1,1,2", "--vector", "1,0,0"]).status.code(), Some(1));
    assert_eq!(affclus(&["compat", "--type", "A2(1)", "--alpha", "1,1,1", "--beta", "1,1,1"]).status.code(), Some(0));
    assert_eq!(affclus(&["compat", "--type", "A2(1)", "--alpha", "2,2,2", "--beta", "1,1,1"]).status.code(), Some(1));
}

#[test]
fn cartan_file_and_classify() {
    let dir = std::env::temp_dir().join(format!("affclus-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a11 = dir.join("a11.json");
    std::fs::write(&a11, r#"{"cartan": [[2,-2],[-2,2]]}"#).unwrap();
    let o = affclus(&["expand", "--cartan", a11.to_str().unwrap(), "--vector", "1,-1"]);
    assert_eq!(stdout(&o).trim(), "1·(1,0) + 1·(0,-1)");
    let a3 = dir.join("a3.json");
    std::fs::write(&a3, r#"{"cartan": [[2,-1,0],[-1,2,-1],[0,-1,2]]}"#).unwrap();
    let o = affclus(&["classify", "--cartan", a3.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("kind: Finite"));
    assert_eq!(affclus(&["phic", "--cartan", a3.to_str().unwrap()]).status.code(), Some(1));
    let svg = dir.join("d32.svg");
    let o = affclus(&["fan-svg", "--type", "D3(2)", "--depth", "4", "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("version=\"1.1\"") && text.trim_end().ends_with("</svg>"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exchange_from_negative_simples() {
    let o = affclus(&["exchange", "--type", "D3(2)", "--cluster", "-1,0,0;0,-1,0;0,0,-1", "--remove", "0,-1,0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["beta"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["tube_wall"], false);
}

#[test]
fn deterministic_output() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_affclus"))
            .args(["clusters", "--type", "B3(1)", "--depth", "3", "--json"])
            .env("CLUSTER_FAN_THREADS", "3")
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    assert!(!a.is_empty());
    assert_eq!(a, run());
}

#[test]
fn oracle_report() {
    let o = affclus(&["oracle", "--type", "A2(2)", "--depth", "5", "--check", "bijection,thm13", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(affclus(&["oracle", "--type", "A2(2)", "--check", "thm99"]).status.code(), Some(1));
}
