use std::process::{Command, Output};
use std::time::Instant;

use tempfile::TempDir;

fn weylmin(args: &[&str], cache: Option<&TempDir>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_weylmin"));
    c.env_remove("WEYLMIN_CACHE_DIR");
    match cache {
        Some(d) => {
            c.arg("--cache-dir").arg(d.path());
        }
        None => {
            c.arg("--no-cache");
        }
    }
    c.args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ell_g2_json() {
    let o = weylmin(&["ell", "G2", "--format", "json"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "G2");
    assert_eq!(v["ell"], 3);
    assert_eq!(v["schemaVersion"], 1);
}

#[test]
fn f4_table_tsv() {
    let o = weylmin(&["ell-table", "F4", "--rows", "w1,w2,w3,w4,rho", "--cols", "same", "--format", "tsv"], None);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0].split('\t').count(), 6);
    assert!(lines.iter().skip(1).all(|l| l.split('\t').skip(1).all(|c| c.parse::<usize>().is_ok())));
}

#[test]
fn e7_witness() {
    let o = weylmin(&["witness-verify", "E7", "--h", "w7", "--lambda", "w7", "--word", "7,6,5,4,2,3,4,5,6,7"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "valid, length 10, pairing negative");
}

#[test]
fn usage_errors() {
    for (args, token) in [(&["ell", "D3"][..], "D3"), (&["ell-sd", "A2xH4"][..], "H4")] {
        let o = weylmin(args, None);
        assert_eq!(o.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&o.stderr).contains(token));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(weylmin(&["nonsense"], None).status.code(), Some(2));
    assert_eq!(weylmin(&["ell", "G2", "--lambda", "w1"], None).status.code(), Some(2));
    assert_eq!(weylmin(&["ell", "G2", "--h", "1,2,3"], None).status.code(), Some(2));
}

#[test]
fn empty_box_marker() {
    let o = weylmin(&["ell", "E6", "--h", "w2", "--lambda", "w2", "--depth-limit", "10", "--format", "tsv"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains(">=11"));
}

#[test]
fn deterministic_output() {
    let args = ["ell-table", "E6", "--format", "json"];
    assert_eq!(weylmin(&args, None).stdout, weylmin(&args, None).stdout);
}

#[test]
fn cache_round_trip() {
    let dir = TempDir::new().unwrap();
    let cold = weylmin(&["ell", "F4", "--format", "json"], Some(&dir));
    assert!(cold.status.success());
    assert!(dir.path().join("F4.json").exists());
    let warm = weylmin(&["ell", "F4", "--format", "json"], Some(&dir));
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(stdout(&cold), stdout(&weylmin(&["ell", "F4", "--format", "json"], None)));

    std::fs::write(dir.path().join("F4.json"), "garbage").unwrap();
    let again = weylmin(&["ell", "F4", "--format", "json"], Some(&dir));
    assert!(again.status.success());
    assert_eq!(again.stdout, cold.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
}

#[test]
fn no_cache_writes_nothing() {
    let dir = TempDir::new().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_weylmin"))
        .env("WEYLMIN_CACHE_DIR", dir.path())
        .args(["--no-cache", "ell", "B3"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn env_var_selects_cache() {
    let dir = TempDir::new().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_weylmin")).env("WEYLMIN_CACHE_DIR", dir.path()).args(["ell-sd", "C3"]).output().unwrap();
    assert!(o.status.success());
    assert!(dir.path().join("C3.json").exists());
}

#[test]
fn warm_cache_is_fast() {
    let dir = TempDir::new().unwrap();
    assert!(weylmin(&["ell", "E7"], Some(&dir)).status.success());
    let t = Instant::now();
    assert!(weylmin(&["ell", "E7"], Some(&dir)).status.success());
    assert!(t.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn criterion_commands() {
    let o = weylmin(&["check-ak", "E6", "--torus", "1", "--format", "json"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maxK"], 5);
    assert_eq!(v["sub"]["torusRank"], 1);

    let o = weylmin(&["check-sl2", "A1xA1", "--projects", "1,1", "--values", "3,3"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("lambda in LR0"));

    let o = weylmin(&["check-classical", "B2", "--sub-pos-roots", "1", "--self-dual", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["k"], 2);

    let o = weylmin(&["e8", "--ambient", "A300"], None);
    assert!(o.status.success());
}

#[test]
fn roots_listing() {
    let o = weylmin(&["roots", "G2", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 6);
}
