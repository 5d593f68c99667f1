use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn powerag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powerag")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn h4(dir: &Path) -> String {
    write(dir, "h4.toml", "curve = \"hermitian\"\nq = 4\ngamma = 15\n[field]\np = 2\nm = 4\n")
}

#[test]
fn radius_prints_both_values_and_modulus() {
    let dir = TempDir::new().unwrap();
    let cfg = h4(dir.path());
    let o = powerag(&["radius", "--config", &cfg, "--ell", "4", "--s", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("z^4+z+1"), "{out}");
    assert!(out.contains("radius_exact: 29"));
    assert!(out.contains("radius_closed: 30"));
    let only = stdout(&powerag(&["radius", "--config", &cfg, "--ell", "4", "--s", "2", "--exact"]));
    assert!(only.contains("radius_exact: 29") && !only.contains("radius_closed"));
}

#[test]
fn encode_then_decode_with_errors() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "rs.json", r#"{"curve": "rational", "field": {"p": 2, "m": 4}, "gamma": 4}"#);
    let msg = write(dir.path(), "msg.txt", "1,2,3,4,5\n");
    let o = powerag(&["encode", "--config", &cfg, "--message", &msg]);
    assert!(o.status.success());
    let mut word: Vec<u32> = stdout(&o).trim().split(',').map(|t| t.parse().unwrap()).collect();
    assert_eq!(word.len(), 16);
    for i in [0, 5, 9, 12] {
        word[i] ^= 7;
    }
    let text = word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let recv = write(dir.path(), "r.txt", &text);
    for mode in ["fixed", "iterative"] {
        let o = powerag(&["decode", "--config", &cfg, "--received", &recv, "--ell", "2", "--s", "1", "--mode", mode]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o).trim(), "1,2,3,4,5");
    }
}

#[test]
fn decoding_failure_is_reported() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "rs.toml", "curve = \"rational\"\nq = 16\ngamma = 4\n");
    let recv = write(dir.path(), "r.txt", "1,2,4,8,3,6,12,11,5,10,7,14,15,13,9,1");
    let o = powerag(&["decode", "--config", &cfg, "--received", &recv, "--ell", "1", "--s", "1"]);
    assert_eq!(stdout(&o).trim(), "decoding failure: no_unique_kernel");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_writes_csv_and_markdown() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "h2.toml", "curve = \"hermitian\"\nq = 2\ngamma = 3\n");
    let csv = dir.path().join("report.csv");
    let args = |out: &str, fmt: &str| {
        powerag(&[
            "simulate", "--config", &cfg, "--ell", "2", "--s", "1", "--tau", "0,1", "--trials", "10", "--seed", "3",
            "--out", out, "--format", fmt,
        ])
    };
    assert!(args(csv.to_str().unwrap(), "csv").status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(
        lines[0],
        "curve,q,gamma,n,k,dstar,ell,s,tau,tau_max_exact,trials,successes,failures,miscorrections,ofr"
    );
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("hermitian,2,3,8,3,5,2,1,0,"));
    assert!(lines[1].ends_with(",10,10,0,0,0.0000"));

    let md = dir.path().join("report.md");
    assert!(args(md.to_str().unwrap(), "markdown").status.success());
    assert!(fs::read_to_string(&md).unwrap().contains("| H_2 | 2^2 | 3 | 8 | 3 | 5 | 2 | 1 | 0 |"));
}

#[test]
fn bad_inputs_fail_cleanly() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "bad.toml", "curve = \"hermitian\"\nq = 4\ngamma = 15\n[field]\np = 3\nm = 2\n");
    let o = powerag(&["radius", "--config", &cfg, "--ell", "4", "--s", "2"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
    let cfg = h4(dir.path());
    let short = write(dir.path(), "r.txt", "1,2,3");
    let o = powerag(&["decode", "--config", &cfg, "--received", &short, "--ell", "4", "--s", "2"]);
    assert!(!o.status.success());
    let o = powerag(&["radius", "--config", &cfg, "--ell", "2", "--s", "3"]);
    assert!(!o.status.success());
}
