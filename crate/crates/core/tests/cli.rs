mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::data_path;

fn szccs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szccs"))
        .args(args)
        .env_remove("SZCCS_OUT_DIR")
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn golden() -> String {
    data_path("example1_set.json").to_str().unwrap().to_owned()
}

/// Data rows of a profile CSV as `(shift, magnitude)`.
fn magnitudes(csv: &str) -> Vec<(i64, f64)> {
    csv.lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("shift"))
        .map(|l| {
            let mut f = l.split(',');
            (f.next().unwrap().parse().unwrap(), f.next().unwrap().parse().unwrap())
        })
        .collect()
}

#[test]
fn generate_example1_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("set.json");
    let o = szccs(&["generate", "--preset", "example1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    assert_eq!(text(&o.stdout).trim(), "(9,3,27,8) SZCCS, optimal");
    assert_eq!(fs::read(&out).unwrap(), fs::read(golden()).unwrap());
}

#[test]
fn generate_from_flags_and_stdout() {
    let o = szccs(&[
        "generate", "--p", "3", "--q", "3", "--m", "3", "--delta", "1", "--partition", "1,2", "--perm", "2,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, fs::read(golden()).unwrap());
    assert_eq!(text(&o.stderr).trim(), "(9,3,27,8) SZCCS, optimal");
}

#[test]
fn generate_ccc_summary() {
    let o = szccs(&["generate", "--preset", "ccc", "--p", "3", "--m", "3", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(text(&o.stderr).trim(), "(9,9,27) CCC, optimal");
}

#[test]
fn generate_rejects_composite_p() {
    let o = szccs(&["generate", "--p", "4", "--m", "3", "--partition", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o.stderr).contains("not prime"), "{}", text(&o.stderr));
}

#[test]
fn config_file_wins_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("params.json");
    fs::write(&cfg, r#"{"p": 3, "m": 3, "delta": 1, "partition": [[1, 2]], "perms": [[2, 1]]}"#).unwrap();
    let o = szccs(&["generate", "--p", "5", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o.stderr).contains("warning: config file sets p = 3"));
    assert_eq!(o.stdout, fs::read(golden()).unwrap());
}

#[test]
fn verify_exit_codes() {
    let g = golden();
    let o = szccs(&["verify", "--in", &g, "--type", "szccs", "--z", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["holds"], true);

    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("report.json");
    let o = szccs(&["verify", "--in", &g, "--z", "9", "--report", rep.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(report["violation_count"], 108);
    assert!(!report["violations"].as_array().unwrap().is_empty());

    assert_eq!(szccs(&["verify", "--in", &g, "--type", "zccs", "--z", "9"]).status.code(), Some(0));
    assert_eq!(szccs(&["verify", "--in", &g, "--type", "ccc"]).status.code(), Some(1));
    assert_eq!(szccs(&["verify", "--in", &g, "--z", "28"]).status.code(), Some(2));

    let full = fs::read_to_string(&g).unwrap();
    let cut = dir.path().join("cut.json");
    fs::write(&cut, &full[..full.len() / 2]).unwrap();
    assert_eq!(szccs(&["verify", "--in", cut.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(szccs(&["verify", "--in", "/nonexistent/set.json"]).status.code(), Some(2));
}

#[test]
fn generate_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("set.json");
    let path = out.to_str().unwrap();
    let o = szccs(&["generate", "--preset", "single_chain", "--p", "5", "--m", "3", "--delta", "1", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(text(&o.stdout).trim(), "(25,5,125,24) SZCCS, optimal");
    let o = szccs(&["verify", "--in", path]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["kind_claimed"], serde_json::json!({"set_type": "szccs", "K": 25, "M": 5, "N": 125, "Z": 24}));
}

#[test]
fn correlate_reproduces_figures() {
    let g = golden();
    let o = szccs(&["correlate", "--in", &g, "--e", "0", "--f", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = text(&o.stdout);
    assert!(csv.starts_with("shift,magnitude,real,imag\n"));
    let rows = magnitudes(&csv);
    assert_eq!(rows.len(), 53);
    for (tau, mag) in rows {
        match tau.abs() {
            0 => assert_eq!(mag, 81.0),
            1..=8 | 19..=26 => assert_eq!(mag, 0.0, "τ = {tau}"),
            _ => {}
        }
    }
    let o = szccs(&["correlate", "--in", &g, "--e", "2", "--f", "8", "--annotate"]);
    let csv = text(&o.stdout);
    assert!(csv.starts_with("# zone,front,-8,8\n# zone,tail,-26,-19\n# zone,tail,19,26\n"));
    for (tau, mag) in magnitudes(&csv) {
        if tau.abs() <= 8 || tau.abs() >= 19 {
            assert_eq!(mag, 0.0, "τ = {tau}");
        }
    }
    let o = szccs(&["correlate", "--in", &g, "--e", "2", "--f", "8", "--float"]);
    let csv = text(&o.stdout);
    assert!(csv.starts_with("# mode,float,tolerance,8.1e-05\n"));
    for (tau, mag) in magnitudes(&csv) {
        if tau.abs() <= 8 || tau.abs() >= 19 {
            assert!(mag < 8.1e-5, "τ = {tau}");
        }
    }
}

#[test]
fn correlate_index_out_of_range() {
    let o = szccs(&["correlate", "--in", &golden(), "--e", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o.stderr).contains("out of range"));
}

fn sweep_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

#[test]
fn sweep_special_cases() {
    let o = szccs(&["sweep", "--p", "3", "--m", "3", "--m", "4", "--delta", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    let rows = sweep_rows(&text(&o.stdout));
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r[3] == "0" && r[17] == "true" && r[13] == "true"));

    let o = szccs(&["sweep", "--p", "2", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = sweep_rows(&text(&o.stdout));
    assert!(rows.iter().all(|r| r[18] == "true"));
}

#[test]
fn sweep_guard_and_json() {
    let o = szccs(&["sweep", "--p", "5", "--m", "7", "--max-len", "100000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o.stderr).contains("desk-scale"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    fs::write(&cfg, r#"{"primes": [2], "m_values": [3], "lambdas": ["zero"]}"#).unwrap();
    let out = dir.path().join("sweep.json.out.json");
    let o = szccs(&["sweep", "--config", cfg.to_str().unwrap(), "--p", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o.stderr).contains("warning: config file sets primes"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["summary"]["all_ok"], true);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["p"] == 2));
}

fn read_all(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

#[test]
fn demo_writes_expected_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_szccs"))
        .args(["demo", "example1"])
        .env("SZCCS_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    let files = read_all(dir.path());
    let names: Vec<&str> = files.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["fig1_aacf_a0.csv", "fig2_accf_a2_a8.csv", "report.json", "set.json"]);
    assert_eq!(files[3].1, fs::read(golden()).unwrap());
    assert_eq!(szccs(&["demo", "example2"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(szccs(&[]).status.code(), Some(2));
    assert_eq!(szccs(&["verify", "--type", "bogus", "--in", "x"]).status.code(), Some(2));
    assert_eq!(szccs(&["--help"]).status.code(), Some(0));
}
