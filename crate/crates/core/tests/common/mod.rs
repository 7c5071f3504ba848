#![allow(dead_code)]

use std::path::PathBuf;

use szccs::construction::{build_code_set, CodeSet, Preset, PresetArgs};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn example1() -> CodeSet {
    build_code_set(&Preset::Example1.params(&PresetArgs::default()).unwrap()).unwrap()
}

/// Hand transcription of the worked example's 9 × 3 × 27 table.
pub fn table1() -> Vec<Vec<Vec<u8>>> {
    let text = std::fs::read_to_string(data_path("table1.txt")).unwrap();
    let mut codes: Vec<Vec<Vec<u8>>> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if line.starts_with("code") {
            codes.push(Vec::new());
        } else {
            let row = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
            codes.last_mut().unwrap().push(row);
        }
    }
    codes
}

pub fn phases(set: &CodeSet) -> Vec<Vec<Vec<u8>>> {
    set.codes()
        .iter()
        .map(|c| c.sequences().iter().map(|s| s.phases().to_vec()).collect())
        .collect()
}

/// Correlation at shift `tau` by brute force over every index pair `(a, b)`
/// with `b - a = tau`, returned as counts of `ω_q^(u_a - v_b)`.
pub fn naive_accf(u: &[u8], v: &[u8], q: u32, tau: i64) -> Vec<i64> {
    let mut counts = vec![0i64; q as usize];
    for (a, &x) in u.iter().enumerate() {
        for (b, &y) in v.iter().enumerate() {
            if b as i64 - a as i64 == tau {
                let d = (x as i64 - y as i64).rem_euclid(q as i64);
                counts[d as usize] += 1;
            }
        }
    }
    counts
}

/// Flock-summed brute-force correlation of codes `e` and `f`.
pub fn naive_flock(set: &CodeSet, e: usize, f: usize, tau: i64) -> Vec<i64> {
    let q = set.q();
    let mut total = vec![0i64; q as usize];
    for (u, v) in set.codes()[e].sequences().iter().zip(set.codes()[f].sequences()) {
        for (t, c) in total.iter_mut().zip(naive_accf(u.phases(), v.phases(), q, tau)) {
            *t += c;
        }
    }
    total
}

/// `Σ n_i ω_q^i` in floating point.
pub fn float_value(counts: &[i64]) -> (f64, f64) {
    let q = counts.len() as f64;
    counts.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, &n)| {
        let a = std::f64::consts::TAU * i as f64 / q;
        (re + n as f64 * a.cos(), im + n as f64 * a.sin())
    })
}

/// Shifts `|τ| ∈ {1..z} ∪ {n-z..n-1}`, both signs.
pub fn zone_shifts(n: i64, z: i64) -> Vec<i64> {
    (1..n).filter(|&a| a <= z || a >= n - z).flat_map(|a| [a, -a]).collect()
}
