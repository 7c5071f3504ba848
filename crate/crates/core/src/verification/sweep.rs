//! Conformance sweep: build every set in a parameter grid and verify it at
//! its claimed width, with the special-case checks for `δ = 0`, `p = 2` and
//! single-chain instances.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::checked_pow;
use crate::construction::{build_code_set, RawParams};
use crate::verification::{check_optimality, SetKind, Verifier};
use crate::{is_prime, ParamError, Result, DESK_SCALE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PermChoice {
    /// Each chain visits its part in ascending order.
    Identity,
    /// Each chain visits its part in descending order.
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaChoice {
    Zero,
    /// One seeded draw per instance.
    Random,
}

impl fmt::Display for PermChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PermChoice::Identity => "identity",
            PermChoice::Reversed => "reversed",
        })
    }
}

impl fmt::Display for LambdaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaChoice::Zero => "zero",
            LambdaChoice::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub primes: Vec<u32>,
    pub m_values: Vec<usize>,
    /// Instances with `p^m` above this are skipped.
    pub max_len: u64,
    /// `None` means every `δ` in `0..m`.
    pub deltas: Option<Vec<usize>>,
    pub max_parts: usize,
    pub perms: Vec<PermChoice>,
    pub lambdas: Vec<LambdaChoice>,
    /// `q = q_factor · p`.
    pub q_factor: u32,
    pub seed: u64,
    pub allow_large: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            primes: vec![2, 3, 5],
            m_values: vec![3, 4, 5, 6],
            max_len: 729,
            deltas: None,
            max_parts: 3,
            perms: vec![PermChoice::Identity, PermChoice::Reversed],
            lambdas: vec![LambdaChoice::Zero, LambdaChoice::Random],
            q_factor: 1,
            seed: 20_240_229,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: u32,
    pub q: u32,
    pub m: usize,
    pub delta: usize,
    pub k: usize,
    pub partition_id: usize,
    pub partition: String,
    pub perm_id: PermChoice,
    pub lambda_id: LambdaChoice,
    #[serde(rename = "K")]
    pub set_size: usize,
    #[serde(rename = "M")]
    pub flock_size: usize,
    #[serde(rename = "N")]
    pub len: usize,
    #[serde(rename = "Z")]
    pub zcz: usize,
    pub pass: bool,
    #[serde(rename = "achieved_symmetric_Z")]
    pub achieved_symmetric_z: usize,
    #[serde(rename = "achieved_front_Z")]
    pub achieved_front_z: usize,
    pub optimal: bool,
    pub is_ccc: bool,
    /// `p = 2` only: ZCCS check at width `2^(m-δ)`.
    pub zccs_at_2pow: Option<bool>,
    /// `k = 1` only: `(K, M) = (p^(δ+1), p)`.
    pub chain_shape_ok: Option<bool>,
    /// Whether all sums vanish at `|τ| ∈ {N - p^(m-δ) - 1, N - p^(m-δ)} ∩ [1, N-1]`,
    /// two shifts just outside the tail zone. `None` if that set is empty.
    pub proof_tail_extra_zero: Option<bool>,
}

impl SweepRow {
    /// Passes at the claimed width, is optimal, and meets every special-case check.
    pub fn ok(&self) -> bool {
        self.pass
            && self.optimal
            && (self.delta != 0 || self.is_ccc)
            && self.zccs_at_2pow.unwrap_or(true)
            && self.chain_shape_ok.unwrap_or(true)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub passed: usize,
    pub optimal: usize,
    pub ccc_instances: usize,
    pub ccc_detected: usize,
    pub binary_instances: usize,
    pub binary_zccs_ok: usize,
    pub single_chain_instances: usize,
    pub single_chain_ok: usize,
    pub proof_tail_checked: usize,
    pub proof_tail_zero: usize,
    pub all_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub summary: SweepSummary,
    pub rows: Vec<SweepRow>,
}

/// Set partitions of `{1..n}` into at most `max_parts` blocks, in
/// lexicographic order of their restricted growth strings. Blocks are listed
/// by smallest element, elements ascending.
pub fn set_partitions(n: usize, max_parts: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(rgs: &mut Vec<usize>, n: usize, max_parts: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if rgs.len() == n {
            let blocks = rgs.iter().max().map_or(0, |b| b + 1);
            let mut parts = vec![Vec::new(); blocks];
            for (i, &b) in rgs.iter().enumerate() {
                parts[b].push(i + 1);
            }
            out.push(parts);
            return;
        }
        let used = rgs.iter().max().map_or(0, |b| b + 1);
        for b in 0..=used.min(max_parts.saturating_sub(1)) {
            rgs.push(b);
            go(rgs, n, max_parts, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if max_parts > 0 {
        go(&mut Vec::with_capacity(n), n, max_parts, &mut out);
    }
    out
}

fn partition_label(parts: &[Vec<usize>]) -> String {
    parts
        .iter()
        .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("|")
}

impl SweepConfig {
    fn check(&self) -> Result<(), ParamError> {
        for &p in &self.primes {
            if !is_prime(p) {
                return Err(ParamError::NotPrime(p));
            }
            for &m in &self.m_values {
                if m < 3 {
                    return Err(ParamError::MTooSmall(m));
                }
                let len = checked_pow(p, m).unwrap_or(u64::MAX);
                if len <= self.max_len && len > DESK_SCALE_LIMIT && !self.allow_large {
                    return Err(ParamError::TooLarge { len, limit: DESK_SCALE_LIMIT });
                }
            }
        }
        Ok(())
    }

    fn lambda_draw(&self, key: [u64; 6], q: u32, count: usize) -> Vec<u32> {
        let mixed = key.iter().fold(self.seed, |h, &x| {
            (h ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(29)
        });
        let mut rng = ChaCha8Rng::seed_from_u64(mixed);
        (0..count).map(|_| rng.gen_range(0..q)).collect()
    }
}

/// Runs the sweep. `progress` is called after each instance.
pub fn run_sweep(config: &SweepConfig, mut progress: impl FnMut(&SweepRow)) -> Result<SweepReport> {
    config.check()?;
    let mut rows = Vec::new();
    for &p in &config.primes {
        let q = p * config.q_factor;
        for &m in &config.m_values {
            let len = checked_pow(p, m).unwrap_or(u64::MAX);
            if len > config.max_len {
                continue;
            }
            let deltas: Vec<usize> = match &config.deltas {
                Some(d) => d.iter().copied().filter(|&d| d < m).collect(),
                None => (0..m).collect(),
            };
            for delta in deltas {
                for (pid, partition) in set_partitions(m - delta, config.max_parts).iter().enumerate() {
                    for &perm in &config.perms {
                        for &lam in &config.lambdas {
                            let perms = partition
                                .iter()
                                .map(|b| match perm {
                                    PermChoice::Identity => b.clone(),
                                    PermChoice::Reversed => b.iter().rev().copied().collect(),
                                })
                                .collect();
                            let lambdas = match lam {
                                LambdaChoice::Zero => None,
                                LambdaChoice::Random => {
                                    let key = [p as u64, q as u64, m as u64, delta as u64, pid as u64, perm as u64];
                                    Some(config.lambda_draw(key, q, m + 1))
                                }
                            };
                            let raw = RawParams {
                                p,
                                q: Some(q),
                                m,
                                delta,
                                partition: partition.clone(),
                                perms: Some(perms),
                                lambdas,
                                allow_large: config.allow_large,
                            };
                            let row = run_instance(&raw, pid, perm, lam)?;
                            progress(&row);
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let summary = summarize(&rows);
    Ok(SweepReport { config: config.clone(), summary, rows })
}

fn run_instance(raw: &RawParams, pid: usize, perm: PermChoice, lam: LambdaChoice) -> Result<SweepRow> {
    let params = raw.validate()?;
    let set = build_code_set(&params)?;
    let (k, m, n) = set.shape();
    let z = params.zcz();
    let (p, delta) = (params.p(), params.delta());
    let mut verifier = Verifier::new(&set);
    let report = verifier.verify(SetKind::Szccs, z)?;
    // p^(m-δ)
    let block = z + 1;
    let zccs_at_2pow = if p == 2 { Some(verifier.verify(SetKind::Zccs, block)?.holds) } else { None };
    let extra: Vec<usize> = [n.checked_sub(block + 1), n.checked_sub(block)]
        .into_iter()
        .flatten()
        .filter(|s| (1..n).contains(s))
        .collect();
    let proof_tail_extra_zero = (!extra.is_empty()).then(|| verifier.shifts_clean(extra));
    let chain_shape_ok = (params.k() == 1).then(|| {
        let expect_k = checked_pow(p, delta + 1).map(|v| v as usize);
        expect_k == Some(k) && m == p as usize
    });
    Ok(SweepRow {
        p,
        q: params.q(),
        m: params.m(),
        delta,
        k: params.k(),
        partition_id: pid,
        partition: partition_label(&raw.partition),
        perm_id: perm,
        lambda_id: lam,
        set_size: k,
        flock_size: m,
        len: n,
        zcz: z,
        pass: report.holds,
        achieved_symmetric_z: report.achieved_symmetric_z,
        achieved_front_z: report.achieved_front_z,
        optimal: check_optimality(k, m, n, z, SetKind::Szccs),
        is_ccc: report.is_ccc,
        zccs_at_2pow,
        chain_shape_ok,
        proof_tail_extra_zero,
    })
}

fn summarize(rows: &[SweepRow]) -> SweepSummary {
    let mut s = SweepSummary { instances: rows.len(), ..Default::default() };
    for r in rows {
        s.passed += usize::from(r.pass);
        s.optimal += usize::from(r.optimal);
        if r.delta == 0 {
            s.ccc_instances += 1;
            s.ccc_detected += usize::from(r.is_ccc);
        }
        if let Some(ok) = r.zccs_at_2pow {
            s.binary_instances += 1;
            s.binary_zccs_ok += usize::from(ok);
        }
        if let Some(ok) = r.chain_shape_ok {
            s.single_chain_instances += 1;
            s.single_chain_ok += usize::from(ok);
        }
        if let Some(ok) = r.proof_tail_extra_zero {
            s.proof_tail_checked += 1;
            s.proof_tail_zero += usize::from(ok);
        }
    }
    s.all_ok = rows.iter().all(SweepRow::ok);
    s
}

fn opt(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

impl SweepReport {
    pub const CSV_HEADER: &'static str = "p,q,m,delta,k,partition_id,partition,perm_id,lambda_id,K,M,N,Z,pass,\
achieved_symmetric_Z,achieved_front_Z,optimal,is_ccc,zccs_at_2pow,chain_shape_ok,proof_tail_extra_zero";

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.p,
                r.q,
                r.m,
                r.delta,
                r.k,
                r.partition_id,
                r.partition,
                r.perm_id,
                r.lambda_id,
                r.set_size,
                r.flock_size,
                r.len,
                r.zcz,
                r.pass,
                r.achieved_symmetric_z,
                r.achieved_front_z,
                r.optimal,
                r.is_ccc,
                opt(r.zccs_at_2pow),
                opt(r.chain_shape_ok),
                opt(r.proof_tail_extra_zero)
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sweep report serializes");
        s.push('\n');
        s
    }
}
