use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::checked_pow;
use crate::{is_prime, ParamError, DESK_SCALE_LIMIT, MAX_Q};

/// Unvalidated construction input, as read from flags or a config file.
///
/// `partition` lists the sets `S_1..S_k` (1-based variable indices); `perms`
/// gives each `π_β` as the ordered list `π_β(1), …, π_β(m_β)` and defaults to
/// ascending order. `lambdas` is `λ_0..λ_m` and defaults to all zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawParams {
    pub p: u32,
    #[serde(default)]
    pub q: Option<u32>,
    pub m: usize,
    #[serde(default)]
    pub delta: usize,
    pub partition: Vec<Vec<usize>>,
    #[serde(default)]
    pub perms: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub lambdas: Option<Vec<u32>>,
    #[serde(default)]
    pub allow_large: bool,
}

impl RawParams {
    pub fn validate(&self) -> Result<ConstructionParams, ParamError> {
        let p = self.p;
        if !is_prime(p) {
            return Err(ParamError::NotPrime(p));
        }
        let q = self.q.unwrap_or(p);
        if !(2..=MAX_Q).contains(&q) {
            return Err(ParamError::QOutOfRange { q, max: MAX_Q });
        }
        if !q.is_multiple_of(p) {
            return Err(ParamError::NotDivisible { p, q });
        }
        let m = self.m;
        if m < 3 {
            return Err(ParamError::MTooSmall(m));
        }
        if self.delta >= m {
            return Err(ParamError::DeltaOutOfRange { delta: self.delta, m });
        }
        let span = m - self.delta;
        check_partition(&self.partition, span)?;

        let chains = match &self.perms {
            None => self
                .partition
                .iter()
                .map(|part| {
                    let mut c = part.clone();
                    c.sort_unstable();
                    c
                })
                .collect(),
            Some(perms) => {
                if perms.len() != self.partition.len() {
                    return Err(ParamError::PermNotBijection {
                        part: perms.len().min(self.partition.len()) + 1,
                        reason: format!(
                            "{} permutations given for {} parts",
                            perms.len(),
                            self.partition.len()
                        ),
                    });
                }
                for (b, (perm, part)) in perms.iter().zip(&self.partition).enumerate() {
                    let target: BTreeSet<usize> = part.iter().copied().collect();
                    let image: BTreeSet<usize> = perm.iter().copied().collect();
                    if perm.len() != part.len() || image != target {
                        return Err(ParamError::PermNotBijection {
                            part: b + 1,
                            reason: format!("{perm:?} is not an ordering of {part:?}"),
                        });
                    }
                }
                perms.clone()
            }
        };

        let lambdas = self.lambdas.clone().unwrap_or_else(|| vec![0; m + 1]);
        if lambdas.len() != m + 1 {
            return Err(ParamError::LambdaCount { expected: m + 1, got: lambdas.len() });
        }
        if let Some((index, &value)) = lambdas.iter().enumerate().find(|(_, &v)| v >= q) {
            return Err(ParamError::LambdaOutOfRange { index, value, q });
        }

        let len = checked_pow(p, m).unwrap_or(u64::MAX);
        if len > DESK_SCALE_LIMIT && !self.allow_large {
            return Err(ParamError::TooLarge { len, limit: DESK_SCALE_LIMIT });
        }

        Ok(ConstructionParams { p, q, m, delta: self.delta, chains, lambdas })
    }
}

fn check_partition(parts: &[Vec<usize>], span: usize) -> Result<(), ParamError> {
    if parts.is_empty() {
        return Err(ParamError::PartitionNotExact("no parts given".into()));
    }
    let mut seen = BTreeSet::new();
    for (b, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(ParamError::PartitionNotExact(format!("part {} is empty", b + 1)));
        }
        for &v in part {
            if !(1..=span).contains(&v) {
                return Err(ParamError::PartitionNotExact(format!(
                    "element {v} of part {} outside 1..={span}",
                    b + 1
                )));
            }
            if !seen.insert(v) {
                return Err(ParamError::PartitionNotExact(format!("element {v} appears twice")));
            }
        }
    }
    if seen.len() != span {
        let missing: Vec<usize> = (1..=span).filter(|v| !seen.contains(v)).collect();
        return Err(ParamError::PartitionNotExact(format!("elements {missing:?} not covered")));
    }
    Ok(())
}

/// Validated parameters of the MVF code-set construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    p: u32,
    q: u32,
    m: usize,
    delta: usize,
    /// `π_β(1), …, π_β(m_β)` for each part.
    chains: Vec<Vec<usize>>,
    /// `λ_0..λ_m`.
    lambdas: Vec<u32>,
}

impl ConstructionParams {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of parts `k`.
    pub fn k(&self) -> usize {
        self.chains.len()
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn lambdas(&self) -> &[u32] {
        &self.lambdas
    }

    /// `K = p^(k+δ)`.
    pub fn set_size(&self) -> usize {
        (self.p as usize).pow((self.k() + self.delta) as u32)
    }

    /// `M = p^k`.
    pub fn flock_size(&self) -> usize {
        (self.p as usize).pow(self.k() as u32)
    }

    /// `N = p^m`.
    pub fn len(&self) -> usize {
        (self.p as usize).pow(self.m as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Z = p^(m-δ) - 1`.
    pub fn zcz(&self) -> usize {
        (self.p as usize).pow((self.m - self.delta) as u32) - 1
    }

    /// Back to the raw form (perms explicit).
    pub fn to_raw(&self) -> RawParams {
        let mut partition = self.chains.clone();
        for part in &mut partition {
            part.sort_unstable();
        }
        RawParams {
            p: self.p,
            q: Some(self.q),
            m: self.m,
            delta: self.delta,
            partition,
            perms: Some(self.chains.clone()),
            lambdas: Some(self.lambdas.clone()),
            allow_large: true,
        }
    }
}
