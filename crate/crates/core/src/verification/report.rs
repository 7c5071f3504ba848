use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which property family a set is claimed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Szccs,
    Zccs,
    Ccc,
}

impl SetKind {
    pub fn name(self) -> &'static str {
        match self {
            SetKind::Szccs => "szccs",
            SetKind::Zccs => "zccs",
            SetKind::Ccc => "ccc",
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "szccs" => Ok(SetKind::Szccs),
            "zccs" => Ok(SetKind::Zccs),
            "ccc" => Ok(SetKind::Ccc),
            _ => Err(format!("unknown set type {s:?} (expected szccs, zccs or ccc)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KindClaimed {
    pub set_type: SetKind,
    #[serde(rename = "K")]
    pub set_size: usize,
    #[serde(rename = "M")]
    pub flock_size: usize,
    #[serde(rename = "N")]
    pub len: usize,
    #[serde(rename = "Z")]
    pub zcz: usize,
}

/// A required-zero correlation value that is not zero. `e == e_prime` for
/// auto-correlation violations; `counts[i]` is the multiplicity of `ω_q^i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub e: usize,
    pub e_prime: usize,
    pub shift: i64,
    pub counts: Vec<i64>,
}

/// Engine used for the correlation sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Member-wise summation over every code pair.
    Direct,
    /// Shared per-shift member sum, for sets whose codes differ from code 0
    /// by one phase offset sequence applied to every member.
    Factored,
}

/// Outcome of an exact verification run.
///
/// For `zccs` and `ccc` runs, `p1_holds` covers the auto-correlation
/// conditions (including the in-phase value `MN`) and `p2_holds` the cross
/// conditions. `violations` keeps the first [`MAX_REPORTED_VIOLATIONS`] in
/// `(e, e_prime, shift)` order; `violation_count` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind_claimed: KindClaimed,
    pub holds: bool,
    pub p1_holds: bool,
    pub p2_holds: bool,
    #[serde(rename = "achieved_symmetric_Z")]
    pub achieved_symmetric_z: usize,
    #[serde(rename = "achieved_front_Z")]
    pub achieved_front_z: usize,
    pub is_ccc: bool,
    pub optimal_szccs: bool,
    pub optimal_zccs: bool,
    pub mode: &'static str,
    pub backend: Backend,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

pub const MAX_REPORTED_VIOLATIONS: usize = 1000;

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
