use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construction::{ConstructionParams, RawParams};
use crate::ParamError;

/// Named parameter shapes for the special cases of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    /// The worked `(9, 3, 27, 8)` example: `p = q = 3`, `m = 3`, `δ = 1`, `g = x_1 x_2`.
    Example1,
    /// `δ = 0`: a `(p^k, p^k, p^m)` complete complementary code.
    Ccc,
    /// `p = 2`: a `(2^(k+δ), 2^k, 2^m, 2^(m-δ))` ZCCS.
    BinaryZccs,
    /// `k = 1`: a single chain over `{1..m-δ}`.
    SingleChain,
}

/// Free parameters for a preset; unused ones must be left unset.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetArgs {
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub m: Option<usize>,
    pub delta: Option<usize>,
    pub k: Option<usize>,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Example1, Preset::Ccc, Preset::BinaryZccs, Preset::SingleChain];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Example1 => "example1",
            Preset::Ccc => "ccc",
            Preset::BinaryZccs => "binary_zccs",
            Preset::SingleChain => "single_chain",
        }
    }

    pub fn raw(self, args: &PresetArgs) -> Result<RawParams, ParamError> {
        let err = |reason: String| ParamError::Preset { preset: self.name().into(), reason };
        let need = |v: Option<usize>, what: &str| v.ok_or_else(|| err(format!("{what} is required")));
        match self {
            Preset::Example1 => {
                if *args != PresetArgs::default() {
                    return Err(err("takes no free parameters".into()));
                }
                // σ drives x_2 and t_1 drives x_1, so the chain visits (2, 1).
                Ok(RawParams {
                    p: 3,
                    q: Some(3),
                    m: 3,
                    delta: 1,
                    partition: vec![vec![1, 2]],
                    perms: Some(vec![vec![2, 1]]),
                    lambdas: None,
                    allow_large: false,
                })
            }
            Preset::Ccc => {
                if args.delta.is_some_and(|d| d != 0) {
                    return Err(err("delta is fixed to 0".into()));
                }
                let p = args.p.ok_or_else(|| err("p is required".into()))?;
                let m = need(args.m, "m")?;
                let k = need(args.k, "k")?;
                chained(p, args.q, m, 0, k).map_err(err)
            }
            Preset::BinaryZccs => {
                if args.p.is_some_and(|p| p != 2) {
                    return Err(err("p is fixed to 2".into()));
                }
                let m = need(args.m, "m")?;
                let delta = need(args.delta, "delta")?;
                let k = need(args.k, "k")?;
                chained(2, args.q, m, delta, k).map_err(err)
            }
            Preset::SingleChain => {
                if args.k.is_some_and(|k| k != 1) {
                    return Err(err("k is fixed to 1".into()));
                }
                let p = args.p.ok_or_else(|| err("p is required".into()))?;
                let m = need(args.m, "m")?;
                let delta = need(args.delta, "delta")?;
                chained(p, args.q, m, delta, 1).map_err(err)
            }
        }
    }

    pub fn params(self, args: &PresetArgs) -> Result<ConstructionParams, ParamError> {
        self.raw(args)?.validate()
    }
}

/// `{1..m-δ}` split into `k` contiguous ascending blocks, larger blocks first.
fn chained(p: u32, q: Option<u32>, m: usize, delta: usize, k: usize) -> Result<RawParams, String> {
    if delta >= m {
        return Err(format!("delta {delta} out of range for m = {m}"));
    }
    let span = m - delta;
    if k == 0 || k > span {
        return Err(format!("k = {k} must lie in 1..={span}"));
    }
    let (base, extra) = (span / k, span % k);
    let mut next = 1;
    let partition = (0..k)
        .map(|b| {
            let size = base + usize::from(b < extra);
            let part: Vec<usize> = (next..next + size).collect();
            next += size;
            part
        })
        .collect();
    Ok(RawParams { p, q, m, delta, partition, perms: None, lambdas: None, allow_large: false })
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown preset {s:?} (expected example1, ccc, binary_zccs or single_chain)"))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
