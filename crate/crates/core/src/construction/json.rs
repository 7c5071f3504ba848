//! Canonical code-set file format.
//!
//! ```text
//! {
//!   "p": 3,
//!   "q": 3,
//!   "m": 3,
//!   "delta": 1,
//!   "K": 9,
//!   "M": 3,
//!   "N": 27,
//!   "Z": 8,
//!   "codes": [
//!     [
//!       [0,0,0,...],
//!       ...
//!     ],
//!     ...
//!   ]
//! }
//! ```
//!
//! Phases are integers in `[0, q)`. The writer is byte-stable: field order,
//! indentation and separators never vary.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::construction::{Code, CodeSet, Origin, PhaseSequence};
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeSetFile {
    #[serde(default)]
    p: Option<u32>,
    q: u32,
    #[serde(default)]
    m: Option<usize>,
    #[serde(default)]
    delta: Option<usize>,
    #[serde(rename = "K")]
    set_size: usize,
    #[serde(rename = "M")]
    flock_size: usize,
    #[serde(rename = "N")]
    len: usize,
    #[serde(rename = "Z")]
    zcz: usize,
    codes: Vec<Vec<Vec<u32>>>,
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "null".to_string(), |v| v.to_string())
}

impl CodeSet {
    pub fn to_canonical_json(&self) -> String {
        let (p, m, delta) = self.header();
        let claim = self.claim();
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"p\": {},", opt(p));
        let _ = writeln!(out, "  \"q\": {},", self.q());
        let _ = writeln!(out, "  \"m\": {},", opt(m));
        let _ = writeln!(out, "  \"delta\": {},", opt(delta));
        let _ = writeln!(out, "  \"K\": {},", claim.set_size);
        let _ = writeln!(out, "  \"M\": {},", claim.flock_size);
        let _ = writeln!(out, "  \"N\": {},", claim.len);
        let _ = writeln!(out, "  \"Z\": {},", claim.zcz);
        out.push_str("  \"codes\": [\n");
        let ncodes = self.codes().len();
        for (e, code) in self.codes().iter().enumerate() {
            out.push_str("    [\n");
            let nseq = code.sequences().len();
            for (l, seq) in code.sequences().iter().enumerate() {
                out.push_str("      [");
                for (i, ph) in seq.phases().iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "{ph}");
                }
                out.push(']');
                if l + 1 < nseq {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("    ]");
            if e + 1 < ncodes {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]\n}\n");
        out
    }

    /// Parses the canonical format (any JSON whitespace accepted). The claimed
    /// `K`, `M`, `N` must match the codes; `Z` must not exceed `N`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CodeSetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut codes = Vec::with_capacity(file.codes.len());
        for (e, code) in file.codes.into_iter().enumerate() {
            let seqs = code
                .into_iter()
                .enumerate()
                .map(|(l, phases)| {
                    let phases = phases
                        .into_iter()
                        .map(|v| {
                            u8::try_from(v).map_err(|_| {
                                Error::Parse(format!("code {e} member {l}: phase {v} out of range"))
                            })
                        })
                        .collect::<Result<Vec<u8>>>()?;
                    PhaseSequence::new(file.q, phases)
                        .map_err(|err| Error::Parse(format!("code {e} member {l}: {err}")))
                })
                .collect::<Result<Vec<_>>>()?;
            codes.push(Code::new(seqs)?);
        }
        let set = CodeSet::from_codes(
            codes,
            file.zcz,
            Origin::Imported { p: file.p, m: file.m, delta: file.delta },
        )?;
        let (k, m, n) = set.shape();
        if (k, m, n) != (file.set_size, file.flock_size, file.len) {
            return Err(Error::Parse(format!(
                "header claims (K, M, N) = ({}, {}, {}) but codes have ({k}, {m}, {n})",
                file.set_size, file.flock_size, file.len
            )));
        }
        Ok(set)
    }
}
