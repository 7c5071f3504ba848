use crate::construction::ConstructionParams;
use crate::{Error, Result, MAX_Q};

/// `Z_q`-valued sequence; entry `i` stands for `ω_q^phases[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseSequence {
    q: u32,
    phases: Vec<u8>,
}

impl PhaseSequence {
    pub fn new(q: u32, phases: Vec<u8>) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::Range { value: q as u64, bound: MAX_Q as u64 + 1 });
        }
        if let Some(&v) = phases.iter().find(|&&v| v as u32 >= q) {
            return Err(Error::Range { value: v as u64, bound: q as u64 });
        }
        Ok(Self { q, phases })
    }

    pub(crate) fn from_raw(q: u32, phases: Vec<u8>) -> Self {
        debug_assert!(phases.iter().all(|&v| (v as u32) < q));
        Self { q, phases }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn phases(&self) -> &[u8] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }
}

/// A flock of `M` sequences sharing `q` and length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    sequences: Vec<PhaseSequence>,
}

impl Code {
    pub fn new(sequences: Vec<PhaseSequence>) -> Result<Self> {
        let first = sequences
            .first()
            .ok_or_else(|| Error::Heterogeneous("a code needs at least one sequence".into()))?;
        let (q, n) = (first.q(), first.len());
        if n == 0 {
            return Err(Error::Heterogeneous("sequences must be nonempty".into()));
        }
        if let Some((l, s)) = sequences.iter().enumerate().find(|(_, s)| s.q() != q || s.len() != n) {
            return Err(Error::Heterogeneous(format!(
                "member {l} has (q, N) = ({}, {}), expected ({q}, {n})",
                s.q(),
                s.len()
            )));
        }
        Ok(Self { sequences })
    }

    pub fn sequences(&self) -> &[PhaseSequence] {
        &self.sequences
    }

    /// Flock size `M`.
    pub fn flock_size(&self) -> usize {
        self.sequences.len()
    }

    /// Sequence length `N`.
    pub fn len(&self) -> usize {
        self.sequences[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn q(&self) -> u32 {
        self.sequences[0].q()
    }
}

/// Claimed `(K, M, N, Z)` parameters of a code set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Claim {
    pub set_size: usize,
    pub flock_size: usize,
    pub len: usize,
    pub zcz: usize,
}

/// Where a code set came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Constructed(ConstructionParams),
    /// Read from a file; the header fields are informational only.
    Imported { p: Option<u32>, m: Option<usize>, delta: Option<usize> },
}

/// `K` codes, each a flock of `M` length-`N` sequences over `Z_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    codes: Vec<Code>,
    claim: Claim,
    origin: Origin,
}

impl CodeSet {
    /// Wraps externally supplied codes. Fails unless all codes share `M`, `N` and `q`.
    pub fn from_codes(codes: Vec<Code>, zcz: usize, origin: Origin) -> Result<Self> {
        let first = codes
            .first()
            .ok_or_else(|| Error::Heterogeneous("a code set needs at least one code".into()))?;
        let (q, m, n) = (first.q(), first.flock_size(), first.len());
        if let Some((e, c)) = codes
            .iter()
            .enumerate()
            .find(|(_, c)| c.q() != q || c.flock_size() != m || c.len() != n)
        {
            return Err(Error::Heterogeneous(format!(
                "code {e} has (q, M, N) = ({}, {}, {}), expected ({q}, {m}, {n})",
                c.q(),
                c.flock_size(),
                c.len()
            )));
        }
        if zcz > n {
            return Err(Error::ZOutOfRange { z: zcz, n });
        }
        let claim = Claim { set_size: codes.len(), flock_size: m, len: n, zcz };
        Ok(Self { codes, claim, origin })
    }

    pub(crate) fn constructed(codes: Vec<Code>, claim: Claim, params: ConstructionParams) -> Self {
        Self { codes, claim, origin: Origin::Constructed(params) }
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn claim(&self) -> Claim {
        self.claim
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn params(&self) -> Option<&ConstructionParams> {
        match &self.origin {
            Origin::Constructed(p) => Some(p),
            Origin::Imported { .. } => None,
        }
    }

    pub fn q(&self) -> u32 {
        self.codes[0].q()
    }

    /// `(K, M, N)` as stored.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.codes.len(), self.codes[0].flock_size(), self.codes[0].len())
    }

    /// Same codes with `phase` added (mod q) to entry `i` of member `l` of code `e`.
    /// The result is marked as imported.
    pub fn perturbed(&self, e: usize, l: usize, i: usize, phase: u32) -> Result<Self> {
        let (k, m, n) = self.shape();
        if e >= k || l >= m || i >= n {
            return Err(Error::Shape(format!("position ({e}, {l}, {i}) outside ({k}, {m}, {n})")));
        }
        let q = self.q();
        let mut codes = self.codes.clone();
        let seq = &mut codes[e].sequences[l];
        seq.phases[i] = ((seq.phases[i] as u32 + phase) % q) as u8;
        let (p, mm, delta) = self.header();
        Self::from_codes(codes, self.claim.zcz, Origin::Imported { p, m: mm, delta })
    }

    /// `(p, m, δ)` if known.
    pub fn header(&self) -> (Option<u32>, Option<usize>, Option<usize>) {
        match &self.origin {
            Origin::Constructed(c) => (Some(c.p()), Some(c.m()), Some(c.delta())),
            Origin::Imported { p, m, delta } => (*p, *m, *delta),
        }
    }
}
