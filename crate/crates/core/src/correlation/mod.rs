//! Aperiodic cross/auto-correlation of phase sequences and flock-summed
//! correlation of codes.
//!
//! `C(u, v)(τ) = Σ_i ω_q^(u_i - v_(i+τ))` for `0 ≤ τ < N`, the mirrored sum
//! for negative `τ`, and zero once `|τ| ≥ N`. Positive `τ` delays `v`.

mod csv;
mod fft;

use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::algebra::CyclotomicInt;
use crate::construction::{Code, PhaseSequence};
use crate::{Error, Result};

pub use self::csv::{format_sig9, ZoneAnnotation};
pub use self::fft::fft_flock_profile;

/// Adds the phase-difference counts of `C(u, v)(τ)` into `counts` (length `q`).
/// Sequences must share length and `q`; both are the caller's responsibility.
pub(crate) fn accumulate_accf(u: &[u8], v: &[u8], q: usize, tau: i64, counts: &mut [i64]) {
    let n = u.len() as i64;
    if tau.abs() >= n {
        return;
    }
    let (a, b) = if tau >= 0 {
        (&u[..(n - tau) as usize], &v[tau as usize..])
    } else {
        (&u[(-tau) as usize..], &v[..(n + tau) as usize])
    };
    for (&x, &y) in a.iter().zip(b) {
        let mut d = x as usize + q - y as usize;
        if d >= q {
            d -= q;
        }
        counts[d] += 1;
    }
}

fn check_sequences(u: &PhaseSequence, v: &PhaseSequence) -> Result<()> {
    if u.q() != v.q() || u.len() != v.len() {
        return Err(Error::Incompatible(format!(
            "sequences have (q, N) = ({}, {}) and ({}, {})",
            u.q(),
            u.len(),
            v.q(),
            v.len()
        )));
    }
    Ok(())
}

pub(crate) fn check_codes(c: &Code, d: &Code) -> Result<()> {
    if c.q() != d.q() || c.len() != d.len() || c.flock_size() != d.flock_size() {
        return Err(Error::Incompatible(format!(
            "codes have (q, M, N) = ({}, {}, {}) and ({}, {}, {})",
            c.q(),
            c.flock_size(),
            c.len(),
            d.q(),
            d.flock_size(),
            d.len()
        )));
    }
    Ok(())
}

/// Exact aperiodic cross-correlation `C(u, v)(τ)`.
pub fn accf(u: &PhaseSequence, v: &PhaseSequence, tau: i64) -> Result<CyclotomicInt> {
    check_sequences(u, v)?;
    let q = u.q() as usize;
    let mut counts = vec![0i64; q];
    accumulate_accf(u.phases(), v.phases(), q, tau, &mut counts);
    CyclotomicInt::from_counts(counts)
}

/// Exact aperiodic auto-correlation `A(u)(τ)`.
pub fn aacf(u: &PhaseSequence, tau: i64) -> CyclotomicInt {
    accf(u, u, tau).expect("a sequence is compatible with itself")
}

pub(crate) fn flock_counts(c: &Code, d: &Code, tau: i64, counts: &mut [i64]) {
    let q = c.q() as usize;
    for (u, v) in c.sequences().iter().zip(d.sequences()) {
        accumulate_accf(u.phases(), v.phases(), q, tau, counts);
    }
}

/// `Σ_l C(c_l, c'_l)(τ)`, exactly.
pub fn flock_correlation(c: &Code, d: &Code, tau: i64) -> Result<CyclotomicInt> {
    check_codes(c, d)?;
    let mut counts = vec![0i64; c.q() as usize];
    flock_counts(c, d, tau, &mut counts);
    CyclotomicInt::from_counts(counts)
}

/// How a profile's values were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
enum Values {
    Exact(Vec<CyclotomicInt>),
    Float(Vec<Complex64>),
}

/// Correlation values for every shift `τ ∈ [-(N-1), N-1]`, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    len: usize,
    values: Values,
}

impl CorrelationProfile {
    pub(crate) fn float(len: usize, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), 2 * len - 1);
        Self { len, values: Values::Float(values) }
    }

    /// Sequence length `N`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mode(&self) -> Mode {
        match self.values {
            Values::Exact(_) => Mode::Exact,
            Values::Float(_) => Mode::Float,
        }
    }

    pub fn shifts(&self) -> RangeInclusive<i64> {
        let r = self.len as i64 - 1;
        -r..=r
    }

    fn index(&self, tau: i64) -> Option<usize> {
        let r = self.len as i64 - 1;
        (tau.abs() <= r).then(|| (tau + r) as usize)
    }

    /// Exact value at `τ` (exact mode only; `None` outside the shift range).
    pub fn exact(&self, tau: i64) -> Option<&CyclotomicInt> {
        match &self.values {
            Values::Exact(v) => self.index(tau).map(|i| &v[i]),
            Values::Float(_) => None,
        }
    }

    /// Value at `τ` as a complex number; zero outside the shift range.
    pub fn complex(&self, tau: i64) -> Complex64 {
        let Some(i) = self.index(tau) else {
            return Complex64::new(0.0, 0.0);
        };
        match &self.values {
            Values::Exact(v) => v[i].to_complex(),
            Values::Float(v) => v[i],
        }
    }

    /// Exact zero test in exact mode; `None` for float profiles.
    pub fn is_zero_at(&self, tau: i64) -> Option<bool> {
        match &self.values {
            Values::Exact(v) => Some(self.index(tau).is_none_or(|i| v[i].is_zero())),
            Values::Float(_) => None,
        }
    }
}

/// Exact flock-summed correlation over all shifts.
pub fn flock_profile(c: &Code, d: &Code) -> Result<CorrelationProfile> {
    check_codes(c, d)?;
    let n = c.len() as i64;
    let values = (-(n - 1)..n)
        .map(|tau| flock_correlation(c, d, tau))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrelationProfile { len: c.len(), values: Values::Exact(values) })
}
