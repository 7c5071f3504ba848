//! Exact values in `Z[ω_q]` stored as multiplicities of the q-th roots of unity.
//!
//! A correlation sum `Σ ω_q^(u_i - v_j)` is a multiset of exponents, so the
//! value is kept as counts `n_0..n_{q-1}` and compared to zero by reducing
//! `Σ n_i x^i` modulo the cyclotomic polynomial `Φ_q`.

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result, MAX_Q};

static PHI_CACHE: [OnceLock<Vec<i64>>; MAX_Q as usize + 1] = [const { OnceLock::new() }; MAX_Q as usize + 1];

/// Coefficients of `Φ_n(x)`, lowest degree first. `n` must be in `1..=MAX_Q`.
pub fn cyclotomic_polynomial(n: u32) -> &'static [i64] {
    assert!((1..=MAX_Q).contains(&n), "cyclotomic order {n} out of range");
    PHI_CACHE[n as usize].get_or_init(|| {
        // x^n - 1 = Π_{d | n} Φ_d(x)
        let mut poly = vec![0i64; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            poly = exact_div(&poly, cyclotomic_polynomial(d));
        }
        poly
    })
}

/// Exact quotient of integer polynomials by a monic divisor.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Zero test on a raw count vector of length `q`; allocation free.
pub fn counts_are_zero(counts: &[i64]) -> bool {
    let q = counts.len();
    if q == 0 {
        return true;
    }
    if q == 1 {
        return counts[0] == 0;
    }
    let phi = cyclotomic_polynomial(q as u32);
    let deg = phi.len() - 1;
    let mut buf = [0i128; MAX_Q as usize];
    for (b, &c) in buf.iter_mut().zip(counts) {
        *b = c as i128;
    }
    for i in (deg..q).rev() {
        let c = buf[i];
        if c != 0 {
            for (j, &f) in phi.iter().enumerate() {
                buf[i - deg + j] -= c * f as i128;
            }
        }
    }
    buf[..deg].iter().all(|&b| b == 0)
}

/// `Σ n_i ω_q^i` held exactly as the count vector `(n_0, …, n_{q-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicInt {
    q: u32,
    counts: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(q: u32) -> Result<Self> {
        check_order(q)?;
        Ok(Self { q, counts: vec![0; q as usize] })
    }

    pub fn from_counts(counts: Vec<i64>) -> Result<Self> {
        let q = u32::try_from(counts.len()).map_err(|_| Error::Shape("too many counts".into()))?;
        check_order(q)?;
        Ok(Self { q, counts })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Self { q: self.q, counts: self.counts.iter().map(|c| -c).collect() }
    }

    /// Adds `sign · ω_q^phase`; the phase is reduced mod `q`.
    pub fn accumulate_phase(&mut self, phase: i64, sign: i64) {
        let idx = phase.rem_euclid(self.q as i64) as usize;
        self.counts[idx] += sign;
    }

    /// Multiplies by `ω_q^phase` (a cyclic rotation of the counts).
    pub fn rotate(&self, phase: i64) -> Self {
        let q = self.q as usize;
        let shift = phase.rem_euclid(q as i64) as usize;
        let mut counts = vec![0; q];
        for (i, &c) in self.counts.iter().enumerate() {
            counts[(i + shift) % q] = c;
        }
        Self { q: self.q, counts }
    }

    /// Complex conjugate: exponent `i` maps to `-i mod q`.
    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let mut counts = vec![0; q];
        for (i, &c) in self.counts.iter().enumerate() {
            counts[(q - i) % q] = c;
        }
        Self { q: self.q, counts }
    }

    /// Exact test `Σ n_i ω_q^i == 0`.
    pub fn is_zero(&self) -> bool {
        counts_are_zero(&self.counts)
    }

    /// True iff the value is the rational integer `n` (exact).
    pub fn equals_integer(&self, n: i64) -> bool {
        let mut c = self.counts.clone();
        c[0] -= n;
        counts_are_zero(&c)
    }

    pub fn to_complex(&self) -> Complex64 {
        let q = self.q as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n != 0)
            .map(|(i, &n)| Complex64::from_polar(n as f64, std::f64::consts::TAU * i as f64 / q))
            .sum()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::Incompatible(format!(
                "cyclotomic orders differ: {} vs {}",
                self.q, other.q
            )));
        }
        Ok(())
    }
}

fn check_order(q: u32) -> Result<()> {
    if !(1..=MAX_Q).contains(&q) {
        return Err(Error::Range { value: q as u64, bound: MAX_Q as u64 + 1 });
    }
    Ok(())
}
