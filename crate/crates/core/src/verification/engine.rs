use std::collections::{BinaryHeap, HashMap};

use crate::algebra::counts_are_zero;
use crate::construction::CodeSet;
use crate::correlation::flock_counts;
use crate::verification::report::{
    Backend, KindClaimed, SetKind, VerificationReport, Violation, MAX_REPORTED_VIOLATIONS,
};
use crate::verification::check_optimality;
use crate::{Error, Result};

/// Failures at one non-negative shift `a`. Negative shifts follow from
/// `C(u, v)(-a) = conj(C(v, u)(a))`: auto sums fail at `-a` iff they fail at
/// `a`, and the ordered pair `(e, f)` fails at `-a` iff `(f, e)` fails at `a`.
#[derive(Debug, Default)]
struct ShiftOutcome {
    /// Codes whose auto sum is nonzero (or differs from `MN` when `a = 0`).
    auto_fail: Vec<usize>,
    /// Ordered pairs `(e, f)`, `e ≠ f`, with `Σ_l C(c^e_l, c^f_l)(a) ≠ 0`.
    cross_fail: Vec<(usize, usize)>,
}

impl ShiftOutcome {
    fn clean(&self) -> bool {
        self.auto_fail.is_empty() && self.cross_fail.is_empty()
    }
}

/// Exact verifier over one code set. Correlation outcomes are cached per
/// shift, so several queries on the same set share work.
pub struct Verifier<'a> {
    set: &'a CodeSet,
    q: usize,
    n: usize,
    /// `d_e = c^e_l - c^0_l`, identical for every member `l` (factored backend only).
    offsets: Option<Vec<Vec<u8>>>,
    cache: HashMap<usize, ShiftOutcome>,
}

impl<'a> Verifier<'a> {
    /// Picks the factored backend when the set has the required structure.
    pub fn new(set: &'a CodeSet) -> Self {
        let offsets = common_offsets(set);
        Self::build(set, offsets)
    }

    /// Forces a backend; the factored one fails with [`Error::Incompatible`] on
    /// sets without a common per-code offset.
    pub fn with_backend(set: &'a CodeSet, backend: Backend) -> Result<Self> {
        match backend {
            Backend::Direct => Ok(Self::build(set, None)),
            Backend::Factored => {
                let offsets = common_offsets(set).ok_or_else(|| {
                    Error::Incompatible("codes do not differ from code 0 by a common offset".into())
                })?;
                Ok(Self::build(set, Some(offsets)))
            }
        }
    }

    fn build(set: &'a CodeSet, offsets: Option<Vec<Vec<u8>>>) -> Self {
        let (_, _, n) = set.shape();
        Self { set, q: set.q() as usize, n, offsets, cache: HashMap::new() }
    }

    pub fn backend(&self) -> Backend {
        if self.offsets.is_some() {
            Backend::Factored
        } else {
            Backend::Direct
        }
    }

    fn outcome(&mut self, a: usize) -> &ShiftOutcome {
        if !self.cache.contains_key(&a) {
            let out = match &self.offsets {
                Some(d) => self.eval_factored(d, a),
                None => self.eval_direct(a),
            };
            self.cache.insert(a, out);
        }
        &self.cache[&a]
    }

    fn in_phase(&self) -> i64 {
        let (_, m, n) = self.set.shape();
        (m * n) as i64
    }

    fn eval_direct(&self, a: usize) -> ShiftOutcome {
        let codes = self.set.codes();
        let mut counts = vec![0i64; self.q];
        let mut out = ShiftOutcome::default();
        for (e, c) in codes.iter().enumerate() {
            for (f, d) in codes.iter().enumerate() {
                counts.fill(0);
                flock_counts(c, d, a as i64, &mut counts);
                if e == f && a == 0 {
                    counts[0] -= self.in_phase();
                }
                if !counts_are_zero(&counts) {
                    if e == f {
                        out.auto_fail.push(e);
                    } else {
                        out.cross_fail.push((e, f));
                    }
                }
            }
        }
        out
    }

    /// With `c^e_l = c^0_l + d_e`, the flock sum at shift `a` is
    /// `Σ_i ω^(d_e(i) - d_f(i+a)) H(i)` where `H(i) = Σ_l ω^(c^0_l(i) - c^0_l(i+a))`.
    /// Positions where `H(i)` vanishes exactly are dropped.
    fn eval_factored(&self, offsets: &[Vec<u8>], a: usize) -> ShiftOutcome {
        let q = self.q;
        let mut out = ShiftOutcome::default();
        if a >= self.n {
            return out;
        }
        let base = self.set.codes()[0].sequences();
        let mut pos = Vec::new();
        let mut phase = Vec::new();
        let mut mult = Vec::new();
        let mut h = vec![0i64; q];
        for i in 0..self.n - a {
            h.fill(0);
            for s in base {
                let ph = s.phases();
                h[(ph[i] as usize + q - ph[i + a] as usize) % q] += 1;
            }
            if counts_are_zero(&h) {
                continue;
            }
            for (j, &c) in h.iter().enumerate().filter(|(_, c)| **c != 0) {
                pos.push(i);
                phase.push(j as u8);
                mult.push(c);
            }
        }
        if pos.is_empty() {
            return out;
        }
        let lead: Vec<Vec<u8>> = offsets
            .iter()
            .map(|d| pos.iter().zip(&phase).map(|(&i, &j)| ((j as usize + d[i] as usize) % q) as u8).collect())
            .collect();
        let trail: Vec<Vec<u8>> = offsets.iter().map(|d| pos.iter().map(|&i| d[i + a]).collect()).collect();
        let mut counts = vec![0i64; q];
        for (e, u) in lead.iter().enumerate() {
            for (f, w) in trail.iter().enumerate() {
                counts.fill(0);
                for ((&x, &y), &c) in u.iter().zip(w).zip(&mult) {
                    let mut ph = x as usize + q - y as usize;
                    if ph >= q {
                        ph -= q;
                    }
                    counts[ph] += c;
                }
                if e == f && a == 0 {
                    counts[0] -= self.in_phase();
                }
                if !counts_are_zero(&counts) {
                    if e == f {
                        out.auto_fail.push(e);
                    } else {
                        out.cross_fail.push((e, f));
                    }
                }
            }
        }
        out
    }

    /// Largest `Z′ ≤ N - 1` with every auto sum zero on `{1..Z′} ∪ {N-Z′..N-1}`
    /// (both signs) and every cross sum zero there and at `τ = 0`.
    pub fn symmetric_zcz(&mut self) -> usize {
        if !self.outcome(0).cross_fail.is_empty() {
            return 0;
        }
        let n = self.n;
        for j in 1..n {
            if !self.outcome(j).clean() || !self.outcome(n - j).clean() {
                return j - 1;
            }
        }
        n.saturating_sub(1)
    }

    /// Largest `Z′ ≤ N` with all sums matching the ideal values on `|τ| < Z′`.
    pub fn front_zcz(&mut self) -> usize {
        (0..self.n).find(|&a| !self.outcome(a).clean()).unwrap_or(self.n)
    }

    /// `(symmetric_Z, front_Z)`.
    pub fn achieved_zcz(&mut self) -> (usize, usize) {
        (self.symmetric_zcz(), self.front_zcz())
    }

    /// `K = M` and the front zone covers every shift.
    pub fn detect_ccc(&mut self) -> bool {
        let (k, m, n) = self.set.shape();
        k == m && self.front_zcz() == n
    }

    /// True iff every listed shift is clean for auto and cross sums.
    pub fn shifts_clean(&mut self, shifts: impl IntoIterator<Item = usize>) -> bool {
        shifts.into_iter().all(|a| self.outcome(a).clean())
    }

    pub fn verify(&mut self, kind: SetKind, z: usize) -> Result<VerificationReport> {
        let (k, m, n) = self.set.shape();
        if z == 0 || z > n {
            return Err(Error::ZOutOfRange { z, n });
        }
        let shifts: Vec<usize> = match kind {
            SetKind::Szccs => {
                let mut s: Vec<usize> = (0..=z.min(n - 1)).collect();
                s.extend((n - z).max(z + 1).max(1)..n);
                s
            }
            SetKind::Zccs | SetKind::Ccc => (0..z.min(n)).collect(),
        };

        let mut p1 = true;
        let mut p2 = true;
        let mut count = 0u64;
        let mut heap: BinaryHeap<(usize, usize, i64)> = BinaryHeap::new();
        let mut record = |key: (usize, usize, i64)| {
            count += 1;
            if heap.len() < MAX_REPORTED_VIOLATIONS {
                heap.push(key);
            } else if heap.peek().is_some_and(|top| key < *top) {
                heap.pop();
                heap.push(key);
            }
        };
        for a in shifts {
            let out = self.outcome(a);
            let s = a as i64;
            if !(kind == SetKind::Szccs && a == 0) {
                for &e in &out.auto_fail {
                    p1 = false;
                    record((e, e, s));
                    if a > 0 {
                        record((e, e, -s));
                    }
                }
            }
            for &(e, f) in &out.cross_fail {
                p2 = false;
                record((e, f, s));
                if a > 0 {
                    record((f, e, -s));
                }
            }
        }

        let codes = self.set.codes();
        let mut violations: Vec<Violation> = heap
            .into_vec()
            .into_iter()
            .map(|(e, f, shift)| {
                let mut counts = vec![0i64; self.q];
                flock_counts(&codes[e], &codes[f], shift, &mut counts);
                Violation { e, e_prime: f, shift, counts }
            })
            .collect();
        violations.sort();

        let (sym, front) = self.achieved_zcz();
        let is_ccc = k == m && front == n;
        let holds = p1 && p2 && (kind != SetKind::Ccc || is_ccc);
        Ok(VerificationReport {
            kind_claimed: KindClaimed { set_type: kind, set_size: k, flock_size: m, len: n, zcz: z },
            holds,
            p1_holds: p1,
            p2_holds: p2,
            achieved_symmetric_z: sym,
            achieved_front_z: front,
            is_ccc,
            optimal_szccs: check_optimality(k, m, n, z, SetKind::Szccs),
            optimal_zccs: check_optimality(k, m, n, z, SetKind::Zccs),
            mode: "exact",
            backend: self.backend(),
            violation_count: count,
            violations,
        })
    }
}

fn common_offsets(set: &CodeSet) -> Option<Vec<Vec<u8>>> {
    let q = set.q();
    let base = set.codes()[0].sequences();
    let sub = |x: u8, y: u8| ((x as u32 + q - y as u32) % q) as u8;
    set.codes()
        .iter()
        .map(|code| {
            let seqs = code.sequences();
            let d: Vec<u8> = seqs[0].phases().iter().zip(base[0].phases()).map(|(&x, &y)| sub(x, y)).collect();
            let consistent = seqs.iter().zip(base).skip(1).all(|(s, b)| {
                s.phases().iter().zip(b.phases()).zip(&d).all(|((&x, &y), &di)| sub(x, y) == di)
            });
            consistent.then_some(d)
        })
        .collect()
}
