use crate::algebra::PAryIndex;
use crate::construction::PhaseSequence;
use crate::{is_prime, Error, ParamError, Result, MAX_Q};

/// Quadratic-chain plus affine function `{0..p-1}^m → Z_q`:
///
/// `f(x) = (q/p) Σ_{(i,j)} x_i x_j + Σ_l λ_l x_l + λ_0  (mod q)`.
///
/// Variable indices in `quad_pairs` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvfSpec {
    p: u32,
    q: u32,
    m: usize,
    quad_pairs: Vec<(usize, usize)>,
    linear: Vec<u32>,
    constant: u32,
}

impl MvfSpec {
    pub fn new(
        p: u32,
        q: u32,
        m: usize,
        quad_pairs: Vec<(usize, usize)>,
        linear: Vec<u32>,
        constant: u32,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(ParamError::NotPrime(p).into());
        }
        if !(2..=MAX_Q).contains(&q) {
            return Err(ParamError::QOutOfRange { q, max: MAX_Q }.into());
        }
        if !q.is_multiple_of(p) {
            return Err(ParamError::NotDivisible { p, q }.into());
        }
        if let Some(&(i, j)) = quad_pairs
            .iter()
            .find(|&&(i, j)| !(1..=m).contains(&i) || !(1..=m).contains(&j))
        {
            return Err(Error::Shape(format!("quadratic term x_{i} x_{j} outside 1..={m}")));
        }
        if linear.len() != m {
            return Err(Error::Shape(format!(
                "expected {m} linear coefficients, got {}",
                linear.len()
            )));
        }
        if let Some((idx, &value)) = linear.iter().enumerate().find(|(_, &v)| v >= q) {
            return Err(ParamError::LambdaOutOfRange { index: idx + 1, value, q }.into());
        }
        if constant >= q {
            return Err(ParamError::LambdaOutOfRange { index: 0, value: constant, q }.into());
        }
        Ok(Self { p, q, m, quad_pairs, linear, constant })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn quad_pairs(&self) -> &[(usize, usize)] {
        &self.quad_pairs
    }

    pub fn linear(&self) -> &[u32] {
        &self.linear
    }

    pub fn constant(&self) -> u32 {
        self.constant
    }

    /// Sequence length `p^m`.
    pub fn len(&self) -> usize {
        (self.p as usize).pow(self.m as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn evaluate(&self, x: &PAryIndex) -> Result<u32> {
        if x.p() != self.p || x.len() != self.m {
            return Err(Error::Shape(format!(
                "index has base {} and {} digits, function expects base {} and {} variables",
                x.p(),
                x.len(),
                self.p,
                self.m
            )));
        }
        Ok(self.eval_digits(x.digits()))
    }

    fn eval_digits(&self, x: &[u32]) -> u32 {
        let q = self.q as u64;
        let quad: u64 = self
            .quad_pairs
            .iter()
            .map(|&(i, j)| x[i - 1] as u64 * x[j - 1] as u64)
            .sum();
        let lin: u64 = self.linear.iter().zip(x).map(|(&l, &d)| l as u64 * d as u64).sum();
        let v = (self.q / self.p) as u64 * (quad % q) + lin + self.constant as u64;
        (v % q) as u32
    }

    /// Value table read in p-ary index order: entry `r` is `f(r_1, …, r_m)`.
    pub fn sequence(&self) -> PhaseSequence {
        let n = self.len();
        let mut digits = vec![0u32; self.m];
        let mut phases = Vec::with_capacity(n);
        for _ in 0..n {
            phases.push(self.eval_digits(&digits) as u8);
            for d in digits.iter_mut() {
                *d += 1;
                if *d < self.p {
                    break;
                }
                *d = 0;
            }
        }
        PhaseSequence::from_raw(self.q, phases)
    }
}
