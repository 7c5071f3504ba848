use crate::{Error, Result};

/// Base-`p` digit expansion of an index, least-significant digit first.
///
/// Digit `i` (zero-based) is the coefficient of `p^i`, so `digits[0]` is the
/// variable `x_1` of a multi-variable function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAryIndex {
    p: u32,
    digits: Vec<u32>,
}

impl PAryIndex {
    /// Expands `r` into `m` base-`p` digits. Fails if `r >= p^m`.
    pub fn decompose(r: u64, p: u32, m: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::Shape(format!("base must be at least 2, got {p}")));
        }
        let bound = checked_pow(p, m).ok_or_else(|| Error::Shape(format!("{p}^{m} overflows")))?;
        if r >= bound {
            return Err(Error::Range { value: r, bound });
        }
        let mut digits = Vec::with_capacity(m);
        let mut rest = r;
        for _ in 0..m {
            digits.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        Ok(Self { p, digits })
    }

    pub fn from_digits(p: u32, digits: Vec<u32>) -> Result<Self> {
        if p < 2 {
            return Err(Error::Shape(format!("base must be at least 2, got {p}")));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::Range { value: d as u64, bound: p as u64 });
        }
        Ok(Self { p, digits })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Reconstructs `r = Σ r_i p^(i-1)`.
    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }
}

/// `p^m` as `u64`, or `None` on overflow.
pub fn checked_pow(p: u32, m: usize) -> Option<u64> {
    let exp = u32::try_from(m).ok()?;
    (p as u64).checked_pow(exp)
}
