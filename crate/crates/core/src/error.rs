use thiserror::Error;

/// Violated construction-parameter constraint.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("p not prime: {0}")]
    NotPrime(u32),
    #[error("p does not divide q (p = {p}, q = {q})")]
    NotDivisible { p: u32, q: u32 },
    #[error("q out of range: {q} (supported 2..={max})")]
    QOutOfRange { q: u32, max: u32 },
    #[error("m must be at least 3, got {0}")]
    MTooSmall(usize),
    #[error("delta out of range: {delta} (need 0 <= delta < m = {m})")]
    DeltaOutOfRange { delta: usize, m: usize },
    #[error("partition not exact: {0}")]
    PartitionNotExact(String),
    #[error("permutation {part} is not a bijection onto its part: {reason}")]
    PermNotBijection { part: usize, reason: String },
    #[error("lambda_{index} = {value} is outside Z_{q}")]
    LambdaOutOfRange { index: usize, value: u32, q: u32 },
    #[error("expected {expected} lambda coefficients (lambda_0..lambda_m), got {got}")]
    LambdaCount { expected: usize, got: usize },
    #[error("sequence length p^m = {len} exceeds the desk-scale limit {limit} (use the override flag)")]
    TooLarge { len: u64, limit: u64 },
    #[error("preset {preset}: {reason}")]
    Preset { preset: String, reason: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(#[from] ParamError),
    #[error("value {value} out of range (must be < {bound})")]
    Range { value: u64, bound: u64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("ZCZ width {z} out of range (need 1 <= Z <= N = {n})")]
    ZOutOfRange { z: usize, n: usize },
    #[error("heterogeneous code set: {0}")]
    Heterogeneous(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
