//! Optimal symmetrical Z-complementary code sets (SZCCS) of prime-power length.
//!
//! The crate builds `(p^(k+δ), p^k, p^m, p^(m-δ)-1)` code sets from a
//! quadratic multi-variable function over `Z_p^m`, and checks their
//! correlation properties with exact cyclotomic-integer arithmetic.
//!
//! ```
//! use szccs::construction::{build_code_set, Preset};
//! use szccs::verification::verify_szccs;
//!
//! let params = Preset::Example1.params(&Default::default()).unwrap();
//! let set = build_code_set(&params).unwrap();
//! assert_eq!(set.shape(), (9, 3, 27));
//! let report = verify_szccs(&set, 8).unwrap();
//! assert!(report.p1_holds && report.p2_holds && report.optimal_szccs);
//! ```

pub mod algebra;
pub mod cli;
pub mod construction;
pub mod correlation;
mod error;
pub mod verification;

pub use error::{Error, ParamError, Result};

/// Largest supported phase modulus.
pub const MAX_Q: u32 = 64;

/// Default desk-scale limit on the sequence length `p^m`.
pub const DESK_SCALE_LIMIT: u64 = 15_625;

/// Deterministic primality test for the small moduli used here.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
