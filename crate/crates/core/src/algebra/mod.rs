//! p-ary index arithmetic, multi-variable functions and exact cyclotomic values.

mod cyclotomic;
mod mvf;
mod pary;

pub use cyclotomic::{counts_are_zero, cyclotomic_polynomial, CyclotomicInt};
pub use mvf::MvfSpec;
pub use pary::{checked_pow, PAryIndex};
