//! Exact arithmetic for the two-coin Frobenius problem.
//!
//! For coprime positive integers `a` and `b`, the numerical semigroup
//! `{ax + by : x, y >= 0}` misses finitely many nonnegative integers (the
//! gaps). This crate decides membership, counts representations, enumerates
//! the gap set, and computes the power sums `S_m = sum of n^m` over the gaps,
//! all in arbitrary precision. Every closed-form route has an independent
//! brute-force counterpart so the two can be checked against each other.

pub mod exact_math;
pub mod gaps;
pub mod identities;
pub mod representability;
pub mod sylvester_sums;

mod error;
mod grid;

pub use error::Error;
pub use representability::CoprimePair;

/// Default ceiling on `a * b` for grid and sieve enumeration (in cells).
pub const DEFAULT_MAX_CELLS: u64 = 100_000_000;
