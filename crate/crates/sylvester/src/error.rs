use num_bigint::BigInt;

/// Errors reported by pair validation, bounded enumeration, and the
/// recursive sum pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value must be positive, got {value}")]
    NonPositive { value: BigInt },

    #[error("{a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: BigInt, b: BigInt, gcd: BigInt },

    #[error("unsupported pair: {reason}")]
    UnsupportedPair { reason: String },

    #[error("{cells} cells exceed the configured limit of {max_cells}")]
    ResourceLimit { cells: BigInt, max_cells: u64 },

    /// A quantity the underlying theorems guarantee failed to hold at
    /// runtime. The message carries a dump of every intermediate term.
    #[error("internal invariant violation: {0}")]
    Invariant(String),
}
