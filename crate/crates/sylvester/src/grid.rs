//! Crate-private plumbing for bounded grid and sieve walks.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::{CoprimePair, Error};

/// Enforces `a * b <= max_cells` before any allocation or loop, then hands
/// back the pair as machine words (safe: both fit once the product does).
pub(crate) fn grid_dims(pair: &CoprimePair, max_cells: u64) -> Result<(u64, u64), Error> {
    let cells = pair.product();
    if cells > BigInt::from(max_cells) {
        return Err(Error::ResourceLimit { cells, max_cells });
    }
    let a = pair.a().to_u64().expect("a <= a*b <= max_cells");
    let b = pair.b().to_u64().expect("b <= a*b <= max_cells");
    Ok((a, b))
}

/// Flat bit set over `[0, len)`; one bit per cell.
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: u64,
}

impl BitSet {
    pub(crate) fn new(len: u64) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64) as usize],
            len,
        }
    }

    pub(crate) fn set(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] |= 1 << (i & 63);
    }

    pub(crate) fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] & (1 << (i & 63)) != 0
    }
}
