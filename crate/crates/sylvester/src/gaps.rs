//! Enumeration of the gap set `NR(a, b)`: the nonnegative integers with no
//! representation `a*x + b*y`.
//!
//! Two independent routes exist on purpose. The chi-grid route reads the
//! gaps off the residue grid as the positive values of `a*a1 + b*b1 - ab`;
//! the sieve route is a forward dynamic program that knows nothing about
//! residues. Tests hold them against each other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::grid::{grid_dims, BitSet};
use crate::{CoprimePair, Error};

/// Which enumeration route produced a `GapSet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapMethod {
    ChiGrid,
    Sieve,
}

impl GapMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            GapMethod::ChiGrid => "chi_grid",
            GapMethod::Sieve => "sieve",
        }
    }
}

/// The full gap set of a pair, sorted ascending.
///
/// `frobenius` is `ab - a - b` (equal to `max(elements)` when any gap
/// exists, `-1` when `a = 1` or `b = 1`), and `cardinality` is
/// `(a-1)(b-1)/2 = len(elements)`. Elements fit in `u64` because
/// enumeration enforces `a*b <= max_cells` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet {
    pub a: BigInt,
    pub b: BigInt,
    pub elements: Vec<u64>,
    pub frobenius: BigInt,
    pub cardinality: u64,
    pub method: GapMethod,
}

/// The Frobenius number `g(a, b) = ab - a - b`; `-1` means every
/// nonnegative integer is representable.
pub fn frobenius(pair: &CoprimePair) -> BigInt {
    pair.product() - pair.a() - pair.b()
}

/// The gap count `n(a, b) = (a-1)(b-1)/2`.
pub fn sylvester_number(pair: &CoprimePair) -> BigInt {
    let product = (pair.a() - BigInt::one()) * (pair.b() - BigInt::one());
    let (half, rem) = product.div_rem(&BigInt::from(2));
    assert!(rem.is_zero(), "(a-1)(b-1) is even for coprime a, b");
    half
}

fn finish(pair: &CoprimePair, mut elements: Vec<u64>, method: GapMethod) -> GapSet {
    elements.sort_unstable();
    for w in elements.windows(2) {
        assert!(w[0] < w[1], "duplicate gap {} from {:?}", w[0], method);
    }
    let expected = sylvester_number(pair);
    assert_eq!(
        BigInt::from(elements.len()),
        expected,
        "{:?} produced the wrong gap count for ({}, {})",
        method,
        pair.a(),
        pair.b()
    );
    let g = frobenius(pair);
    if let Some(&last) = elements.last() {
        assert_eq!(BigInt::from(last), g, "largest gap must be ab - a - b");
    }
    GapSet {
        a: pair.a().clone(),
        b: pair.b().clone(),
        cardinality: elements.len() as u64,
        elements,
        frobenius: g,
        method,
    }
}

/// Reads the gaps off the residue grid: for `0 <= a1 < b`, `0 <= b1 < a`,
/// the value `v = a*a1 + b*b1 - ab` is a gap exactly when positive, and
/// every gap shows up exactly once. `v = 0` cannot occur; that is asserted
/// cell by cell. Runs in `a*b` steps, bounded by `max_cells`.
pub fn enumerate_gaps_chi(pair: &CoprimePair, max_cells: u64) -> Result<GapSet, Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    let ab = a as i128 * b as i128;
    let expected = ((a - 1) as u128 * (b - 1) as u128 / 2) as usize;
    let mut elements = Vec::with_capacity(expected);
    for a1 in 0..b {
        // v walks up by b as b1 increments
        let mut v = a as i128 * a1 as i128 - ab;
        for _b1 in 0..a {
            assert!(v != 0, "a*a1 + b*b1 = ab is impossible on the grid");
            if v > 0 {
                elements.push(v as u64);
            }
            v += b as i128;
        }
    }
    assert_eq!(elements.len(), expected, "chi grid must yield (a-1)(b-1)/2 gaps");
    Ok(finish(pair, elements, GapMethod::ChiGrid))
}

/// Forward reachability sieve over `[0, ab)`: 0 is representable and `n`
/// is representable iff `n - a` or `n - b` is. The unmarked cells are the
/// gaps. Memory is one bit per cell, bounded by `max_cells`.
pub fn enumerate_gaps_sieve(pair: &CoprimePair, max_cells: u64) -> Result<GapSet, Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    let ab = a * b;
    let mut reachable = BitSet::new(ab);
    reachable.set(0);
    for n in 1..ab {
        if (n >= a && reachable.get(n - a)) || (n >= b && reachable.get(n - b)) {
            reachable.set(n);
        }
    }
    let elements: Vec<u64> = (1..ab).filter(|&n| !reachable.get(n)).collect();
    Ok(finish(pair, elements, GapMethod::Sieve))
}
