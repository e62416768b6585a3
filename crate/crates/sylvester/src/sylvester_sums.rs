//! Power sums `S_m = sum of n^m` over the gap set, computed two ways.
//!
//! The recursive route never touches the grid: each `S_{m-1}` falls out of
//! an exact integer identity between the grid power sum (in closed form),
//! mixing terms over the already-known table, and a Bernoulli-evaluated
//! power sum, with the whole right side exactly divisible by `m*a*b`. The
//! enumeration route walks the residue grid and adds up `v^m` directly.
//! The recursion is polynomial in `m` and works for pairs far beyond
//! anything enumerable; the enumeration exists to keep it honest.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_math::{binomial, power_sum, power_sum_inclusive_zero};
use crate::gaps::sylvester_number;
use crate::grid::grid_dims;
use crate::{CoprimePair, Error};

/// Which route produced a `SumTable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    Recursive,
    Enumerate,
}

impl SumMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SumMethod::Recursive => "recursive",
            SumMethod::Enumerate => "enumerate",
        }
    }
}

/// `values[m] = S_m` for `m = 0 ..= max_index()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumTable {
    pub a: BigInt,
    pub b: BigInt,
    pub values: Vec<BigInt>,
    pub method: SumMethod,
}

impl SumTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}

/// `sum over the full residue grid of (a*a1 + b*b1)^m`, in closed form:
/// expanding the binomial splits the double sum into
/// `sum_i C(m,i) a^i b^(m-i) T_i(b-1) T_(m-i)(a-1)` where `T_k(N)` is the
/// power sum including the zero term. No grid iteration, so no size bound.
pub fn grid_power_sum(pair: &CoprimePair, m: u32) -> BigInt {
    let am1 = pair.a() - BigInt::one();
    let bm1 = pair.b() - BigInt::one();
    let mut total = BigInt::zero();
    for i in 0..=m {
        total += binomial(m as u64, i as i64)
            * pair.a().pow(i)
            * pair.b().pow(m - i)
            * power_sum_inclusive_zero(&bm1, i)
            * power_sum_inclusive_zero(&am1, m - i);
    }
    total
}

/// Literal double loop over the grid for the same quantity. Exists to
/// cross-check `grid_power_sum`; bounded by `max_cells`.
pub fn grid_power_sum_oracle(pair: &CoprimePair, m: u32, max_cells: u64) -> Result<BigInt, Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    let mut total = BigInt::zero();
    for a1 in 0..b {
        for b1 in 0..a {
            let w = a as u128 * a1 as u128 + b as u128 * b1 as u128;
            total += BigInt::from(w).pow(m);
        }
    }
    Ok(total)
}

/// `S_m` by direct enumeration: walks the residue grid and sums `v^m`
/// over the positive values `v = a*a1 + b*b1 - ab`, which are exactly the
/// gaps. Bounded by `max_cells`.
pub fn sylvester_sum_enumerate(pair: &CoprimePair, m: u32, max_cells: u64) -> Result<BigInt, Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    let ab = a as i128 * b as i128;
    let mut total = BigInt::zero();
    for a1 in 0..b {
        let mut v = a as i128 * a1 as i128 - ab;
        for _b1 in 0..a {
            assert!(v != 0, "a*a1 + b*b1 = ab is impossible on the grid");
            if v > 0 {
                total += BigInt::from(v as u64).pow(m);
            }
            v += b as i128;
        }
    }
    Ok(total)
}

/// Full table `S_0 ..= S_m_max` by enumeration.
pub fn sylvester_sums_enumerate(
    pair: &CoprimePair,
    m_max: u32,
    max_cells: u64,
) -> Result<SumTable, Error> {
    let values = (0..=m_max)
        .map(|m| sylvester_sum_enumerate(pair, m, max_cells))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SumTable {
        a: pair.a().clone(),
        b: pair.b().clone(),
        values,
        method: SumMethod::Enumerate,
    })
}

/// Full table `S_0 ..= S_m_max` by the exact recursion.
///
/// `S_0 = (a-1)(b-1)/2` seeds the table; level `m` then solves
///
/// ```text
/// m*ab*S_{m-1} = grid_power_sum(m)
///              - m*ab * sum_{j=1}^{m-1} C(m-1,j) (ab)^j S_{m-1-j}
///              + sum_{i=2}^{m} (-1)^i C(m,i) (ab)^i sum_{j=0}^{m-i} C(m-i,j) (ab)^j S_{m-i-j}
///              - sum_{n=1}^{ab-1} n^m
/// ```
///
/// for `S_{m-1}`. The right side is exactly divisible by `m*ab` and the
/// quotient is nonnegative; both are checked at every level, and the `m=1`
/// level must reproduce the seeded `S_0`. Any violation aborts with a dump
/// of every term (it would mean the arithmetic above is broken, not bad
/// input). Runtime is polynomial in `m_max`; the pair size only affects
/// bignum widths.
pub fn sylvester_sums_recursive(pair: &CoprimePair, m_max: u32) -> Result<SumTable, Error> {
    let ab = pair.product();
    let mut values = vec![sylvester_number(pair)];
    for m in 1..=(m_max as usize + 1) {
        let next = recursion_level(pair, &ab, m as u32, &values)?;
        if m == 1 {
            if next != values[0] {
                return Err(Error::Invariant(format!(
                    "recursion re-derived S_0 = {next} for pair ({}, {}) \
                     but the closed form gives {}",
                    pair.a(),
                    pair.b(),
                    values[0]
                )));
            }
        } else {
            values.push(next);
        }
    }
    debug_assert_eq!(values.len(), m_max as usize + 1);
    Ok(SumTable {
        a: pair.a().clone(),
        b: pair.b().clone(),
        values,
        method: SumMethod::Recursive,
    })
}

/// One level of the recursion: given `S_0 ..= S_{m-2}` in `known`,
/// assembles the right side and divides out `m*ab` to get `S_{m-1}`.
fn recursion_level(
    pair: &CoprimePair,
    ab: &BigInt,
    m: u32,
    known: &[BigInt],
) -> Result<BigInt, Error> {
    let m_us = m as usize;
    // powers of ab up to (ab)^m, computed once per level
    let mut ab_pow = Vec::with_capacity(m_us + 1);
    ab_pow.push(BigInt::one());
    for _ in 0..m {
        ab_pow.push(ab_pow.last().unwrap() * ab);
    }

    let grid = grid_power_sum(pair, m);

    let mut lower_mix = BigInt::zero();
    for j in 1..m_us {
        lower_mix += binomial(m as u64 - 1, j as i64) * &ab_pow[j] * &known[m_us - 1 - j];
    }
    let descent = BigInt::from(m) * ab * lower_mix;

    let mut correction = BigInt::zero();
    for i in 2..=m_us {
        let mut inner = BigInt::zero();
        for j in 0..=(m_us - i) {
            inner += binomial((m_us - i) as u64, j as i64) * &ab_pow[j] * &known[m_us - i - j];
        }
        let term = binomial(m as u64, i as i64) * &ab_pow[i] * inner;
        if i % 2 == 0 {
            correction += term;
        } else {
            correction -= term;
        }
    }

    let bernoulli_term = power_sum(&(ab - BigInt::one()), m);

    let rhs = &grid - &descent + &correction - &bernoulli_term;
    let divisor = BigInt::from(m) * ab;
    let (q, rem) = rhs.div_rem(&divisor);
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::Invariant(format!(
            "recursion level m={m} for pair ({a}, {b}) did not divide out to a \
             nonnegative integer\n\
             grid term      = {grid}\n\
             descent term   = {descent}\n\
             correction     = {correction}\n\
             bernoulli term = {bernoulli_term}\n\
             rhs            = {rhs}\n\
             divisor        = {divisor}\n\
             remainder      = {rem}\n\
             quotient       = {q}",
            a = pair.a(),
            b = pair.b(),
        )));
    }
    Ok(q)
}

/// Closed form `S_0 = (a-1)(b-1)/2`.
pub fn s0_closed(pair: &CoprimePair) -> BigInt {
    sylvester_number(pair)
}

/// Closed form `S_1 = (a-1)(b-1)(2ab - a - b - 1)/12`; the division is
/// always exact for coprime pairs and asserted.
pub fn s1_closed(pair: &CoprimePair) -> BigInt {
    let two_ab = BigInt::from(2) * pair.product();
    let product =
        (pair.a() - BigInt::one()) * (pair.b() - BigInt::one()) * (two_ab - pair.a() - pair.b() - BigInt::one());
    let (q, rem) = product.div_rem(&BigInt::from(12));
    assert!(rem.is_zero(), "S_1 closed form must divide by 12 exactly");
    q
}
