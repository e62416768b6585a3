//! Arbitrary-precision building blocks: binomial coefficients, Bernoulli
//! numbers, and closed-form power sums.
//!
//! Everything here is exact. Bernoulli numbers use the convention with
//! `B_1 = +1/2` (the one that makes `sum_{i=1}^{N} i^k` come out without
//! sign fiddling); the rest of the crate depends on that sign.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // Exact at every step: the running product is C(n - k + i, i).
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Bernoulli numbers `B_0 ..= B_k_max` under the `B_1 = +1/2` convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// `B_j`. Panics if `j` is beyond the table.
    pub fn get(&self, j: usize) -> &Rational {
        &self.values[j]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

static BERNOULLI_MEMO: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Table of Bernoulli numbers up to index `k_max` inclusive.
///
/// Values satisfy `sum_{j=0}^{k} C(k+1, j) B_j = k + 1` for every `k`,
/// which pins `B_0 = 1, B_1 = 1/2, B_2 = 1/6, ...`. The table is memoized
/// process-wide and only ever extended, so repeated calls are cheap.
pub fn bernoulli_table(k_max: usize) -> BernoulliTable {
    let mut memo = BERNOULLI_MEMO.lock().expect("bernoulli memo poisoned");
    while memo.len() <= k_max {
        let k = memo.len();
        // Solve sum_{j=0}^{k} C(k+1, j) B_j = k + 1 for B_k; the j = k
        // term has coefficient C(k+1, k) = k + 1.
        let mut sum = Rational::zero();
        for (j, b) in memo.iter().enumerate() {
            sum += Rational::from_integer(binomial(k as u64 + 1, j as i64)) * b;
        }
        let k1 = Rational::from_integer(BigInt::from(k as u64 + 1));
        memo.push((k1 - sum) / Rational::from_integer(BigInt::from(k as u64 + 1)));
    }
    BernoulliTable {
        values: memo[..=k_max].to_vec(),
    }
}

/// `sum_{i=1}^{n} i^k`, evaluated in closed form:
/// `(1/(k+1)) * sum_{j=0}^{k} C(k+1, j) B_j n^(k+1-j)`.
///
/// Requires `n >= 0`. Panics if the rational total fails to be an integer,
/// which the formula rules out; a trip here means the Bernoulli or binomial
/// code is broken.
pub fn power_sum(n: &BigInt, k: u32) -> BigInt {
    assert!(!n.is_negative(), "power_sum needs n >= 0, got {n}");
    let table = bernoulli_table(k as usize);
    let mut total = Rational::zero();
    for j in 0..=k as usize {
        let c = binomial(k as u64 + 1, j as i64);
        let pw = n.pow(k + 1 - j as u32);
        total += Rational::from_integer(c * pw) * table.get(j);
    }
    total /= Rational::from_integer(BigInt::from(k + 1));
    assert!(
        total.is_integer(),
        "power_sum({n}, {k}) came out non-integral: {total}"
    );
    total.to_integer()
}

/// `sum_{i=0}^{n} i^k` under the convention `0^0 = 1`.
pub fn power_sum_inclusive_zero(n: &BigInt, k: u32) -> BigInt {
    let extra = if k == 0 { BigInt::one() } else { BigInt::zero() };
    power_sum(n, k) + extra
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(big(p), big(q))
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(7, 0), big(1));
        assert_eq!(binomial(7, 7), big(1));
        assert_eq!(binomial(4, 7), big(0));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(30, 15), big(155_117_520));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for n in 0..=40u64 {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(
                    binomial(n, k as i64),
                    *expected,
                    "C({n}, {k}) disagrees with Pascal's triangle"
                );
            }
            let mut next = vec![BigInt::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            row = next;
        }
    }

    #[test]
    fn bernoulli_low_values_are_pinned() {
        let t = bernoulli_table(4);
        assert_eq!(t.get(0), &rat(1, 1));
        assert_eq!(t.get(1), &rat(1, 2), "this crate uses the B_1 = +1/2 convention");
        assert_eq!(t.get(2), &rat(1, 6));
        assert_eq!(t.get(3), &rat(0, 1));
        assert_eq!(t.get(4), &rat(-1, 30));
    }

    #[test]
    fn bernoulli_defining_sum_holds_up_to_20() {
        // sum_{j=0}^{k} C(k+1, j) B_j = k + 1 is the recurrence the table
        // is built from; re-check it independently for every k.
        let t = bernoulli_table(20);
        for k in 0..=20usize {
            let mut sum = Rational::zero();
            for j in 0..=k {
                sum += Rational::from_integer(binomial(k as u64 + 1, j as i64)) * t.get(j);
            }
            assert_eq!(sum, rat(k as i64 + 1, 1), "defining sum failed at k={k}");
        }
    }

    #[test]
    fn bernoulli_odd_indices_vanish_above_one() {
        let t = bernoulli_table(19);
        for j in (3..=19usize).step_by(2) {
            assert!(t.get(j).is_zero(), "B_{j} should be zero, got {}", t.get(j));
        }
    }

    #[test]
    fn bernoulli_memo_extends_consistently() {
        let small = bernoulli_table(3);
        let large = bernoulli_table(12);
        let mid = bernoulli_table(8);
        assert_eq!(small.values(), &large.values()[..=3]);
        assert_eq!(mid.values(), &large.values()[..=8]);
    }

    #[test]
    fn power_sum_small_cases() {
        assert_eq!(power_sum(&big(10), 1), big(55));
        assert_eq!(power_sum(&big(3), 2), big(14));
        assert_eq!(power_sum(&big(0), 5), big(0));
        assert_eq!(power_sum(&big(1), 0), big(1));
        // sum of cubes is the square of the triangular number
        assert_eq!(power_sum(&big(14), 3), big(11025));
    }

    #[test]
    fn power_sum_matches_naive_loop() {
        for k in 0..=12u32 {
            for n in 0..=200i64 {
                let mut naive = BigInt::zero();
                for i in 1..=n {
                    naive += big(i).pow(k);
                }
                assert_eq!(power_sum(&big(n), k), naive, "mismatch at n={n}, k={k}");
            }
        }
    }

    #[test]
    fn power_sum_inclusive_zero_counts_the_zero_term() {
        assert_eq!(power_sum_inclusive_zero(&big(4), 0), big(5));
        assert_eq!(power_sum_inclusive_zero(&big(0), 0), big(1));
        for k in 1..=6u32 {
            assert_eq!(
                power_sum_inclusive_zero(&big(9), k),
                power_sum(&big(9), k),
                "0^{k} must contribute nothing"
            );
        }
    }

    #[test]
    fn rational_display_contract() {
        assert_eq!(rat(3, 4).to_string(), "3/4");
        assert_eq!(rat(5, 1).to_string(), "5");
        assert_eq!(rat(2, 4), rat(1, 2), "construction must reduce");
        let r = Rational::new(big(1), big(-2));
        assert_eq!(r.to_string(), "-1/2", "denominator must be kept positive");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn rational_add_sub_round_trips(p in -1000i64..1000, q in 1i64..1000,
                                        r in -1000i64..1000, s in 1i64..1000) {
            let x = rat(p, q);
            let y = rat(r, s);
            prop_assert_eq!((&x + &y) - &y, x);
        }

        #[test]
        fn binomial_row_sums_to_power_of_two(n in 0u64..40) {
            let mut sum = BigInt::zero();
            for k in 0..=n {
                sum += binomial(n, k as i64);
            }
            prop_assert_eq!(sum, BigInt::from(2u8).pow(n.to_u32().unwrap()));
        }
    }
}
