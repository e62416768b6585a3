//! Falsifiable checks for the identities the rest of the crate leans on:
//! an alternating binomial identity, the binomial transform linking grid
//! power sums to gap power sums, the residue-grid bijection onto
//! `[0, ab)`, and the closed membership rules for the pairs `(a, a+1)`
//! and `(a, a+2)`.
//!
//! Each check recomputes both sides from scratch (grids literally,
//! sums by enumeration) so a bug in the closed forms cannot hide.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_math::binomial;
use crate::grid::{grid_dims, BitSet};
use crate::representability::{count_representations_oracle, is_representable_division};
use crate::sylvester_sums::sylvester_sum_enumerate;
use crate::{CoprimePair, Error};

/// One verified statement: `passed` iff `lhs == rhs` as strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Ordered list of check records from one or more sweeps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn record(&mut self, name: &str, parameters: String, lhs: String, rhs: String) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            parameters,
            passed: lhs == rhs,
            lhs,
            rhs,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

/// Both sides of `sum_{i=1}^{m} (-1)^(i+1) C(n,i) C(n-i, m-i) = C(n,m)`
/// for `n >= m >= 1`.
pub fn alternating_identity_sides(n: u64, m: u64) -> (BigInt, BigInt) {
    assert!(m >= 1 && m <= n, "identity needs n >= m >= 1");
    let mut lhs = BigInt::zero();
    for i in 1..=m {
        let term = binomial(n, i as i64) * binomial(n - i, (m - i) as i64);
        if i % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    (lhs, binomial(n, m as i64))
}

pub fn check_alternating_identity(n: u64, m: u64) -> bool {
    let (lhs, rhs) = alternating_identity_sides(n, m);
    lhs == rhs
}

/// Both sides of the binomial transform
/// `sum over gap cells of (a*a1 + b*b1)^n = sum_{i=0}^{n} C(n,i) (ab)^i S_{n-i}`.
/// The left side walks the grid literally; the right side uses enumerated
/// gap power sums, so neither depends on the recursion.
pub fn binomial_transform_sides(
    pair: &CoprimePair,
    n: u32,
    max_cells: u64,
) -> Result<(BigInt, BigInt), Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    let ab = a as i128 * b as i128;
    let mut lhs = BigInt::zero();
    for a1 in 0..b {
        let mut v = a as i128 * a1 as i128 - ab;
        for _b1 in 0..a {
            if v > 0 {
                lhs += BigInt::from((v + ab) as u128).pow(n);
            }
            v += b as i128;
        }
    }
    let ab_big = pair.product();
    let mut rhs = BigInt::zero();
    let mut ab_pow = BigInt::from(1);
    for i in 0..=n {
        rhs += binomial(n as u64, i as i64) * &ab_pow * sylvester_sum_enumerate(pair, n - i, max_cells)?;
        ab_pow *= &ab_big;
    }
    Ok((lhs, rhs))
}

pub fn check_binomial_transform(pair: &CoprimePair, n: u32, max_cells: u64) -> Result<bool, Error> {
    let (lhs, rhs) = binomial_transform_sides(pair, n, max_cells)?;
    Ok(lhs == rhs)
}

/// Tally of how `a*a1 + b*b1 - ab*chi` lands in `[0, ab)` across the grid.
/// A correct chi makes it a bijection: every cell covered exactly once and
/// never a zero product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BijectionCoverage {
    pub cells: u64,
    pub covered: u64,
    pub duplicates: u64,
    pub zero_products: u64,
    pub out_of_range: u64,
}

impl BijectionCoverage {
    pub fn holds(&self) -> bool {
        self.covered == self.cells
            && self.duplicates == 0
            && self.zero_products == 0
            && self.out_of_range == 0
    }
}

/// Walks the grid with an arbitrary chi so tests can inject a wrong sign
/// and watch the coverage break.
fn coverage_with_chi(a: u64, b: u64, chi: impl Fn(i128) -> bool) -> BijectionCoverage {
    let ab = a * b;
    let mut seen = BitSet::new(ab);
    let mut cov = BijectionCoverage {
        cells: ab,
        covered: 0,
        duplicates: 0,
        zero_products: 0,
        out_of_range: 0,
    };
    for a1 in 0..b {
        let mut v = a as i128 * a1 as i128 - ab as i128;
        for _b1 in 0..a {
            if v == 0 {
                cov.zero_products += 1;
            } else {
                let w = if chi(v) { v } else { v + ab as i128 };
                if w < 0 || w >= ab as i128 {
                    cov.out_of_range += 1;
                } else if seen.get(w as u64) {
                    cov.duplicates += 1;
                } else {
                    seen.set(w as u64);
                    cov.covered += 1;
                }
            }
            v += b as i128;
        }
    }
    cov
}

/// Coverage of `[0, ab)` under the correct chi (1 exactly when
/// `a*a1 + b*b1 - ab > 0`).
pub fn bijection_coverage(pair: &CoprimePair, max_cells: u64) -> Result<BijectionCoverage, Error> {
    let (a, b) = grid_dims(pair, max_cells)?;
    Ok(coverage_with_chi(a, b, |v| v > 0))
}

pub fn check_bijection(pair: &CoprimePair, max_cells: u64) -> Result<bool, Error> {
    Ok(bijection_coverage(pair, max_cells)?.holds())
}

/// Sweeps `m = 0 ..= m_bound` comparing the closed membership rules for
/// `(a, a+1)` (and `(a, a+2)` when `a` is odd) against the counting-loop
/// oracle and the division criterion. Records carry checked/agreeing
/// counts; the division comparison is skipped when `a = 1`.
pub fn check_special_cases(a: u64, m_bound: u64) -> VerifyReport {
    let mut report = VerifyReport::default();
    let p1 = CoprimePair::new(BigInt::from(a), BigInt::from(a + 1))
        .expect("consecutive integers are coprime");
    compare_rule(&mut report, &p1, m_bound, "lemma_a_plus_one", |m| {
        (m / a) * (a + 1) >= m
    });
    if a % 2 == 1 {
        let p2 = CoprimePair::new(BigInt::from(a), BigInt::from(a + 2))
            .expect("odd a is coprime to a + 2");
        compare_rule(&mut report, &p2, m_bound, "lemma_a_plus_two", |m| {
            let q = m / a;
            if (m % a) % 2 == 0 {
                q * (a + 2) >= m
            } else {
                q * (a + 2) >= m + a + 2
            }
        });
    }
    report
}

fn compare_rule(
    report: &mut VerifyReport,
    pair: &CoprimePair,
    m_bound: u64,
    name: &str,
    rule: impl Fn(u64) -> bool,
) {
    let describe = |suffix: &str, first_mismatch: Option<u64>| {
        let base = format!("a={} b={} m_max={m_bound}", pair.a(), pair.b());
        match first_mismatch {
            None => format!("{base} {suffix}"),
            Some(m) => format!("{base} {suffix} first_mismatch_m={m}"),
        }
    };

    let mut agree = 0u64;
    let mut first_mismatch = None;
    for m in 0..=m_bound {
        let expected = !count_representations_oracle(pair, &BigInt::from(m)).is_zero();
        if rule(m) == expected {
            agree += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(m);
        }
    }
    report.record(
        &format!("{name}_vs_brute"),
        describe("vs counting loop", first_mismatch),
        (m_bound + 1).to_string(),
        agree.to_string(),
    );

    if pair.a() > &BigInt::from(1) {
        let mut agree = 0u64;
        let mut first_mismatch = None;
        for m in 0..=m_bound {
            let division = is_representable_division(pair, &BigInt::from(m))
                .expect("a >= 2 checked above")
                .holds;
            if rule(m) == division {
                agree += 1;
            } else if first_mismatch.is_none() {
                first_mismatch = Some(m);
            }
        }
        report.record(
            &format!("{name}_vs_division"),
            describe("vs division criterion", first_mismatch),
            (m_bound + 1).to_string(),
            agree.to_string(),
        );
    }
}
