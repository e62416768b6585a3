//! Membership in the numerical semigroup generated by two coprime coins.
//!
//! For a validated pair `(a, b)` the residues `a1 = n a^-1 mod b` and
//! `b1 = n b^-1 mod a` drive everything: the exact representation count
//! `N(n) = 1 + (n - a*a1 - b*b1) / (ab)`, canonical witnesses, and gap
//! certificates. A separate division-algorithm criterion decides
//! membership without computing modular inverses of `n`, and a plain
//! counting loop serves as the independent oracle for both.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Validated coprime pair of positive integers, kept in the order given
/// (callers may care about orientation), with both modular inverses
/// precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimePair {
    a: BigInt,
    b: BigInt,
    a_inv_mod_b: BigInt,
    b_inv_mod_a: BigInt,
}

impl CoprimePair {
    /// Validates `a, b >= 1` and `gcd(a, b) = 1`, then precomputes
    /// `a^-1 mod b` and `b^-1 mod a` (an inverse is 0 when its modulus is 1).
    pub fn new(a: BigInt, b: BigInt) -> Result<Self, Error> {
        for v in [&a, &b] {
            if !v.is_positive() {
                return Err(Error::NonPositive { value: v.clone() });
            }
        }
        let gcd = a.gcd(&b);
        if !gcd.is_one() {
            return Err(Error::NotCoprime { a, b, gcd });
        }
        let a_inv_mod_b = mod_inverse(&a, &b).expect("a is invertible mod b");
        let b_inv_mod_a = mod_inverse(&b, &a).expect("b is invertible mod a");
        Ok(CoprimePair {
            a,
            b,
            a_inv_mod_b,
            b_inv_mod_a,
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn a_inv_mod_b(&self) -> &BigInt {
        &self.a_inv_mod_b
    }

    pub fn b_inv_mod_a(&self) -> &BigInt {
        &self.b_inv_mod_a
    }

    /// `a * b`.
    pub fn product(&self) -> BigInt {
        &self.a * &self.b
    }
}

/// The residue coordinates of `n`: `a1 = n a^-1 mod b`, `b1 = n b^-1 mod a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePair {
    pub a1: BigInt,
    pub b1: BigInt,
}

/// A representation `n = a*x + b*y` with `x, y >= 0` and `x` minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepWitness {
    pub x: BigInt,
    pub y: BigInt,
}

/// Residues certifying a gap: `n = a*a1 + b*b1 - ab` with `0 <= a1 < b`,
/// `0 <= b1 < a`, so no nonnegative representation exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCertificate {
    pub a1: BigInt,
    pub b1: BigInt,
}

/// Intermediate values of the division-algorithm membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionCriterionData {
    /// Quotient of `b = a*q0 + r0`.
    pub q0: BigInt,
    /// Remainder of `b = a*q0 + r0`; coprimality forces `0 < r0 < a`.
    pub r0: BigInt,
    /// `m mod a`.
    pub r: BigInt,
    /// `r mod r0`.
    pub r_m: BigInt,
    /// The unique `0 <= k_m < r0` with `k_m = -(a^-1 mod r0) * r_m mod r0`.
    pub k_m: BigInt,
    /// Whether `floor(m/a) * b >= q0 * m + k_m * b`, i.e. `m` is representable.
    pub holds: bool,
}

/// Inverse of `x` modulo `modulus > 0`, reduced into `[0, modulus)`.
/// By convention the inverse is 0 when `modulus` is 1.
fn mod_inverse(x: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    if modulus.is_one() {
        return Some(BigInt::zero());
    }
    let e = x.extended_gcd(modulus);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(modulus))
}

/// Residue coordinates of `n >= 0` with respect to the pair.
pub fn residues(pair: &CoprimePair, n: &BigInt) -> ResiduePair {
    assert!(!n.is_negative(), "residues need n >= 0, got {n}");
    ResiduePair {
        a1: (n * &pair.a_inv_mod_b).mod_floor(&pair.b),
        b1: (n * &pair.b_inv_mod_a).mod_floor(&pair.a),
    }
}

/// Exact number of representations `n = a*x + b*y` with `x, y >= 0`,
/// via `N(n) = 1 + (n - a*a1 - b*b1) / (ab)`. Valid for all `n >= 0`
/// including 0 (the empty representation counts once).
pub fn count_representations(pair: &CoprimePair, n: &BigInt) -> BigInt {
    let rp = residues(pair, n);
    let numerator = n - pair.a() * &rp.a1 - pair.b() * &rp.b1;
    let (q, rem) = numerator.div_rem(&pair.product());
    assert!(
        rem.is_zero(),
        "counting formula division must be exact: n={n}, a1={}, b1={}",
        rp.a1,
        rp.b1
    );
    let count = BigInt::one() + q;
    assert!(
        !count.is_negative(),
        "representation count must be nonnegative: n={n} gave {count}"
    );
    count
}

/// Counting loop oracle: tries every `y` in `[0, n/b]` and counts those
/// with `a | (n - b*y)`. Exists to cross-check `count_representations`;
/// runtime is linear in `n / b`.
pub fn count_representations_oracle(pair: &CoprimePair, n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "oracle needs n >= 0, got {n}");
    if let (Some(a), Some(b), Some(n)) = (pair.a.to_u64(), pair.b.to_u64(), n.to_u64()) {
        let mut count: u64 = 0;
        let mut rem = n;
        loop {
            if rem % a == 0 {
                count += 1;
            }
            if rem < b {
                break;
            }
            rem -= b;
        }
        return BigInt::from(count);
    }
    let mut count = BigInt::zero();
    let mut rem = n.clone();
    loop {
        if rem.mod_floor(&pair.a).is_zero() {
            count += 1;
        }
        if rem < pair.b {
            break;
        }
        rem -= &pair.b;
    }
    count
}

/// Division-algorithm membership test for `m >= 0`.
///
/// Writes `b = a*q0 + r0`, reduces `m` to `r = m mod a` and `r_m = r mod r0`,
/// solves `k_m = -(a^-1) r_m mod r0`, and decides via the exact integer
/// comparison `floor(m/a) * b >= q0 * m + k_m * b`. Requires `a >= 2`; for
/// `a = 1` every `m` is representable and there is no division step to take,
/// so the pair is refused.
pub fn is_representable_division(
    pair: &CoprimePair,
    m: &BigInt,
) -> Result<DivisionCriterionData, Error> {
    assert!(!m.is_negative(), "criterion needs m >= 0, got {m}");
    if pair.a.is_one() {
        return Err(Error::UnsupportedPair {
            reason: format!(
                "division criterion needs a >= 2, got a=1 (every n is representable by coin 1); \
                 pair was ({}, {})",
                pair.a, pair.b
            ),
        });
    }
    let (q0, r0) = pair.b.div_rem(&pair.a);
    debug_assert!(r0.is_positive() && r0 < pair.a, "coprimality forces 0 < r0 < a");
    let r = m.mod_floor(&pair.a);
    let r_m = r.mod_floor(&r0);
    let k_m = if r0.is_one() {
        BigInt::zero()
    } else {
        let a_inv = mod_inverse(&pair.a, &r0).expect("gcd(a, r0) = gcd(a, b) = 1");
        (-(a_inv * &r_m)).mod_floor(&r0)
    };
    let holds = (m / &pair.a) * &pair.b >= &q0 * m + &k_m * &pair.b;
    Ok(DivisionCriterionData {
        q0,
        r0,
        r,
        r_m,
        k_m,
        holds,
    })
}

/// Representation with the least possible `x`, namely `x = a1`, or `None`
/// when `n` is a gap.
pub fn witness(pair: &CoprimePair, n: &BigInt) -> Option<RepWitness> {
    if count_representations(pair, n).is_zero() {
        return None;
    }
    let rp = residues(pair, n);
    let numerator = n - pair.a() * &rp.a1;
    let (y, rem) = numerator.div_rem(&pair.b);
    assert!(rem.is_zero() && !y.is_negative(), "witness arithmetic broke at n={n}");
    Some(RepWitness { x: rp.a1, y })
}

/// Residue certificate that `n` is a gap, or `None` when `n` is representable.
pub fn gap_certificate(pair: &CoprimePair, n: &BigInt) -> Option<GapCertificate> {
    if !count_representations(pair, n).is_zero() {
        return None;
    }
    let rp = residues(pair, n);
    let reconstructed = pair.a() * &rp.a1 + pair.b() * &rp.b1 - pair.product();
    assert_eq!(
        &reconstructed, n,
        "a gap must satisfy n = a*a1 + b*b1 - ab exactly"
    );
    Some(GapCertificate {
        a1: rp.a1,
        b1: rp.b1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(big(a), big(b)).unwrap()
    }

    #[test]
    fn new_computes_both_inverses() {
        let p = pair(3, 5);
        assert_eq!(p.a_inv_mod_b(), &big(2));
        assert_eq!(p.b_inv_mod_a(), &big(2));
        let p = pair(1, 7);
        assert_eq!(p.a_inv_mod_b(), &big(1));
        assert_eq!(p.b_inv_mod_a(), &big(0), "modulus 1 gets inverse 0");
    }

    #[test]
    fn new_keeps_orientation() {
        let p = pair(5, 3);
        assert_eq!((p.a(), p.b()), (&big(5), &big(3)));
    }

    #[test]
    fn new_rejects_bad_pairs() {
        assert!(matches!(
            CoprimePair::new(big(4), big(6)),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            CoprimePair::new(big(0), big(5)),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            CoprimePair::new(big(3), big(-2)),
            Err(Error::NonPositive { .. })
        ));
    }

    #[test]
    fn inverse_identities_hold_for_many_pairs() {
        for a in 1..=30i64 {
            for b in 1..=30i64 {
                if big(a).gcd(&big(b)) != big(1) {
                    continue;
                }
                let p = pair(a, b);
                if b > 1 {
                    assert_eq!((p.a() * p.a_inv_mod_b()).mod_floor(p.b()), big(1));
                }
                if a > 1 {
                    assert_eq!((p.b() * p.b_inv_mod_a()).mod_floor(p.a()), big(1));
                }
            }
        }
    }

    #[test]
    fn residues_of_seven_for_three_five() {
        let rp = residues(&pair(3, 5), &big(7));
        assert_eq!((rp.a1, rp.b1), (big(4), big(2)));
        let rp = residues(&pair(3, 5), &big(0));
        assert_eq!((rp.a1, rp.b1), (big(0), big(0)));
    }

    #[test]
    fn count_small_cases() {
        let p = pair(3, 5);
        assert_eq!(count_representations(&p, &big(0)), big(1));
        assert_eq!(count_representations(&p, &big(7)), big(0));
        assert_eq!(count_representations(&p, &big(8)), big(1));
        assert_eq!(count_representations(&p, &big(15)), big(2));
        let p = pair(2, 3);
        assert_eq!(count_representations(&p, &big(12)), big(3));
        assert_eq!(count_representations_oracle(&p, &big(12)), big(3));
    }

    #[test]
    fn count_matches_oracle_for_small_pairs() {
        for a in 1..=20i64 {
            for b in 1..=20i64 {
                if big(a).gcd(&big(b)) != big(1) {
                    continue;
                }
                let p = pair(a, b);
                let bound = a * b + a + b;
                for n in 0..=bound {
                    assert_eq!(
                        count_representations(&p, &big(n)),
                        count_representations_oracle(&p, &big(n)),
                        "count mismatch at a={a}, b={b}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn division_criterion_worked_examples() {
        let p = pair(3, 5);
        let d = is_representable_division(&p, &big(7)).unwrap();
        assert_eq!(
            (d.q0, d.r0, d.r, d.r_m, d.k_m, d.holds),
            (big(1), big(2), big(1), big(1), big(1), false)
        );
        let d = is_representable_division(&p, &big(8)).unwrap();
        assert!(d.holds);

        // reversed orientation: q0 = 0, r0 = b
        let d = is_representable_division(&pair(5, 3), &big(6)).unwrap();
        assert_eq!((d.q0, d.r0, d.k_m, d.holds), (big(0), big(3), big(1), true));
    }

    #[test]
    fn division_criterion_refuses_a_equal_one() {
        let err = is_representable_division(&pair(1, 7), &big(3)).unwrap_err();
        assert!(matches!(err, Error::UnsupportedPair { .. }));
    }

    #[test]
    fn division_criterion_matches_counting() {
        for a in 2..=20i64 {
            for b in 1..=20i64 {
                if big(a).gcd(&big(b)) != big(1) {
                    continue;
                }
                let p = pair(a, b);
                for n in 0..=(a * b + a + b) {
                    let d = is_representable_division(&p, &big(n)).unwrap();
                    let counted = count_representations(&p, &big(n)) > big(0);
                    assert_eq!(d.holds, counted, "criterion disagrees at a={a}, b={b}, n={n}");
                }
            }
        }
    }

    #[test]
    fn witness_small_cases() {
        let p = pair(3, 5);
        let w = witness(&p, &big(8)).unwrap();
        assert_eq!((w.x, w.y), (big(1), big(1)));
        let w = witness(&p, &big(15)).unwrap();
        assert_eq!((w.x, w.y), (big(0), big(3)));
        assert!(witness(&p, &big(7)).is_none());
    }

    #[test]
    fn witness_is_valid_and_x_minimal() {
        for a in 1..=12i64 {
            for b in 1..=12i64 {
                if big(a).gcd(&big(b)) != big(1) {
                    continue;
                }
                let p = pair(a, b);
                for n in 0..=(a * b) {
                    let Some(w) = witness(&p, &big(n)) else { continue };
                    assert_eq!(p.a() * &w.x + p.b() * &w.y, big(n));
                    assert!(!w.x.is_negative() && !w.y.is_negative());
                    // no representation with a smaller x can exist
                    let mut x = big(0);
                    while x < w.x {
                        let rest = big(n) - p.a() * &x;
                        assert!(
                            !rest.mod_floor(p.b()).is_zero(),
                            "x={x} beats the witness at a={a}, b={b}, n={n}"
                        );
                        x += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_small_cases() {
        let p = pair(3, 5);
        let c = gap_certificate(&p, &big(1)).unwrap();
        assert_eq!((c.a1, c.b1), (big(2), big(2)));
        let c = gap_certificate(&p, &big(7)).unwrap();
        assert_eq!((c.a1, c.b1), (big(4), big(2)));
        assert!(gap_certificate(&p, &big(8)).is_none());
    }

    #[test]
    fn exactly_one_of_witness_or_certificate() {
        for a in 1..=12i64 {
            for b in 1..=12i64 {
                if big(a).gcd(&big(b)) != big(1) {
                    continue;
                }
                let p = pair(a, b);
                for n in 0..(a * b) {
                    let w = witness(&p, &big(n)).is_some();
                    let c = gap_certificate(&p, &big(n)).is_some();
                    assert!(w ^ c, "exactly one must apply at a={a}, b={b}, n={n}");
                }
            }
        }
    }
}
