//! S-units: positive integers whose prime factorization lies inside a
//! [`PlaceSet`].
//!
//! Provides smoothness certificates, an ordered low-memory enumeration of
//! all S-units up to a bound, and detection of multiplicative relations
//! between pairs.

mod factor;

pub use factor::{
    factorize, factorize_with_hint, greatest_prime_factor, FactorConfig, Factorization,
};

use crate::arith::PlaceSet;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A positive integer together with its exponent vector over the primes of
/// a [`PlaceSet`]. The reconstruction `value = prod p_i^e_i` holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SUnit {
    value: u64,
    exponents: Vec<u32>,
}

impl SUnit {
    /// Certify `value` as an S-unit, or report a factor outside the set.
    pub fn new(value: u64, s: &PlaceSet) -> Result<SUnit> {
        match is_smooth(value, s)? {
            Some(exponents) => Ok(SUnit { value, exponents }),
            None => {
                let mut rest = value;
                for &p in s.primes() {
                    while rest % p == 0 {
                        rest /= p;
                    }
                }
                Err(Error::NonSmooth {
                    value,
                    offending: smallest_known_factor(rest),
                })
            }
        }
    }

    /// Assemble from parts already known to satisfy the reconstruction
    /// invariant (enumeration and smoothness checks produce both together).
    pub(crate) fn from_parts(value: u64, exponents: Vec<u32>) -> SUnit {
        SUnit { value, exponents }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn big_value(&self) -> BigUint {
        BigUint::from(self.value)
    }

    /// Exponents aligned with the place set's primes, ascending.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `(prime, exponent)` pairs with nonzero exponent.
    pub fn factor_pairs(&self, s: &PlaceSet) -> Vec<(u64, u32)> {
        s.primes()
            .iter()
            .zip(&self.exponents)
            .filter(|(_, &e)| e > 0)
            .map(|(&p, &e)| (p, e))
            .collect()
    }
}

fn smallest_known_factor(rest: u64) -> u64 {
    // `rest` is coprime to the place set's primes and > 1; its smallest
    // factor is what we can report. Falls back to the composite itself if
    // the budgeted factorization gives up.
    let f = factorize(rest, &FactorConfig::default()).expect("rest > 1");
    f.factors
        .first()
        .map(|&(p, _)| p)
        .or_else(|| f.unresolved.first().copied())
        .unwrap_or(rest)
}

/// Full exponent vector of `n` over the set's primes, if `n` is smooth.
pub fn is_smooth(n: u64, s: &PlaceSet) -> Result<Option<Vec<u32>>> {
    if n == 0 {
        return Err(Error::Domain("smoothness of zero is undefined".into()));
    }
    let mut rest = n;
    let mut exponents = vec![0u32; s.primes().len()];
    for (slot, &p) in exponents.iter_mut().zip(s.primes()) {
        while rest % p == 0 {
            rest /= p;
            *slot += 1;
        }
    }
    Ok(if rest == 1 { Some(exponents) } else { None })
}

/// Every S-unit `<= bound`, strictly increasing, each exactly once.
///
/// Backed by a min-heap seeded with 1; popping a value pushes its products
/// with primes at or above the largest prime already used, so every smooth
/// number is generated through its unique nondecreasing factor chain and no
/// dedup set is needed. Memory is proportional to the frontier.
pub fn enumerate_sunits(s: &PlaceSet, bound: u64) -> SUnitStream {
    let mut heap = BinaryHeap::new();
    if bound >= 1 {
        heap.push(Reverse((1u64, 0usize)));
    }
    SUnitStream {
        primes: s.primes().to_vec(),
        bound,
        heap,
    }
}

pub struct SUnitStream {
    primes: Vec<u64>,
    bound: u64,
    heap: BinaryHeap<Reverse<(u64, usize)>>,
}

impl Iterator for SUnitStream {
    type Item = SUnit;

    fn next(&mut self) -> Option<SUnit> {
        let Reverse((value, min_index)) = self.heap.pop()?;
        for (i, &p) in self.primes.iter().enumerate().skip(min_index) {
            match value.checked_mul(p) {
                Some(next) if next <= self.bound => self.heap.push(Reverse((next, i))),
                _ => {}
            }
        }
        let mut exponents = vec![0u32; self.primes.len()];
        let mut rest = value;
        for (slot, &p) in exponents.iter_mut().zip(&self.primes) {
            while rest % p == 0 {
                rest /= p;
                *slot += 1;
            }
        }
        debug_assert_eq!(rest, 1);
        Some(SUnit { value, exponents })
    }
}

/// True iff the two exponent vectors are not proportional over the
/// rationals. Vectors for the value 1 count as dependent by convention.
pub fn mult_independent(eu: &[u32], ev: &[u32]) -> Result<bool> {
    if eu.len() != ev.len() {
        return Err(Error::SupportMismatch);
    }
    if eu.iter().all(|&e| e == 0) || ev.iter().all(|&e| e == 0) {
        return Ok(false);
    }
    for i in 0..eu.len() {
        for j in (i + 1)..eu.len() {
            let minor = eu[i] as u64 * ev[j] as u64;
            let other = eu[j] as u64 * ev[i] as u64;
            if minor != other {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A multiplicative relation `u^p = v^q` with `gcd(p, q) = 1`, the minimal
/// such pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerRelation {
    pub p: u32,
    pub q: u32,
}

/// The minimal coprime relation `u^p = v^q`, if the exponent vectors are
/// proportional; verified by exact integer exponentiation. Expects both
/// values to be at least 2.
pub fn find_power_relation(u: &SUnit, v: &SUnit) -> Option<PowerRelation> {
    debug_assert_eq!(u.exponents.len(), v.exponents.len());
    if u.value < 2 || v.value < 2 {
        return None;
    }
    let i = u
        .exponents
        .iter()
        .zip(&v.exponents)
        .position(|(&a, &b)| a > 0 && b > 0)?;
    let g = u.exponents[i].gcd(&v.exponents[i]);
    let p = v.exponents[i] / g;
    let q = u.exponents[i] / g;
    let proportional = u
        .exponents
        .iter()
        .zip(&v.exponents)
        .all(|(&a, &b)| p as u64 * a as u64 == q as u64 * b as u64);
    if !proportional {
        return None;
    }
    let lhs = Pow::pow(&u.big_value(), p);
    let rhs = Pow::pow(&v.big_value(), q);
    (lhs == rhs).then_some(PowerRelation { p, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(primes: &[u64]) -> PlaceSet {
        PlaceSet::new(primes.iter().copied()).unwrap()
    }

    #[test]
    fn smoothness_examples() {
        let s = set(&[3, 5]);
        assert_eq!(is_smooth(45, &s).unwrap(), Some(vec![2, 1]));
        assert_eq!(is_smooth(28, &set(&[2, 3])).unwrap(), None);
        assert_eq!(is_smooth(1, &s).unwrap(), Some(vec![0, 0]));
        assert!(is_smooth(0, &s).is_err());
    }

    #[test]
    fn sunit_certificate_reconstructs() {
        let s = set(&[2, 3, 7]);
        let u = SUnit::new(126, &s).unwrap();
        assert_eq!(u.exponents(), &[1, 2, 1]);
        assert_eq!(u.factor_pairs(&s), vec![(2, 1), (3, 2), (7, 1)]);
        match SUnit::new(55, &s) {
            Err(Error::NonSmooth {
                value: 55,
                offending,
            }) => assert_eq!(offending, 5),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn enumeration_examples() {
        let values: Vec<u64> = enumerate_sunits(&set(&[2, 3]), 10)
            .map(|s| s.value())
            .collect();
        assert_eq!(values, vec![1, 2, 3, 4, 6, 8, 9]);
        let values: Vec<u64> = enumerate_sunits(&set(&[2]), 9).map(|s| s.value()).collect();
        assert_eq!(values, vec![1, 2, 4, 8]);
        let values: Vec<u64> = enumerate_sunits(&set(&[]), 50).map(|s| s.value()).collect();
        assert_eq!(values, vec![1]);
        assert_eq!(enumerate_sunits(&set(&[2]), 0).count(), 0);
    }

    #[test]
    fn enumeration_matches_filter_for_million_bound() {
        let s = set(&[2, 3, 5, 7]);
        let enumerated: Vec<u64> = enumerate_sunits(&s, 1_000_000).map(|u| u.value()).collect();
        let filtered: Vec<u64> = (1..=1_000_000u64)
            .filter(|&n| is_smooth(n, &s).unwrap().is_some())
            .collect();
        assert_eq!(enumerated, filtered);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(mult_independent(&[2], &[3]).unwrap(), false); // 4 vs 8
        assert_eq!(mult_independent(&[2, 1], &[1, 2]).unwrap(), true); // 12 vs 18
        assert_eq!(mult_independent(&[1, 0], &[0, 1]).unwrap(), true); // 2 vs 3
        assert_eq!(mult_independent(&[0, 0], &[1, 1]).unwrap(), false); // u = 1
        assert!(mult_independent(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn power_relation_examples() {
        let s = set(&[2]);
        let four = SUnit::new(4, &s).unwrap();
        let eight = SUnit::new(8, &s).unwrap();
        assert_eq!(
            find_power_relation(&four, &eight),
            Some(PowerRelation { p: 3, q: 2 })
        );

        let s23 = set(&[2, 3]);
        let two = SUnit::new(2, &s23).unwrap();
        let three = SUnit::new(3, &s23).unwrap();
        assert_eq!(find_power_relation(&two, &three), None);

        let s3 = set(&[3]);
        let nine = SUnit::new(9, &s3).unwrap();
        let twenty_seven = SUnit::new(27, &s3).unwrap();
        assert_eq!(
            find_power_relation(&nine, &twenty_seven),
            Some(PowerRelation { p: 3, q: 2 })
        );
    }

    proptest! {
        #[test]
        fn enumeration_equals_filter(
            mask in 1usize..64, // nonempty subset of {2,3,5,7,11,13}
            bound in 1u64..40_000,
        ) {
            let all = [2u64, 3, 5, 7, 11, 13];
            let primes: Vec<u64> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let s = set(&primes);
            let enumerated: Vec<u64> = enumerate_sunits(&s, bound).map(|u| u.value()).collect();
            let filtered: Vec<u64> = (1..=bound)
                .filter(|&n| is_smooth(n, &s).unwrap().is_some())
                .collect();
            prop_assert_eq!(enumerated, filtered);
        }

        #[test]
        fn emitted_certificates_reconstruct(bound in 1u64..20_000) {
            let s = set(&[2, 5, 11]);
            for unit in enumerate_sunits(&s, bound) {
                let product: u64 = s
                    .primes()
                    .iter()
                    .zip(unit.exponents())
                    .map(|(&p, &e)| p.pow(e))
                    .product();
                prop_assert_eq!(product, unit.value());
            }
        }

        #[test]
        fn relation_implies_dependent(e2u in 0u32..6, e3u in 0u32..6, e2v in 0u32..6, e3v in 0u32..6) {
            prop_assume!((e2u, e3u) != (0, 0) && (e2v, e3v) != (0, 0));
            let s = set(&[2, 3]);
            let u = SUnit::new(2u64.pow(e2u) * 3u64.pow(e3u), &s).unwrap();
            let v = SUnit::new(2u64.pow(e2v) * 3u64.pow(e3v), &s).unwrap();
            let relation = find_power_relation(&u, &v);
            let independent = mult_independent(u.exponents(), v.exponents()).unwrap();
            prop_assert_eq!(relation.is_some(), !independent);
            if let Some(PowerRelation { p, q }) = relation {
                prop_assert_eq!(num_integer::gcd(p, q), 1);
                prop_assert_eq!(Pow::pow(&u.big_value(), p), Pow::pow(&v.big_value(), q));
            }
        }
    }
}
