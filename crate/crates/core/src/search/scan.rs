//! Exponent scan of `gcd(u-1, v-1)` over S-unit pairs.
//!
//! For multiplicatively independent pairs the gcd stays small relative to
//! `max(u, v)`; dependent pairs (powers of a common base) realize exponents
//! near `1/2`. The scan records the measured exponent
//! `log gcd / log max(u, v)` for every pair and flags independence.

use super::shard_map;
use crate::arith::PlaceSet;
use crate::error::{Error, Result};
use crate::sunits::{enumerate_sunits, mult_independent, SUnit};
use num_integer::gcd;

#[derive(Debug, Clone, PartialEq)]
pub struct GcdScanRecord {
    pub u: u64,
    pub v: u64,
    pub g: u64,
    /// `ln(g) / ln(u)` with `u` the larger of the pair; 0 when `g = 1`.
    pub exponent: f64,
    pub independent: bool,
}

/// All pairs `min_value <= v < u <= bound` of S-units, sorted by exponent
/// descending (ties by `(u, v)` ascending).
pub fn gcd_scan(
    s: &PlaceSet,
    bound: u64,
    min_value: u64,
    workers: usize,
) -> Result<Vec<GcdScanRecord>> {
    if bound < 4 {
        return Err(Error::Domain("bound must be at least 4".into()));
    }
    if min_value < 2 {
        return Err(Error::Domain("min_value must be at least 2".into()));
    }
    let units: Vec<SUnit> = enumerate_sunits(s, bound)
        .filter(|u| u.value() >= min_value)
        .collect();

    let shards: Vec<Result<Vec<GcdScanRecord>>> = shard_map(&units, workers, |ui, u| {
        let mut records = Vec::with_capacity(ui);
        for v in &units[..ui] {
            let g = gcd(u.value() - 1, v.value() - 1);
            let exponent = if g == 1 {
                0.0
            } else {
                (g as f64).ln() / (u.value() as f64).ln()
            };
            records.push(GcdScanRecord {
                u: u.value(),
                v: v.value(),
                g,
                exponent,
                independent: mult_independent(u.exponents(), v.exponents())?,
            });
        }
        Ok(records)
    });

    let mut records = Vec::new();
    for shard in shards {
        records.extend(shard?);
    }
    records.sort_by(|a, b| {
        b.exponent
            .total_cmp(&a.exponent)
            .then(a.u.cmp(&b.u))
            .then(a.v.cmp(&b.v))
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sunits::{find_power_relation, PowerRelation};
    use num_bigint::BigUint;
    use num_integer::Integer;

    #[test]
    fn trivial_pair_has_zero_exponent() {
        let s = PlaceSet::new([2, 3]).unwrap();
        let records = gcd_scan(&s, 4, 2, 1).unwrap();
        // Pairs over {2, 3, 4}: (3,2), (4,2), (4,3).
        let r32 = records.iter().find(|r| (r.u, r.v) == (3, 2)).unwrap();
        assert_eq!(r32.g, 1);
        assert_eq!(r32.exponent, 0.0);
        assert!(r32.independent);
    }

    #[test]
    fn dependent_power_pair_scores_half() {
        let s = PlaceSet::new([2]).unwrap();
        let records = gcd_scan(&s, 1 << 40, 16, 1).unwrap();
        let hit = records
            .iter()
            .find(|r| (r.u, r.v) == (1 << 40, 1 << 20))
            .unwrap();
        assert_eq!(hit.g, (1 << 20) - 1);
        assert!((hit.exponent - 0.5).abs() < 1e-3);
        assert!(!hit.independent);
        // The top-sorted records are the dependent power pairs.
        assert!(!records[0].independent);
    }

    #[test]
    fn power_base_trend_matches_direct_gcd() {
        // Pairs (2^n, 3^n): the scan's gcd agrees with a direct big-integer
        // computation for every n up to 40.
        let s = PlaceSet::new([2, 3]).unwrap();
        let bound = 3u64.pow(40);
        let records = gcd_scan(&s, bound, 16, 4).unwrap();
        for n in 4u32..=40 {
            let (two_n, three_n) = (2u64.pow(n), 3u64.pow(n));
            let rec = records
                .iter()
                .find(|r| (r.u, r.v) == (three_n, two_n))
                .expect("pair present");
            let direct = (BigUint::from(two_n) - 1u32).gcd(&(BigUint::from(three_n) - 1u32));
            assert_eq!(BigUint::from(rec.g), direct, "n = {n}");
            assert!(rec.independent);
        }
    }

    #[test]
    fn dependence_flag_matches_power_relations() {
        let s = PlaceSet::new([2, 3]).unwrap();
        let units: Vec<SUnit> = enumerate_sunits(&s, 5_000)
            .filter(|u| u.value() >= 16)
            .collect();
        let records = gcd_scan(&s, 5_000, 16, 2).unwrap();
        for rec in &records {
            let u = units.iter().find(|x| x.value() == rec.u).unwrap();
            let v = units.iter().find(|x| x.value() == rec.v).unwrap();
            let relation = find_power_relation(u, v);
            assert_eq!(
                relation.is_some(),
                !rec.independent,
                "({}, {})",
                rec.u,
                rec.v
            );
            if let Some(PowerRelation { p, q }) = relation {
                // Common base t: u = t^q, so g = gcd(t^q - 1, t^p - 1) = t - 1.
                let t = (rec.u as f64).powf(1.0 / q as f64).round() as u64;
                assert_eq!(t.pow(q), rec.u);
                assert_eq!(t.pow(p), rec.v);
                assert!(rec.g >= t - 1, "({}, {})", rec.u, rec.v);
            }
        }
    }
}
