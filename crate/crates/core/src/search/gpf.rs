//! Tables of `G(a)`: the smallest greatest-prime-factor achievable over all
//! choices of `b, c` with `a > b > c > 0`.

use super::shard_map;
use crate::error::{Error, Result};
use crate::sunits::{greatest_prime_factor, FactorConfig};
use std::collections::HashMap;

/// Which product the table minimizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpfMode {
    /// `(ab+1)(ac+1)`
    Pair,
    /// `(ab+1)(ac+1)(bc+1)`
    Gss,
}

impl std::fmt::Display for GpfMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GpfMode::Pair => write!(f, "pair"),
            GpfMode::Gss => write!(f, "gss"),
        }
    }
}

/// One table row: the `(b, c)` choice minimizing the greatest prime factor
/// of the mode's product for a fixed `a`. Ties resolve to the smallest
/// `(b, c)` lexicographically. `unresolved_pairs` counts choices skipped
/// because a factorization ran out of budget; the minimum is then taken
/// over the resolved pairs only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpfRecord {
    pub a: u64,
    pub mode: GpfMode,
    pub best_b: u64,
    pub best_c: u64,
    pub product: u64,
    pub gpf: u64,
    pub unresolved_pairs: u64,
}

/// `G(a)` for every `a` in `[a_min, a_max]`.
pub fn gpf_table(
    a_min: u64,
    a_max: u64,
    mode: GpfMode,
    cfg: &FactorConfig,
    workers: usize,
) -> Result<Vec<GpfRecord>> {
    if a_min < 3 || a_min > a_max {
        return Err(Error::Domain("need 3 <= a_min <= a_max".into()));
    }
    // Keep the mode's product inside u64.
    let limit = match mode {
        GpfMode::Pair => 65_535,
        GpfMode::Gss => 1_561,
    };
    if a_max > limit {
        return Err(Error::Domain(format!(
            "a_max {a_max} overflows the {mode} product; limit is {limit}"
        )));
    }

    // In gss mode the bc+1 factor does not depend on a; factor each distinct
    // product once up front.
    let bc_gpf: HashMap<u64, Option<u64>> = match mode {
        GpfMode::Pair => HashMap::new(),
        GpfMode::Gss => {
            let bs: Vec<u64> = (2..a_max).collect();
            let chunks = shard_map(&bs, workers, |_, &b| {
                (1..b)
                    .map(|c| {
                        let n = b * c + 1;
                        (n, greatest_prime_factor(n, cfg).ok())
                    })
                    .collect::<Vec<_>>()
            });
            chunks.into_iter().flatten().collect()
        }
    };

    let a_values: Vec<u64> = (a_min..=a_max).collect();
    let rows = shard_map(&a_values, workers, |_, &a| {
        // gpf(a*k + 1) for k = 1..a, shared by the b and c roles.
        let k_gpf: Vec<Option<u64>> = (1..a)
            .map(|k| greatest_prime_factor(a * k + 1, cfg).ok())
            .collect();
        let mut best: Option<(u64, u64, u64)> = None; // (gpf, b, c)
        let mut unresolved_pairs = 0u64;
        for b in 2..a {
            for c in 1..b {
                let u_gpf = k_gpf[(b - 1) as usize];
                let v_gpf = k_gpf[(c - 1) as usize];
                let t_gpf = match mode {
                    GpfMode::Pair => Some(1),
                    GpfMode::Gss => bc_gpf.get(&(b * c + 1)).copied().flatten(),
                };
                match (u_gpf, v_gpf, t_gpf) {
                    (Some(x), Some(y), Some(z)) => {
                        let m = x.max(y).max(z);
                        if best.map_or(true, |(cur, _, _)| m < cur) {
                            best = Some((m, b, c));
                        }
                    }
                    _ => unresolved_pairs += 1,
                }
            }
        }
        (a, best, unresolved_pairs)
    });

    let mut records = Vec::with_capacity(rows.len());
    for (a, best, unresolved_pairs) in rows {
        let (gpf, best_b, best_c) = best.ok_or_else(|| {
            // Every pair was unresolved; there is no honest minimum to report.
            Error::Unresolved {
                composite: a * (a - 1) + 1,
            }
        })?;
        let mut product = (a * best_b + 1) * (a * best_c + 1);
        if mode == GpfMode::Gss {
            product *= best_b * best_c + 1;
        }
        records.push(GpfRecord {
            a,
            mode,
            best_b,
            best_c,
            product,
            gpf,
            unresolved_pairs,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_small_cases() {
        let cfg = FactorConfig::default();
        let rows = gpf_table(3, 4, GpfMode::Pair, &cfg, 1).unwrap();
        assert_eq!(rows.len(), 2);
        // a=3: only (b,c) = (2,1); product 7*4 = 28, gpf 7.
        assert_eq!((rows[0].a, rows[0].best_b, rows[0].best_c), (3, 2, 1));
        assert_eq!((rows[0].product, rows[0].gpf), (28, 7));
        // a=4: candidates 45 -> 5, 65 -> 13, 117 -> 13; minimum 5 at (2,1).
        assert_eq!((rows[1].a, rows[1].best_b, rows[1].best_c), (4, 2, 1));
        assert_eq!((rows[1].product, rows[1].gpf), (45, 5));

        let rows = gpf_table(3, 3, GpfMode::Gss, &cfg, 1).unwrap();
        assert_eq!((rows[0].product, rows[0].gpf), (84, 7)); // 7*4*3
    }

    #[test]
    fn rejects_bad_ranges() {
        let cfg = FactorConfig::default();
        assert!(gpf_table(2, 5, GpfMode::Pair, &cfg, 1).is_err());
        assert!(gpf_table(5, 4, GpfMode::Pair, &cfg, 1).is_err());
        assert!(gpf_table(3, 1_000_000, GpfMode::Gss, &cfg, 1).is_err());
    }

    #[test]
    fn worker_count_does_not_change_rows() {
        let cfg = FactorConfig::default();
        let one = gpf_table(3, 40, GpfMode::Gss, &cfg, 1).unwrap();
        let eight = gpf_table(3, 40, GpfMode::Gss, &cfg, 8).unwrap();
        assert_eq!(one, eight);
    }
}
