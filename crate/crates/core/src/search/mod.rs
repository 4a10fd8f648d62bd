//! Complete searches for triples `a > b > c > 0` with both `ab+1` and
//! `ac+1` smooth over a place set, plus the experiment tables built on top
//! of them.
//!
//! Two independent strategies find the same hits:
//!
//! * [`brute_force_triples`] loops over `(a, b, c)` directly and tests
//!   smoothness of both products — simple and obviously complete, the
//!   oracle for everything else.
//! * [`pair_search`] enumerates S-unit pairs `u > v` and recovers triples
//!   through divisors of `gcd(u-1, v-1)`. Since `u = ab+1` and `v = ac+1`
//!   force `a` to divide both `u-1` and `v-1`, every admissible `a` divides
//!   the gcd; `a > b` is equivalent to `a^2 > u-1` and `c >= 1` to
//!   `a <= v-1`, so the divisor filter is exact and the search is complete
//!   for `u` up to the bound.

mod gpf;
mod remark2;
mod scan;

pub use gpf::{gpf_table, GpfMode, GpfRecord};
pub use remark2::{remark2_report, Remark2Report};
pub use scan::{gcd_scan, GcdScanRecord};

use crate::arith::{divisors, PlaceSet};
use crate::error::{Error, Result};
use crate::sunits::{enumerate_sunits, factorize_with_hint, is_smooth, FactorConfig, SUnit};
use num_integer::gcd;

/// Positive integers `a > b > c >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Triple> {
        if c >= 1 && b > c && a > b {
            Ok(Triple { a, b, c })
        } else {
            Err(Error::Domain(format!(
                "triple ({a}, {b}, {c}) must satisfy a > b > c >= 1"
            )))
        }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }
}

/// A qualifying triple with its certified smooth products `u = ab+1` and
/// `v = ac+1`. Always `u > v`, and both are congruent to 1 mod `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleHit {
    pub triple: Triple,
    pub u: SUnit,
    pub v: SUnit,
}

impl TripleHit {
    /// Certify a triple against a place set, or report the offending factor.
    pub fn from_triple(triple: Triple, s: &PlaceSet) -> Result<TripleHit> {
        let u = triple
            .a
            .checked_mul(triple.b)
            .and_then(|p| p.checked_add(1))
            .ok_or_else(|| Error::Domain("ab + 1 overflows u64".into()))?;
        let v = triple.a * triple.c + 1; // c < b, so this cannot overflow if ab+1 did not
        Ok(TripleHit {
            triple,
            u: SUnit::new(u, s)?,
            v: SUnit::new(v, s)?,
        })
    }

    /// Sort key used for serialized output.
    pub fn order_key(&self) -> (u64, u64, u64) {
        (self.triple.a, self.u.value(), self.v.value())
    }
}

/// An S-unit pair whose gcd could not be fully factored under the budget;
/// hits derived from the resolved part are still emitted, but completeness
/// for this pair is not certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncheckedPair {
    pub u: u64,
    pub v: u64,
    pub g: u64,
    pub unresolved: Vec<u64>,
}

/// Result of [`pair_search`]: hits in `(u, v, a)` order plus any pairs whose
/// divisor enumeration was incomplete. Nothing is silently dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub hits: Vec<TripleHit>,
    pub unchecked: Vec<UncheckedPair>,
}

/// Interleaved index sharding with a deterministic merge: the output is
/// `f(i, items[i])` in index order regardless of worker count.
pub(crate) fn shard_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut part = Vec::new();
                    let mut i = w;
                    while i < items.len() {
                        part.push((i, f(i, &items[i])));
                        i += workers;
                    }
                    part
                })
            })
            .collect();
        for handle in handles {
            for (i, r) in handle.join().expect("search worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots
        .into_iter()
        .map(|r| r.expect("all indices covered"))
        .collect()
}

/// Direct triple loop: every hit with `a <= a_max`, in `(a, b, c)` order.
pub fn brute_force_triples(s: &PlaceSet, a_max: u64, workers: usize) -> Result<Vec<TripleHit>> {
    if a_max < 3 {
        return Err(Error::Domain("a_max must be at least 3".into()));
    }
    a_max
        .checked_mul(a_max - 1)
        .and_then(|p| p.checked_add(1))
        .ok_or_else(|| Error::Domain("a_max(a_max - 1) + 1 overflows u64".into()))?;

    let a_values: Vec<u64> = (3..=a_max).collect();
    let per_a = shard_map(&a_values, workers, |_, &a| {
        let mut hits = Vec::new();
        for b in 2..a {
            let u = a * b + 1;
            let Some(u_exp) = is_smooth(u, s).expect("u >= 7") else {
                continue;
            };
            for c in 1..b {
                let v = a * c + 1;
                if let Some(v_exp) = is_smooth(v, s).expect("v >= 4") {
                    hits.push(TripleHit {
                        triple: Triple { a, b, c },
                        u: SUnit::from_parts(u, u_exp.clone()),
                        v: SUnit::from_parts(v, v_exp),
                    });
                }
            }
        }
        hits
    });
    Ok(per_a.into_iter().flatten().collect())
}

/// S-unit pair search, complete for all hits with `u <= u_bound`.
///
/// For each pair `u > v` of enumerated S-units with `u >= 7`, `v >= 4`,
/// every divisor `a` of `gcd(u-1, v-1)` with `a^2 > u-1` and `a <= v-1`
/// yields the hit `(a, (u-1)/a, (v-1)/a)`. The gcd is factored with the
/// set's primes peeled first; pairs whose gcd resists the factoring budget
/// are quarantined in [`SearchOutcome::unchecked`].
pub fn pair_search(
    s: &PlaceSet,
    u_bound: u64,
    cfg: &FactorConfig,
    workers: usize,
) -> Result<SearchOutcome> {
    if u_bound < 7 {
        return Err(Error::Domain("u_bound must be at least 7".into()));
    }
    let units: Vec<SUnit> = enumerate_sunits(s, u_bound).collect();

    type Shard = Result<(Vec<TripleHit>, Vec<UncheckedPair>)>;
    let shards: Vec<Shard> = shard_map(&units, workers, |ui, u| {
        let mut hits = Vec::new();
        let mut unchecked = Vec::new();
        let u_val = u.value();
        if u_val < 7 {
            return Ok((hits, unchecked));
        }
        for v in &units[..ui] {
            let v_val = v.value();
            if v_val < 4 {
                continue;
            }
            let g = gcd(u_val - 1, v_val - 1);
            // Any admissible a divides g, so g^2 > u-1 is necessary.
            if (g as u128) * (g as u128) <= (u_val - 1) as u128 {
                continue;
            }
            let fac = factorize_with_hint(g, s.primes(), cfg)?;
            if !fac.is_complete() {
                unchecked.push(UncheckedPair {
                    u: u_val,
                    v: v_val,
                    g,
                    unresolved: fac.unresolved.clone(),
                });
            }
            let resolved: u64 = fac.factors.iter().map(|&(p, e)| p.pow(e)).product();
            for a in divisors(resolved, &fac.factors)? {
                if (a as u128) * (a as u128) > (u_val - 1) as u128 && a <= v_val - 1 {
                    debug_assert_eq!((u_val - 1) % a, 0);
                    debug_assert_eq!((v_val - 1) % a, 0);
                    let triple = Triple::new(a, (u_val - 1) / a, (v_val - 1) / a).map_err(|e| {
                        Error::InvariantViolation(format!(
                            "pair (u={u_val}, v={v_val}, a={a}) produced a bad triple: {e}"
                        ))
                    })?;
                    hits.push(TripleHit {
                        triple,
                        u: u.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
        Ok((hits, unchecked))
    });

    let mut hits = Vec::new();
    let mut unchecked = Vec::new();
    for shard in shards {
        let (h, uc) = shard?;
        hits.extend(h);
        unchecked.extend(uc);
    }
    Ok(SearchOutcome { hits, unchecked })
}

/// How the hit set grows between two search bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierStability {
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub lower_hits: usize,
    pub upper_hits: usize,
    /// Hits found at the upper bound whose `u` exceeds the lower bound.
    pub new_hits: usize,
    /// Whether the lower run's hits all reappear at the upper bound.
    pub lower_is_subset: bool,
    pub lower_unchecked: usize,
    pub upper_unchecked: usize,
}

/// Run the pair search at two bounds and compare the hit sets. The lower
/// run's hits must reappear verbatim in the upper run; the count of new
/// hits between the bounds measures frontier stability.
pub fn frontier_stability(
    s: &PlaceSet,
    lower_bound: u64,
    upper_bound: u64,
    cfg: &FactorConfig,
    workers: usize,
) -> Result<FrontierStability> {
    if lower_bound > upper_bound {
        return Err(Error::InvalidArgument(
            "lower bound must not exceed upper bound".into(),
        ));
    }
    let lower = pair_search(s, lower_bound, cfg, workers)?;
    let upper = pair_search(s, upper_bound, cfg, workers)?;
    let upper_set: std::collections::BTreeSet<Triple> =
        upper.hits.iter().map(|h| h.triple).collect();
    let lower_is_subset = lower.hits.iter().all(|h| upper_set.contains(&h.triple));
    let new_hits = upper
        .hits
        .iter()
        .filter(|h| h.u.value() > lower_bound)
        .count();
    Ok(FrontierStability {
        lower_bound,
        upper_bound,
        lower_hits: lower.hits.len(),
        upper_hits: upper.hits.len(),
        new_hits,
        lower_is_subset,
        lower_unchecked: lower.unchecked.len(),
        upper_unchecked: upper.unchecked.len(),
    })
}
