//! Factoring for 64-bit integers: trial division up to a configurable bound,
//! then Pollard's rho with Brent cycle detection on whatever remains.
//!
//! Every call runs under an explicit iteration budget. A composite the
//! budget cannot crack is returned in `unresolved` — the result is then
//! incomplete but never wrong.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use num_integer::gcd;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division runs over candidates up to this bound (and never past
    /// the square root of the remaining cofactor).
    pub trial_bound: u64,
    /// Total rho iterations allowed per `factorize` call.
    pub rho_budget: u64,
    /// First polynomial offset tried by rho; successive attempts increment it.
    pub rho_seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: 1_000_000,
            rho_budget: 4_000_000,
            rho_seed: 1,
        }
    }
}

/// Outcome of a budgeted factorization.
///
/// `factors` are certified primes with exponents, ascending; `unresolved`
/// holds composites the budget could not split. The product of everything
/// reconstructs the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
    pub unresolved: Vec<u64>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn abs_diff_mod(a: u64, b: u64, n: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

/// Brent-cycle rho: one nontrivial factor of an odd composite `n`, or `None`
/// once the budget runs out. Deterministic for fixed `seed`.
fn brent_rho(n: u64, seed: u64, budget: &mut u64) -> Option<u64> {
    const BATCH: u64 = 128;
    for offset in 0.. {
        let c = 1 + (seed + offset) % (n - 1);
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = (mul_mod(y, y, n) + c) % n;
            }
            let mut k = 0;
            while k < r && g == 1 {
                if *budget < BATCH {
                    return None;
                }
                *budget -= BATCH;
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, abs_diff_mod(x, y, n), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // Batch overshot the cycle; redo step-by-step from the last batch.
            g = 1;
            y = ys;
            while g == 1 {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                y = (mul_mod(y, y, n) + c) % n;
                g = gcd(abs_diff_mod(x, y, n), n);
            }
        }
        if g != n {
            return Some(g);
        }
        // Degenerate cycle for this offset; try the next one.
    }
    unreachable!()
}

/// Factor `n >= 1` under the configured budget.
pub fn factorize(n: u64, cfg: &FactorConfig) -> Result<Factorization> {
    factorize_with_hint(n, &[], cfg)
}

/// Like [`factorize`], but divides out the hint primes first. Useful when
/// the input is expected to share support with a known prime set.
pub fn factorize_with_hint(
    n: u64,
    hint_primes: &[u64],
    cfg: &FactorConfig,
) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Domain("factorization of zero is undefined".into()));
    }
    let mut counts: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, e: u32, counts: &mut Vec<(u64, u32)>| {
        if e > 0 {
            counts.push((p, e));
        }
    };
    let mut rest = n;
    for &p in hint_primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        push(p, e, &mut counts);
    }

    let mut e = 0;
    while rest % 2 == 0 {
        rest /= 2;
        e += 1;
    }
    push(2, e, &mut counts);
    let mut d = 3u64;
    while d <= cfg.trial_bound && d as u128 * d as u128 <= rest as u128 {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        push(d, e, &mut counts);
        d += 2;
    }

    let mut unresolved = Vec::new();
    if rest > 1 {
        if d as u128 * d as u128 > rest as u128 {
            // Trial division passed the square root: the cofactor is prime.
            push(rest, 1, &mut counts);
        } else {
            let mut budget = cfg.rho_budget;
            let mut stack = vec![rest];
            while let Some(m) = stack.pop() {
                if is_prime(m) {
                    push(m, 1, &mut counts);
                    continue;
                }
                match brent_rho(m, cfg.rho_seed, &mut budget) {
                    Some(f) => {
                        stack.push(f);
                        stack.push(m / f);
                    }
                    None => unresolved.push(m),
                }
            }
        }
    }

    counts.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::with_capacity(counts.len());
    for (p, e) in counts {
        match factors.last_mut() {
            Some((q, acc)) if *q == p => *acc += e,
            _ => factors.push((p, e)),
        }
    }
    unresolved.sort_unstable();
    Ok(Factorization {
        factors,
        unresolved,
    })
}

/// The largest prime dividing `n >= 2`.
///
/// Errors with [`Error::Unresolved`] if the budget leaves a composite
/// cofactor standing, since the true answer could hide inside it.
pub fn greatest_prime_factor(n: u64, cfg: &FactorConfig) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("greatest prime factor needs n >= 2".into()));
    }
    let f = factorize(n, cfg)?;
    if let Some(&composite) = f.unresolved.first() {
        return Err(Error::Unresolved { composite });
    }
    Ok(f.factors
        .last()
        .map(|&(p, _)| p)
        .expect("n >= 2 has a prime factor"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn gpf_examples() {
        let cfg = FactorConfig::default();
        assert_eq!(greatest_prime_factor(231, &cfg), Ok(11));
        assert_eq!(greatest_prime_factor(1024, &cfg), Ok(2));
        assert_eq!(greatest_prime_factor(28, &cfg), Ok(7));
        assert!(greatest_prime_factor(1, &cfg).is_err());
        assert!(greatest_prime_factor(0, &cfg).is_err());
    }

    #[test]
    fn factorization_reconstructs() {
        let cfg = FactorConfig::default();
        for n in 1u64..=2_000 {
            let f = factorize(n, &cfg).unwrap();
            assert!(f.is_complete());
            assert_eq!(f.factors, naive_factor(n), "n = {n}");
        }
    }

    #[test]
    fn rho_cracks_semiprimes_beyond_trial_bound() {
        let cfg = FactorConfig {
            trial_bound: 100,
            ..FactorConfig::default()
        };
        // 1_000_003 and 1_000_033 are prime.
        let n = 1_000_003u64 * 1_000_033;
        let f = factorize(n, &cfg).unwrap();
        assert_eq!(f.factors, vec![(1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(greatest_prime_factor(n, &cfg), Ok(1_000_033));
    }

    #[test]
    fn exhausted_budget_reports_unresolved() {
        let cfg = FactorConfig {
            trial_bound: 10,
            rho_budget: 0,
            rho_seed: 1,
        };
        let n = 1_000_003u64 * 1_000_033;
        let f = factorize(n, &cfg).unwrap();
        assert_eq!(f.factors, vec![]);
        assert_eq!(f.unresolved, vec![n]);
        assert_eq!(
            greatest_prime_factor(n, &cfg),
            Err(Error::Unresolved { composite: n })
        );
    }

    #[test]
    fn hint_primes_are_peeled_first() {
        let cfg = FactorConfig::default();
        let f = factorize_with_hint(720, &[2, 3, 5], &cfg).unwrap();
        assert_eq!(f.factors, vec![(2, 4), (3, 2), (5, 1)]);
    }

    #[test]
    fn gpf_divides_and_dominates_up_to_a_million() {
        let cfg = FactorConfig::default();
        // Smallest-prime-factor sieve as the independent oracle.
        const LIMIT: usize = 1_000_000;
        let mut spf = vec![0u32; LIMIT + 1];
        for i in 2..=LIMIT {
            if spf[i] == 0 {
                for j in (i..=LIMIT).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
        for n in 2..=LIMIT as u64 {
            let got = greatest_prime_factor(n, &cfg).unwrap();
            let mut m = n;
            let mut expected = 0u64;
            while m > 1 {
                expected = spf[m as usize] as u64;
                m /= expected;
            }
            assert_eq!(got, expected, "n = {n}");
            debug_assert_eq!(n % got, 0);
        }
        assert!(is_prime(greatest_prime_factor(999_999, &cfg).unwrap()));
    }
}
