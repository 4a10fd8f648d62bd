//! Exact arithmetic at the places of **Q**.
//!
//! A [`PlaceSet`] is a finite set of certified primes together with the
//! infinite place, which is always present. Absolute values are normalized
//! so that `|p|_p = 1/p`, which makes the product of `|x|_w` over *all*
//! places equal to 1 for every nonzero rational `x`; restricted to a
//! [`PlaceSet`] the product is exactly 1 whenever the support of `x` lies
//! inside the set.

mod poly;
mod primality;

pub use poly::{cyclotomic_quotient_gcd, IntPolynomial};
pub use primality::{classify, is_prime, Primality};

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// One absolute value of **Q**: a finite prime or the archimedean place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(u64),
    Infinity,
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// A finite set of distinct certified primes plus the infinite place.
///
/// The primes are stored strictly increasing; every constructor input is
/// run through the deterministic primality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceSet {
    primes: Vec<u64>,
}

impl PlaceSet {
    /// Build a place set from finite primes; duplicates are collapsed.
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(PlaceSet { primes })
    }

    /// The finite primes, strictly increasing.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    /// All places: the finite primes in increasing order, then infinity.
    /// The infinite place is always included.
    pub fn places(&self) -> impl Iterator<Item = Place> + '_ {
        self.primes
            .iter()
            .map(|&p| Place::Finite(p))
            .chain(std::iter::once(Place::Infinity))
    }
}

/// Largest `e` with `p^e` dividing `n`.
pub fn padic_valuation(n: &BigInt, p: u64) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Domain("valuation of zero is undefined".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(valuation_big(n.magnitude(), p))
}

fn valuation_big(n: &BigUint, p: u64) -> u64 {
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        rest = q;
        e += 1;
    }
}

/// The normalized absolute value `|x|_w` as an exact rational.
///
/// At a finite prime this is `p^(-v_p(x))`; at infinity it is `|x|`.
pub fn abs_at_place(x: &BigRational, w: Place) -> Result<BigRational> {
    if x.is_zero() {
        return Err(Error::Domain("absolute value of zero is excluded".into()));
    }
    match w {
        Place::Infinity => Ok(x.abs()),
        Place::Finite(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let v_num = valuation_big(x.numer().magnitude(), p);
            let v_den = valuation_big(x.denom().magnitude(), p);
            let p = BigInt::from(p);
            Ok(if v_num >= v_den {
                BigRational::new(BigInt::one(), Pow::pow(&p, v_num - v_den))
            } else {
                BigRational::from_integer(Pow::pow(&p, v_den - v_num))
            })
        }
    }
}

/// The exact product of `|x|_w` over every place of the set.
///
/// Equals 1 precisely when the numerator and denominator of `x` factor
/// entirely over the set's primes.
pub fn product_over_places(x: &BigRational, s: &PlaceSet) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for w in s.places() {
        acc *= abs_at_place(x, w)?;
    }
    Ok(acc)
}

/// All divisors of `n`, ascending, computed from a supplied factorization.
///
/// The factorization is validated: entries must be distinct primes with
/// positive exponents whose product reconstructs `n` exactly.
pub fn divisors(n: u64, factorization: &[(u64, u32)]) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Domain("divisors of zero are unbounded".into()));
    }
    let mut seen = Vec::with_capacity(factorization.len());
    let mut product = 1u64;
    for &(p, e) in factorization {
        if !is_prime(p) {
            return Err(Error::BadFactorization(n));
        }
        if e == 0 || seen.contains(&p) {
            return Err(Error::BadFactorization(n));
        }
        seen.push(p);
        for _ in 0..e {
            product = product.checked_mul(p).ok_or(Error::BadFactorization(n))?;
        }
    }
    if product != n {
        return Err(Error::BadFactorization(n));
    }

    let mut divs = vec![1u64];
    for &(p, e) in factorization {
        let base = divs.clone();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            divs.extend(base.iter().map(|d| d * power));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Natural log of a positive big integer, stable far beyond f64 range.
pub(crate) fn ln_big(x: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    debug_assert!(!x.is_zero());
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let mantissa = (x >> shift).to_f64().expect("53 bits");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `gcd(t^p - 1, t^q - 1)`, computed on exact integers.
///
/// For coprime `p, q` this collapses to `t - 1`; in general it equals
/// `t^gcd(p,q) - 1`, which the tests check against this direct computation.
pub fn power_minus_one_gcd(t: &BigUint, p: u32, q: u32) -> Result<BigUint> {
    if *t < BigUint::from(2u32) {
        return Err(Error::Domain("base must be at least 2".into()));
    }
    if p == 0 || q == 0 {
        return Err(Error::Domain("exponents must be positive".into()));
    }
    let one = BigUint::one();
    let a = Pow::pow(t, p) - &one;
    let b = Pow::pow(t, q) - &one;
    Ok(a.gcd(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn place_set_rejects_composites() {
        assert_eq!(PlaceSet::new([2, 9]), Err(Error::NotPrime(9)));
        let s = PlaceSet::new([7, 2, 2, 3]).unwrap();
        assert_eq!(s.primes(), &[2, 3, 7]);
        let places: Vec<Place> = s.places().collect();
        assert_eq!(
            places,
            vec![
                Place::Finite(2),
                Place::Finite(3),
                Place::Finite(7),
                Place::Infinity
            ]
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&BigInt::from(48), 2), Ok(4));
        assert_eq!(padic_valuation(&BigInt::from(7), 2), Ok(0));
        assert_eq!(padic_valuation(&BigInt::from(1), 5), Ok(0));
        assert_eq!(
            padic_valuation(&BigInt::zero(), 2),
            Err(Error::Domain("valuation of zero is undefined".into()))
        );
        assert_eq!(
            padic_valuation(&BigInt::from(10), 4),
            Err(Error::NotPrime(4))
        );
        // p^4 | 48 and p^5 does not: direct witness for the example above.
        assert_eq!(48 % 16, 0);
        assert_ne!(48 % 32, 0);
    }

    #[test]
    fn abs_examples() {
        assert_eq!(
            abs_at_place(&rat(48, 1), Place::Finite(2)).unwrap(),
            rat(1, 16)
        );
        assert_eq!(
            abs_at_place(&rat(-6, 1), Place::Infinity).unwrap(),
            rat(6, 1)
        );
        assert_eq!(
            abs_at_place(&rat(1, 4), Place::Finite(2)).unwrap(),
            rat(4, 1)
        );
        assert!(abs_at_place(&rat(0, 1), Place::Infinity).is_err());
    }

    #[test]
    fn product_formula_examples() {
        let s23 = PlaceSet::new([2, 3]).unwrap();
        let s2 = PlaceSet::new([2]).unwrap();
        assert_eq!(product_over_places(&rat(6, 1), &s23).unwrap(), rat(1, 1));
        assert_eq!(product_over_places(&rat(6, 1), &s2).unwrap(), rat(3, 1));
        // v = 4: the product of |v^5|_w over the finite places of {2} is v^-5.
        let v5 = rat(1024, 1);
        let finite: BigRational = abs_at_place(&v5, Place::Finite(2)).unwrap();
        assert_eq!(finite, rat(1, 1024));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(
            divisors(12, &[(2, 2), (3, 1)]).unwrap(),
            vec![1, 2, 3, 4, 6, 12]
        );
        assert_eq!(divisors(1, &[]).unwrap(), vec![1]);
        assert_eq!(divisors(5, &[(5, 1)]).unwrap(), vec![1, 5]);
        assert_eq!(divisors(12, &[(2, 2)]), Err(Error::BadFactorization(12)));
        assert_eq!(
            divisors(12, &[(4, 1), (3, 1)]),
            Err(Error::BadFactorization(12))
        );
        assert_eq!(
            divisors(12, &[(2, 1), (2, 1), (3, 1)]),
            Err(Error::BadFactorization(12))
        );
    }

    #[test]
    fn power_minus_one_examples() {
        assert_eq!(
            power_minus_one_gcd(&BigUint::from(2u32), 4, 6).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            power_minus_one_gcd(&BigUint::from(3u32), 2, 3).unwrap(),
            BigUint::from(2u32)
        );
        // Equal exponents: gcd(t^p - 1, t^p - 1) = t^p - 1.
        assert_eq!(
            power_minus_one_gcd(&BigUint::from(7u32), 3, 3).unwrap(),
            BigUint::from(342u32)
        );
        assert!(power_minus_one_gcd(&BigUint::one(), 2, 3).is_err());
        assert!(power_minus_one_gcd(&BigUint::from(2u32), 0, 3).is_err());
    }

    #[test]
    fn ln_big_tracks_known_logs() {
        let x = Pow::pow(&BigUint::from(10u32), 40u32);
        assert!((ln_big(&x) - 40.0 * 10f64.ln()).abs() < 1e-9);
        assert!((ln_big(&BigUint::from(7u32)) - 7f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn power_minus_one_closed_form_full_range() {
        // Independent route: t^gcd(p,q) - 1 from the integer gcd of exponents.
        for t in 2u64..=50 {
            let t_big = BigUint::from(t);
            for p in 1u32..=12 {
                for q in 1u32..=12 {
                    let direct = power_minus_one_gcd(&t_big, p, q).unwrap();
                    let closed = Pow::pow(&t_big, p.gcd(&q)) - BigUint::one();
                    assert_eq!(direct, closed, "t={t} p={p} q={q}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn abs_is_multiplicative(
            an in -2000i64..2000, ad in 1i64..2000,
            bn in -2000i64..2000, bd in 1i64..2000,
            pick in 0usize..4,
        ) {
            prop_assume!(an != 0 && bn != 0);
            let x = rat(an, ad);
            let y = rat(bn, bd);
            let w = [Place::Finite(2), Place::Finite(3), Place::Finite(5), Place::Infinity][pick];
            let lhs = abs_at_place(&(&x * &y), w).unwrap();
            let rhs = abs_at_place(&x, w).unwrap() * abs_at_place(&y, w).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_formula_on_smooth_support(
            e2 in -6i32..=6, e3 in -6i32..=6, e5 in -6i32..=6, sign in prop::bool::ANY,
        ) {
            let s = PlaceSet::new([2, 3, 5]).unwrap();
            let mut x = BigRational::one();
            for (p, e) in [(2i64, e2), (3, e3), (5, e5)] {
                let pw = Pow::pow(&BigInt::from(p), e.unsigned_abs() as u64);
                if e >= 0 {
                    x *= BigRational::from_integer(pw);
                } else {
                    x *= BigRational::new(BigInt::one(), pw);
                }
            }
            if sign {
                x = -x;
            }
            prop_assert_eq!(product_over_places(&x, &s).unwrap(), BigRational::one());
        }

        #[test]
        fn divisors_match_naive_scan(n in 1u64..5000) {
            let mut fac = Vec::new();
            let mut rest = n;
            let mut d = 2;
            while d * d <= rest {
                if rest % d == 0 {
                    let mut e = 0;
                    while rest % d == 0 {
                        rest /= d;
                        e += 1;
                    }
                    fac.push((d, e));
                }
                d += 1;
            }
            if rest > 1 {
                fac.push((rest, 1));
            }
            let expected: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            prop_assert_eq!(divisors(n, &fac).unwrap(), expected);
        }
    }
}
