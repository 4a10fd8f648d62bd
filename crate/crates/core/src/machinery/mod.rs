//! The linear-form witness attached to a hit, and exact verification of
//! everything it must satisfy.
//!
//! For a hit with products `u = ab+1`, `v = ac+1` and truncation order `k`
//! (default 5), the witness consists of
//!
//! * `y_1 = (u-1)/(v-1) = b/c` and `y_2 = (u^2-1)/(v-1) = (u+1)b/c`,
//! * the `3k` integers `sigma_i = u^j v^(k-n)` indexed by `i = k*j + n`
//!   for `j in {0,1,2}` and `n in {1..k}` (this fixed indexing makes every
//!   downstream table deterministic),
//! * the sign matrix `alpha` with `alpha[0]` carrying +1 on `i = 1..k` and
//!   -1 on `i = k+1..2k`, and `alpha[1]` carrying +1 on `i = 1..k` and -1
//!   on `i = 2k+1..3k`,
//! * the integer vector `x = (c v^k y_1, c v^k y_2, c sigma_1, ...,
//!   c sigma_3k)` of dimension `N = 3k + 2`.
//!
//! Truncating the geometric series for `1/(v-1)` at order `k` telescopes
//! exactly: the archimedean forms evaluate to `L_1(x) = b` and
//! `L_2(x) = (u+1) b`, which the report checks by evaluating the generic
//! dot product and comparing against these closed forms.

mod curve;
mod descent;
mod forms;
mod report;

pub use curve::{curve_nontrivial, CurveCoeffs};
pub use descent::{descent_check, DescentChain, DescentReport};
pub use forms::{evaluate_forms, FormSystem, FormTable};
pub use report::{inequality_report, Check, InequalityReport};

use crate::arith::PlaceSet;
use crate::error::{Error, Result};
use crate::search::{Triple, TripleHit};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

/// Default truncation order of the geometric-series approximation.
pub const DEFAULT_TRUNCATION: u32 = 5;

/// The witness data for one hit. All entries are exact; construction fails
/// rather than producing a vector that violates any structural invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessVector {
    hit: TripleHit,
    truncation: u32,
    y1: BigRational,
    y2: BigRational,
    sigma: Vec<BigInt>,
    alpha: Vec<Vec<i64>>,
    x: Vec<BigInt>,
}

impl WitnessVector {
    pub fn hit(&self) -> &TripleHit {
        &self.hit
    }

    pub fn triple(&self) -> &Triple {
        &self.hit.triple
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Vector dimension `N = 3k + 2`.
    pub fn dimension(&self) -> usize {
        self.x.len()
    }

    pub fn y1(&self) -> &BigRational {
        &self.y1
    }

    pub fn y2(&self) -> &BigRational {
        &self.y2
    }

    pub fn sigma(&self) -> &[BigInt] {
        &self.sigma
    }

    /// The two archimedean sign rows over the `sigma` coordinates.
    pub fn alpha(&self) -> &[Vec<i64>] {
        &self.alpha
    }

    pub fn x(&self) -> &[BigInt] {
        &self.x
    }

    /// `max |x_i|`; all entries are positive so this is just the maximum.
    pub fn height(&self) -> BigInt {
        self.x.iter().max().cloned().expect("nonempty vector")
    }
}

/// Build the witness at the default truncation order.
pub fn build_witness(triple: Triple, s: &PlaceSet) -> Result<WitnessVector> {
    build_witness_with_truncation(triple, s, DEFAULT_TRUNCATION)
}

/// Build the witness at truncation order `k >= 5`.
///
/// Orders below 5 are rejected: the unconditional bound chain
/// `c^(3k+2) u^3 v^(-2k-2) <= c^k a^(4-2k) < 1/a` needs `c^k < a^(2k-5)`,
/// which `c < a` only guarantees from `k = 5` upward.
pub fn build_witness_with_truncation(
    triple: Triple,
    s: &PlaceSet,
    truncation: u32,
) -> Result<WitnessVector> {
    if truncation < 5 {
        return Err(Error::InvalidArgument(
            "truncation order must be at least 5".into(),
        ));
    }
    let hit = TripleHit::from_triple(triple, s)?;
    let k = truncation;
    let u = BigInt::from(hit.u.value());
    let v = BigInt::from(hit.v.value());
    let b = BigInt::from(triple.b());
    let c = BigInt::from(triple.c());
    let one = BigInt::one();

    let y1 = BigRational::new(&u - &one, &v - &one);
    let y2 = BigRational::new(&u * &u - &one, &v - &one);
    if y1 != BigRational::new(b.clone(), c.clone()) {
        return Err(Error::InvariantViolation("y1 must reduce to b/c".into()));
    }
    if y2 != BigRational::new((&u + &one) * &b, c.clone()) {
        return Err(Error::InvariantViolation(
            "y2 must reduce to (u+1)b/c".into(),
        ));
    }

    let mut sigma = Vec::with_capacity(3 * k as usize);
    for j in 0..3u32 {
        for n in 1..=k {
            sigma.push(Pow::pow(&u, j) * Pow::pow(&v, k - n));
        }
    }
    let alpha = alpha_rows(k);

    let v_k = Pow::pow(&v, k);
    let scale = BigRational::from_integer(&c * &v_k);
    let mut x = Vec::with_capacity(3 * k as usize + 2);
    for (y, closed) in [(&y1, &b * &v_k), (&y2, (&u + &one) * &b * &v_k)] {
        let entry = &scale * y;
        if !entry.is_integer() {
            return Err(Error::InvariantViolation(
                "c v^k y_j must clear the denominator".into(),
            ));
        }
        let entry = entry.to_integer();
        if entry != closed {
            return Err(Error::InvariantViolation(
                "c v^k y_j must match its closed form".into(),
            ));
        }
        x.push(entry);
    }
    for s_i in &sigma {
        x.push(&c * s_i);
    }
    if x.iter().any(|e| !e.is_positive()) {
        return Err(Error::InvariantViolation(
            "x entries must be positive".into(),
        ));
    }

    Ok(WitnessVector {
        hit,
        truncation,
        y1,
        y2,
        sigma,
        alpha,
        x,
    })
}

/// The two sign rows of the archimedean forms for truncation `k`.
pub(crate) fn alpha_rows(k: u32) -> Vec<Vec<i64>> {
    let k = k as usize;
    let mut rows = vec![vec![0i64; 3 * k]; 2];
    for i in 0..k {
        rows[0][i] = 1;
        rows[1][i] = 1;
        rows[0][k + i] = -1;
        rows[1][2 * k + i] = -1;
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn witness(a: u64, b: u64, c: u64, primes: &[u64]) -> WitnessVector {
        let s = PlaceSet::new(primes.iter().copied()).unwrap();
        build_witness(Triple::new(a, b, c).unwrap(), &s).unwrap()
    }

    #[test]
    fn worked_example_3_2_1() {
        let w = witness(3, 2, 1, &[2, 7]);
        assert_eq!(w.dimension(), 17);
        assert_eq!(*w.y1(), BigRational::from_integer(BigInt::from(2)));
        assert_eq!(*w.y2(), BigRational::from_integer(BigInt::from(16)));
        // x_1 = b v^5 = 2 * 1024, x_2 = (u+1) b v^5 = 8 * 2 * 1024.
        assert_eq!(w.x()[0], BigInt::from(2048));
        assert_eq!(w.x()[1], BigInt::from(16384));
        // sigma blocks: v-powers, then u * v-powers, then u^2 * v-powers.
        let expected: Vec<i64> = vec![
            256, 64, 16, 4, 1, 1792, 448, 112, 28, 7, 12544, 3136, 784, 196, 49,
        ];
        let got: Vec<BigInt> = w.sigma().to_vec();
        assert_eq!(
            got,
            expected.into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(w.height(), BigInt::from(16384));
    }

    #[test]
    fn worked_example_5_3_1() {
        let w = witness(5, 3, 1, &[2, 3]);
        assert_eq!(*w.y1(), BigRational::from_integer(BigInt::from(3)));
        assert_eq!(*w.y2(), BigRational::from_integer(BigInt::from(51)));
        assert_eq!(w.x()[1], BigInt::from(396_576)); // 17 * 3 * 7776
    }

    #[test]
    fn non_smooth_product_is_rejected_with_witness() {
        let s = PlaceSet::new([2, 3]).unwrap();
        match build_witness(Triple::new(3, 2, 1).unwrap(), &s) {
            Err(Error::NonSmooth {
                value: 7,
                offending: 7,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn truncation_below_five_is_rejected() {
        let s = PlaceSet::new([2, 7]).unwrap();
        assert!(build_witness_with_truncation(Triple::new(3, 2, 1).unwrap(), &s, 4).is_err());
        let w = build_witness_with_truncation(Triple::new(3, 2, 1).unwrap(), &s, 6).unwrap();
        assert_eq!(w.dimension(), 20);
    }

    #[test]
    fn alpha_rows_shape() {
        let rows = alpha_rows(5);
        assert_eq!(rows[0].iter().sum::<i64>(), 0);
        assert_eq!(rows[1].iter().sum::<i64>(), 0);
        assert_eq!(&rows[0][0..5], &[1, 1, 1, 1, 1]);
        assert_eq!(&rows[0][5..10], &[-1, -1, -1, -1, -1]);
        assert!(rows[0][10..].iter().all(|&x| x.is_zero()));
        assert_eq!(&rows[1][10..15], &[-1, -1, -1, -1, -1]);
        assert!(rows[1][5..10].iter().all(|&x| x.is_zero()));
    }
}
