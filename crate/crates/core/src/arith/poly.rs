//! Univariate integer polynomials with an exact rational gcd.
//!
//! Coefficients are stored in ascending degree order and the representation
//! is canonical: the zero polynomial is the empty vector and the leading
//! coefficient is otherwise nonzero.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Construct from ascending-degree coefficients; trailing zeros are stripped.
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().collect(),
        };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    /// `(x^n - 1) / (x - 1) = 1 + x + ... + x^(n-1)`.
    pub fn cyclotomic_quotient(n: u32) -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one(); n as usize],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Gcd of the coefficients' absolute values; 0 for the zero polynomial.
    pub fn content(&self) -> BigUint {
        self.coeffs
            .iter()
            .fold(BigUint::zero(), |acc, c| acc.gcd(c.magnitude()))
    }
}

type RatPoly = Vec<BigRational>;

fn strip(p: &mut RatPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn to_rational(p: &IntPolynomial) -> RatPoly {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Remainder of `a` divided by `b` over the rationals. `b` must be nonzero.
fn remainder(mut a: RatPoly, b: &RatPoly) -> RatPoly {
    let lead = b.last().expect("division by the zero polynomial");
    while a.len() >= b.len() {
        let scale = a.last().unwrap() / lead;
        let shift = a.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            let t = &scale * bc;
            a[shift + i] -= t;
        }
        // The leading term cancels exactly; pop it and any new zeros.
        a.pop();
        strip(&mut a);
    }
    a
}

/// Monic gcd over the rationals by the Euclidean algorithm. Integer content
/// of the inputs plays no role here; it is reported separately by
/// [`IntPolynomial::content`].
fn monic_gcd(a: &IntPolynomial, b: &IntPolynomial) -> RatPoly {
    let mut x = to_rational(a);
    let mut y = to_rational(b);
    while !y.is_empty() {
        let r = remainder(x, &y);
        x = y;
        y = r;
    }
    let lead = match x.last() {
        Some(l) => l.clone(),
        None => return x, // both inputs were zero
    };
    for c in &mut x {
        *c /= &lead;
    }
    x
}

/// The monic gcd of `(x^p - 1)/(x - 1)` and `(x^q - 1)/(x - 1)`, computed by
/// the Euclidean algorithm over the rationals.
///
/// Equals the constant 1 exactly when `gcd(p, q) = 1`; in general its degree
/// is `gcd(p, q) - 1`. Both inputs are monic integer polynomials, so the
/// monic rational gcd has integer coefficients.
pub fn cyclotomic_quotient_gcd(p: u32, q: u32) -> Result<IntPolynomial> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("exponents must be positive".into()));
    }
    let a = IntPolynomial::cyclotomic_quotient(p);
    let b = IntPolynomial::cyclotomic_quotient(q);
    let g = monic_gcd(&a, &b);
    let coeffs = g
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InvariantViolation(
                    "monic gcd of monic integer polynomials must be integral".into(),
                ))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::from_coeffs(coeffs))
}
