//! The per-place systems of `N = 3k + 2` linear forms and their exact
//! evaluation on a witness vector.
//!
//! At every place the last `3k` forms are the coordinate projections
//! `X_1 .. X_3k`. The first two forms are `Y_1, Y_2` at finite places and
//! pick up the `alpha` sign rows at infinity. Each system is checked to be
//! nonsingular by an exact integer determinant.

use super::{alpha_rows, WitnessVector};
use crate::arith::{abs_at_place, Place, PlaceSet};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSystem {
    truncation: u32,
    alpha: Vec<Vec<i64>>,
}

impl FormSystem {
    pub fn for_truncation(truncation: u32) -> Result<FormSystem> {
        if truncation == 0 {
            return Err(Error::InvalidArgument("truncation must be positive".into()));
        }
        Ok(FormSystem {
            truncation,
            alpha: alpha_rows(truncation),
        })
    }

    pub fn dimension(&self) -> usize {
        3 * self.truncation as usize + 2
    }

    /// Coefficient matrix of the `N` forms at a place, rows = forms.
    pub fn coefficient_matrix(&self, place: Place) -> Vec<Vec<i64>> {
        let n = self.dimension();
        let mut m: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut row = vec![0i64; n];
                row[j] = 1;
                row
            })
            .collect();
        if place == Place::Infinity {
            for (j, signs) in self.alpha.iter().enumerate() {
                for (i, &s) in signs.iter().enumerate() {
                    m[j][2 + i] = s;
                }
            }
        }
        m
    }

    /// Raw form values `L_j(x)` at a place, before taking absolute values.
    pub fn evaluate(&self, place: Place, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.dimension(), "vector dimension mismatch");
        let mut out = Vec::with_capacity(x.len());
        for j in 0..2 {
            let mut value = x[j].clone();
            if place == Place::Infinity {
                for (i, &s) in self.alpha[j].iter().enumerate() {
                    match s {
                        1 => value += &x[2 + i],
                        -1 => value -= &x[2 + i],
                        _ => {}
                    }
                }
            }
            out.push(value);
        }
        out.extend(x[2..].iter().cloned());
        out
    }

    pub fn nonsingular_at(&self, place: Place) -> bool {
        let m: Vec<Vec<BigInt>> = self
            .coefficient_matrix(place)
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect();
        !determinant(m).is_zero()
    }

    /// Exact nonsingularity at every place of the set.
    pub fn nonsingular_everywhere(&self, s: &PlaceSet) -> bool {
        s.places().all(|w| self.nonsingular_at(w))
    }
}

/// Fraction-free Bareiss determinant.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Exact table of `|L_j(x)|_w` for every form and every place of the set.
#[derive(Debug, Clone, PartialEq)]
pub struct FormTable {
    places: Vec<Place>,
    /// `values[p][j]` = `|L_j(x)|_w` at `places[p]`.
    values: Vec<Vec<BigRational>>,
}

impl FormTable {
    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn value(&self, place_index: usize, form_index: usize) -> &BigRational {
        &self.values[place_index][form_index]
    }

    pub fn dimension(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// Product of one form's values over all places of the set.
    pub fn place_product(&self, form_index: usize) -> BigRational {
        self.values.iter().map(|row| &row[form_index]).product()
    }

    /// The full double product over forms and places.
    pub fn full_product(&self) -> BigRational {
        (0..self.dimension())
            .map(|j| self.place_product(j))
            .product()
    }
}

/// Evaluate all forms on the witness and take exact absolute values.
pub fn evaluate_forms(w: &WitnessVector, s: &PlaceSet) -> Result<FormTable> {
    let system = FormSystem::for_truncation(w.truncation())?;
    let places: Vec<Place> = s.places().collect();
    let mut values = Vec::with_capacity(places.len());
    for &place in &places {
        let raw = system.evaluate(place, w.x());
        let mut row = Vec::with_capacity(raw.len());
        for value in &raw {
            row.push(abs_at_place(
                &BigRational::from_integer(value.clone()),
                place,
            )?);
        }
        values.push(row);
    }
    Ok(FormTable { places, values })
}
