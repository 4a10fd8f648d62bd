//! Nontriviality of the plane curve cut out by a candidate linear relation
//! among the witness coordinates.
//!
//! A relation with coefficients `eta_1, eta_2, rho_jn` corresponds to the
//! Laurent expression
//!
//! ```text
//! eta_1 (U - 1) + eta_2 (U^2 - 1) + (V - 1) * sum rho_jn U^j V^(-n)
//! ```
//!
//! over `j in {0,1,2}`, `n in {1..5}`. Clearing `V^5` turns it into an
//! honest bivariate polynomial; the expression defines a curve exactly when
//! that polynomial is not identically zero.

use num_rational::BigRational;
use num_traits::Zero;

/// Coefficients of a candidate relation. The shape is fixed to the default
/// truncation order (five `V`-powers per `U`-power).
#[derive(Debug, Clone, PartialEq)]
pub struct CurveCoeffs {
    pub eta1: BigRational,
    pub eta2: BigRational,
    /// `rho[j][n-1]` multiplies `U^j V^(-n)`.
    pub rho: [[BigRational; 5]; 3],
}

impl CurveCoeffs {
    pub fn zero() -> CurveCoeffs {
        CurveCoeffs {
            eta1: BigRational::zero(),
            eta2: BigRational::zero(),
            rho: std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero())),
        }
    }
}

/// Expand the relation into polynomial form and test it against zero.
pub fn curve_nontrivial(coeffs: &CurveCoeffs) -> bool {
    // acc[i][e] multiplies U^i V^e after clearing V^5.
    let mut acc = vec![vec![BigRational::zero(); 7]; 3];

    // eta_1 (U - 1) V^5 and eta_2 (U^2 - 1) V^5.
    acc[1][5] += &coeffs.eta1;
    acc[0][5] -= &coeffs.eta1;
    acc[2][5] += &coeffs.eta2;
    acc[0][5] -= &coeffs.eta2;

    // (V - 1) rho_jn U^j V^(5-n) = rho_jn U^j (V^(6-n) - V^(5-n)).
    for (j, row) in coeffs.rho.iter().enumerate() {
        for (n_minus_1, rho) in row.iter().enumerate() {
            let n = n_minus_1 + 1;
            acc[j][6 - n] += rho;
            acc[j][5 - n] -= rho;
        }
    }

    acc.iter().flatten().any(|c| !c.is_zero())
}
