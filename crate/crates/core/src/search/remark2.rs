//! The exact product identity behind the three-factor variant.
//!
//! With `r = ab+1`, `s = ac+1`, `t = bc+1`, every triple satisfies
//! `(abc)^2 = rst - rs - rt - st + r + s + t - 1` on the nose. The report
//! recomputes both sides and also measures how dominant the `rst` term is,
//! as the ratio `log(rs) / log(rst)`.

use crate::arith::ln_big;
use crate::error::{Error, Result};
use crate::search::Triple;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct Remark2Report {
    pub r: BigUint,
    pub s: BigUint,
    pub t: BigUint,
    /// `(abc)^2 - (rst - rs - rt - st + r + s + t - 1)`; always 0.
    pub identity_residual: BigInt,
    /// `log(rs) / log(rst)`; dominance of `rst` means this stays below
    /// `1 - delta` for a fixed positive `delta`.
    pub dominance_ratio: f64,
}

pub fn remark2_report(triple: &Triple) -> Result<Remark2Report> {
    let (a, b, c) = (
        BigUint::from(triple.a()),
        BigUint::from(triple.b()),
        BigUint::from(triple.c()),
    );
    let one = BigUint::one();
    let r = &a * &b + &one;
    let s = &a * &c + &one;
    let t = &b * &c + &one;

    let abc = &a * &b * &c;
    let square = BigInt::from(&abc * &abc);
    let expansion = BigInt::from(&r * &s * &t)
        - BigInt::from(&r * &s)
        - BigInt::from(&r * &t)
        - BigInt::from(&s * &t)
        + BigInt::from(&r + &s + &t)
        - BigInt::one();
    let identity_residual = square - expansion;
    if !identity_residual.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "product identity residual {identity_residual} for triple ({}, {}, {})",
            triple.a(),
            triple.b(),
            triple.c()
        )));
    }

    let rs = &r * &s;
    let rst = &rs * &t;
    let dominance_ratio = ln_big(&rs) / ln_big(&rst);
    Ok(Remark2Report {
        r,
        s,
        t,
        identity_residual,
        dominance_ratio,
    })
}
