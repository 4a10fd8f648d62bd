//! The power-relation descent on a concrete hit.
//!
//! For every hit, `a` divides `gcd(u-1, v-1)` because `u` and `v` are both
//! congruent to 1 mod `a`. If `u` and `v` are multiplicatively dependent,
//! say `u^p = v^q` with coprime `(p, q)`, they are powers `u = t^q`,
//! `v = t^p` of a common base, and `gcd(t^p - 1, t^q - 1) = t - 1` since the
//! polynomials `(x^p - 1)/(x - 1)` and `(x^q - 1)/(x - 1)` are coprime.
//! Chaining `a | gcd(u-1, v-1)` with `t = u^(1/q) <= a^(2/q)` squeezes `q`
//! down to 2, i.e. `u = v^2` — which no valid hit can satisfy, because
//! `ab + 1 = (ac + 1)^2` forces `b = c(ac + 2) > a`.

use crate::arith::power_minus_one_gcd;
use crate::error::{Error, Result};
use crate::search::TripleHit;
use crate::sunits::{find_power_relation, PowerRelation};
use num_bigint::BigUint;
use num_integer::gcd;

/// The comparison chain `a <~ t-1 <= u^(1/q) <= a^(2/q)` on exact data.
#[derive(Debug, Clone, PartialEq)]
pub struct DescentChain {
    /// Common base `t` with `u = t^q` and `v = t^p`; exact.
    pub common_base: u64,
    /// `gcd(t^p - 1, t^q - 1)`, which equals `t - 1` for coprime exponents.
    pub power_gcd: BigUint,
    /// `(t - 1) / a`: how far the gcd lower bound sits above `a`.
    pub base_ratio: f64,
    /// `a^(2/q)` for display; the exact comparison is `u <= a^2`.
    pub a_power: f64,
    /// Exact check equivalent to `u^(1/q) <= a^(2/q)`.
    pub u_at_most_a_squared: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescentReport {
    pub g: u64,
    /// Always true for a valid hit; checked, not assumed.
    pub a_divides_g: bool,
    pub relation: Option<PowerRelation>,
    pub chain: Option<DescentChain>,
    /// `u = v^2` never holds for a valid hit; checked exactly.
    pub u_is_square_of_v: bool,
}

/// Exact integer `q`-th root, if `n` is a perfect power.
fn exact_root(n: u64, q: u32) -> Option<u64> {
    if q == 1 {
        return Some(n);
    }
    let guess = (n as f64).powf(1.0 / q as f64).round() as u64;
    for t in guess.saturating_sub(2)..=guess + 2 {
        if t.checked_pow(q) == Some(n) {
            return Some(t);
        }
    }
    None
}

pub fn descent_check(hit: &TripleHit) -> Result<DescentReport> {
    let (a, u, v) = (hit.triple.a(), hit.u.value(), hit.v.value());
    let g = gcd(u - 1, v - 1);
    if g % a != 0 {
        return Err(Error::InvariantViolation(format!(
            "a = {a} must divide gcd(u-1, v-1) = {g}"
        )));
    }
    let u_is_square_of_v = u == v * v;
    if u_is_square_of_v {
        // ab = a^2 c^2 + 2ac would give b = c(ac + 2) > a, contradicting a > b.
        return Err(Error::InvariantViolation(format!(
            "hit with u = v^2: u = {u}, v = {v}"
        )));
    }

    let relation = find_power_relation(&hit.u, &hit.v);
    let chain = match relation {
        None => None,
        Some(PowerRelation { p, q }) => {
            let t = exact_root(u, q).ok_or_else(|| {
                Error::InvariantViolation(format!("u = {u} must be a perfect {q}-th power"))
            })?;
            debug_assert_eq!(t.checked_pow(p), Some(v));
            let power_gcd = power_minus_one_gcd(&BigUint::from(t), p, q)?;
            Some(DescentChain {
                common_base: t,
                power_gcd,
                base_ratio: (t - 1) as f64 / a as f64,
                a_power: (a as f64).powf(2.0 / q as f64),
                u_at_most_a_squared: (u as u128) <= (a as u128) * (a as u128),
            })
        }
    };

    Ok(DescentReport {
        g,
        a_divides_g: true,
        relation,
        chain,
        u_is_square_of_v,
    })
}
