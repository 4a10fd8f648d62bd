//! Exact search and verification tooling for triples of positive integers
//! `a > b > c` such that both `ab+1` and `ac+1` factor entirely over a
//! fixed finite set of primes `S`.
//!
//! The crate is organized around four layers:
//!
//! * [`arith`] — exact integer/rational arithmetic at the places of **Q**:
//!   p-adic valuations, normalized absolute values, the restricted product
//!   formula, divisor enumeration, and polynomial gcds.
//! * [`sunits`] — smoothness certificates, ordered S-unit enumeration,
//!   factoring with an explicit work budget, and multiplicative relations.
//! * [`search`] — two independent complete searches for qualifying triples,
//!   greatest-prime-factor tables, and the gcd-exponent scan.
//! * [`machinery`] — the 17-dimensional linear-form witness attached to a
//!   hit, with exact verification of every identity and inequality it must
//!   satisfy, plus the power-relation descent on concrete pairs.
//!
//! The [`cli`] module exposes all of the above as subcommands with
//! reproducible CSV/JSON output.
//!
//! Everything on an assertion path is computed in exact integer or rational
//! arithmetic; floating point appears only in reported log-ratios.

pub mod arith;
pub mod cli;
pub mod error;
pub mod machinery;
pub mod search;
pub mod sunits;

pub use error::{Error, Result};
