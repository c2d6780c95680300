//! Skew cyclic codes over the ring `R = F_q + vF_q + v²F_q` with `v³ = v`.
//!
//! The crate is `no_std` and only needs `alloc`. It contains exact arithmetic
//! for `F_{p^m}` and for `R`, skew polynomial rings `K[x, θ_i]`, the
//! decomposition of codes over `R` into three component codes over `F_q`,
//! duals, idempotent generators, and a set of brute-force oracles that check
//! the structural claims about these codes on small parameters.
//!
//! Everything is organised around context objects that own the arithmetic
//! (a [`FieldSpec`] or a [`RingR`]) and plain `Copy` element values, so that
//! elements stay small and the context decides what they mean.

#![no_std]

extern crate alloc;

mod error;

pub mod codes;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod skew;
pub mod text;

pub use codes::{ComponentCode, DistanceReport, GeneratorMatrix, SkewCyclicCode};
pub use error::{Error, Result};
pub use field::{AutExponent, FieldElem, FieldSpec};
pub use ring::{CrtTriple, Idempotents, RingElem, RingR};
pub use skew::{CoeffRing, DivisionResult, Factorization, SkewPoly, SkewRing};

/// Default cap on the number of items any exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 16;

/// Default cap on the brute-force search space for monic right divisors.
pub const DEFAULT_DIVISOR_SEARCH_BOUND: u64 = 10_000_000;

/// Default cap on the size of a code enumerated word by word.
pub const DEFAULT_CODE_ENUMERATION_BOUND: u64 = 1_000_000;
