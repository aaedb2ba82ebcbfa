//! Prime-field scalars, sparse multivariate polynomials in degrevlex, the
//! polynomial text parser, and the seeded random source.

mod field;
mod monomial;
mod parse;
mod poly;
mod random;

use thiserror::Error;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME, MAX_PRIME, MIN_PRIME};
pub use monomial::{Monomial, MAX_USER_VARS, MAX_VARS};
pub use parse::{parse_integer_poly, parse_poly, IntegerPoly};
pub use poly::{MPoly, Ring, Term};
pub use random::{random_linear_form, stream_label, RandomSource, Seed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldPolyError {
    #[error("modulus {0} outside the supported range [2^20, 2^32)")]
    ModulusOutOfRange(u64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("unsupported number of variables: {0} (1..=16 allowed)")]
    TooManyVariables(usize),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("exponent overflow{}", .pos.map(|p| format!(" at position {p}")).unwrap_or_default())]
    ExponentOverflow { pos: Option<usize> },
}
