//! Gröbner bases and the ideal operations built on them: membership,
//! elimination, quotients and saturation, dimension, and the degree of
//! zero-dimensional schemes.

mod buchberger;
mod ideal;
mod order;

use thiserror::Error;

pub use buchberger::{buchberger, GBasis};
pub use ideal::{
    count_standard_monomials, degree_zero_dim_projective, dimension_from_basis, eliminate, intersect,
    krull_dimension, saturate_by_ideal, saturate_by_poly, Ideal,
};
pub use order::{EliminationOrder, MonomialOrder};

/// Default number of S-pair reductions allowed per basis computation.
pub const DEFAULT_MAX_REDUCTIONS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub max_reductions: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_reductions: DEFAULT_MAX_REDUCTIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    /// The computation was abandoned, not refuted.
    #[error("resource cap exceeded ({limit} S-pair reductions)")]
    ResourceCap { limit: usize },
    #[error("scheme is not zero-dimensional (affine dimension {dim} after slicing)")]
    DimensionPrecondition { dim: i64 },
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("eliminated variables must form a proper subset of the ring's variables")]
    NotProperSubset,
    #[error("generators belong to different rings")]
    RingMismatch,
    #[error("ideal must be homogeneous")]
    NotHomogeneous,
}
