//! Polar degrees, polynomial Chern–Schwartz–MacPherson classes and
//! sectional Euler characteristics of subschemes of projective space.
//!
//! The stack, bottom up:
//!
//! * [`field_poly`]: prime-field arithmetic and sparse polynomials;
//! * [`groebner`]: Buchberger bases, elimination, saturation, degrees;
//! * [`polar`]: projective degrees of rational maps and polar degrees of
//!   hypersurfaces and arbitrary subschemes;
//! * [`classcalc`]: the γ / χ / g polynomial calculus and the involution;
//! * [`gring`]: γ-level arithmetic in the Grothendieck ring of varieties
//!   over projective space (Segre product, affine product, joins, cones);
//! * [`arrangements`]: characteristic polynomials of hyperplane
//!   arrangements, by Möbius inversion and by the polar pipeline.

pub mod arrangements;
pub mod classcalc;
pub mod field_poly;
pub mod groebner;
pub mod gring;
pub mod input;
pub mod polar;
pub mod unipoly;

pub use arrangements::{Arrangement, IntersectionLattice};
pub use classcalc::{ChiPoly, ClassPoly, GPoly};
pub use field_poly::{parse_poly, MPoly, PrimeField, Ring, Seed};
pub use polar::{DegreeVector, TrialConfig};
pub use unipoly::IntPoly;
