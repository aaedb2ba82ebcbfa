//! The γ / χ / g polynomial calculus.
//!
//! For a locally closed `X ⊆ P^n`:
//!
//! * `γ_X(t) = Σ γ_r t^r` is the pushforward of the CSM class of `X` to
//!   `P^n` with `[P^r]` written as `t^r`;
//! * `χ_X(t) = Σ χ(X ∩ H_1 ∩ … ∩ H_r) (-t)^r` collects the Euler
//!   characteristics of general linear sections;
//! * `g_S(t) = Σ g_j t^{n-j}` packs the polar degrees of a subscheme `S`.
//!
//! The involution `ℐ(p) = (t·p(-t-1) + p(0)) / (t+1)` exchanges `γ` and
//! `χ`, and `g_S(t) = (-1)^n γ_{P^n∖S}(-t-1)`.

use thiserror::Error;

use crate::field_poly::MPoly;
use crate::polar::{polar_degrees_scheme, DegreeVector, PolarError, SchemeDegrees, TrialConfig};
use crate::unipoly::{IntPoly, UniPolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassCalcError {
    #[error("polynomials live in different ambient spaces (P^{0} vs P^{1})")]
    AmbientMismatch(usize, usize),
    #[error("degree {degree} exceeds ambient dimension {n}")]
    DegreeExceedsAmbient { degree: usize, n: usize },
    #[error(transparent)]
    Division(#[from] UniPolyError),
    #[error(transparent)]
    Polar(#[from] PolarError),
}

fn check_degree(n: usize, p: &IntPoly) -> Result<(), ClassCalcError> {
    match p.degree() {
        Some(d) if d > n => Err(ClassCalcError::DegreeExceedsAmbient { degree: d, n }),
        _ => Ok(()),
    }
}

macro_rules! ambient_poly {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            n: usize,
            poly: IntPoly,
        }

        impl $name {
            pub fn new(n: usize, poly: IntPoly) -> Result<Self, ClassCalcError> {
                check_degree(n, &poly)?;
                Ok($name { n, poly })
            }

            /// Ambient projective dimension.
            pub fn n(&self) -> usize {
                self.n
            }

            pub fn poly(&self) -> &IntPoly {
                &self.poly
            }

            /// Coefficients `c_0..c_n`, zero padded to length `n + 1`.
            pub fn coeff_vec(&self) -> Vec<i64> {
                (0..=self.n).map(|k| self.poly.coeff(k)).collect()
            }

            fn same_ambient(&self, other: &Self) -> Result<(), ClassCalcError> {
                if self.n != other.n {
                    return Err(ClassCalcError::AmbientMismatch(self.n, other.n));
                }
                Ok(())
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self, ClassCalcError> {
                self.same_ambient(other)?;
                Ok($name { n: self.n, poly: &self.poly + &other.poly })
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self, ClassCalcError> {
                self.same_ambient(other)?;
                Ok($name { n: self.n, poly: &self.poly - &other.poly })
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                self.poly.fmt(f)
            }
        }
    };
}

ambient_poly!(
    /// `γ(t)`: constant term is the Euler characteristic, the coefficient of
    /// `t^{dim X}` the degree.
    ClassPoly
);
ambient_poly!(
    /// `χ(t)`, stored with the signs of the generating polynomial.
    ChiPoly
);
ambient_poly!(
    /// `g(t) = Σ g_j t^{n-j}`.
    GPoly
);

/// `ℐ(p) = p(0) - t·p₊(-t-1)` where `p = p(0) + t·p₊`.
pub fn involute(p: &IntPoly) -> IntPoly {
    let p0 = p.coeff(0);
    let tail = IntPoly::new(p.coeffs().iter().skip(1).copied().collect());
    &IntPoly::constant(p0) - &tail.compose_linear(-1, -1).shift_up()
}

pub fn chi_from_gamma(gamma: &ClassPoly) -> ChiPoly {
    ChiPoly {
        n: gamma.n,
        poly: involute(&gamma.poly),
    }
}

pub fn gamma_from_chi(chi: &ChiPoly) -> ClassPoly {
    ClassPoly {
        n: chi.n,
        poly: involute(&chi.poly),
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn g_poly(g: &DegreeVector) -> GPoly {
    let n = g.n;
    GPoly {
        n,
        poly: IntPoly::new((0..=n).map(|k| g.g[n - k]).collect()),
    }
}

pub fn degree_vector(g: &GPoly) -> DegreeVector {
    DegreeVector::new((0..=g.n).map(|j| g.poly.coeff(g.n - j)).collect())
}

/// γ of the complement `P^n ∖ S`: `(-1)^n g(-t-1)`.
pub fn gamma_from_g(g: &GPoly) -> ClassPoly {
    ClassPoly {
        n: g.n,
        poly: g.poly.compose_linear(-1, -1).scale(sign(g.n)),
    }
}

/// Inverse of [`gamma_from_g`] on the γ side.
pub fn g_from_gamma(gamma: &ClassPoly) -> GPoly {
    GPoly {
        n: gamma.n,
        poly: gamma.poly.compose_linear(-1, -1).scale(sign(gamma.n)),
    }
}

/// `g(t) = (-1)^n ((t+1)·χ(t) - χ(0)) / t` for the χ-polynomial of a
/// complement.
pub fn g_from_chi(chi: &ChiPoly) -> Result<GPoly, ClassCalcError> {
    let numerator = &(&IntPoly::new(vec![1, 1]) * &chi.poly) - &IntPoly::constant(chi.poly.coeff(0));
    GPoly::new(chi.n, numerator.div_t()?.scale(sign(chi.n)))
}

/// `c(TP^n) = (1+h)^{n+1}`: coefficient of `t^r` is `C(n+1, r+1)`.
pub fn gamma_pn(n: usize) -> ClassPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut c: i64 = (n + 1) as i64;
    for r in 0..=n {
        coeffs.push(c);
        c = c * (n - r) as i64 / (r + 2) as i64;
    }
    ClassPoly {
        n,
        poly: IntPoly::new(coeffs),
    }
}

pub fn euler_characteristic(gamma: &ClassPoly) -> i64 {
    gamma.poly.coeff(0)
}

/// `(χ_0, ..., χ_n)` with `χ_r = (-1)^r · coeff_r(χ)`.
pub fn sectional_euler(chi: &ChiPoly) -> Vec<i64> {
    (0..=chi.n).map(|r| sign(r) * chi.poly.coeff(r)).collect()
}

/// `g_j = (-1)^j (χ(D ∩ L_j) - χ(D ∩ L_{j-1}))` with `L_j` a general
/// `j`-plane, read off the sectional Euler characteristics of the
/// complement `D`.
pub fn huh_numbers(chi_complement: &ChiPoly) -> DegreeVector {
    let n = chi_complement.n;
    let sections = sectional_euler(chi_complement);
    // D ∩ L_j is cut by n - j hyperplanes
    let on_plane = |j: i64| if j < 0 { 0 } else { sections[n - j as usize] };
    DegreeVector::new((0..=n as i64).map(|j| sign(j as usize) * (on_plane(j) - on_plane(j - 1))).collect())
}

/// Everything the pipeline knows about a subscheme `S ⊆ P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsmReport {
    pub degrees: SchemeDegrees,
    pub gamma_s: ClassPoly,
    pub gamma_complement: ClassPoly,
    pub chi_s: ChiPoly,
    pub chi_complement: ChiPoly,
}

impl CsmReport {
    pub fn g(&self) -> &DegreeVector {
        &self.degrees.total
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.gamma_s)
    }

    pub fn sectional_euler(&self) -> Vec<i64> {
        sectional_euler(&self.chi_s)
    }

    /// Huh numbers of the complement agree with the polar degrees.
    pub fn huh_check(&self) -> bool {
        &huh_numbers(&self.chi_complement) == self.g()
    }
}

/// CSM class polynomials of `S = V(gens)` and of its complement, via its
/// polar degrees.
pub fn csm_subscheme(gens: &[MPoly], cfg: &TrialConfig) -> Result<CsmReport, ClassCalcError> {
    let degrees = polar_degrees_scheme(gens, cfg)?;
    let gamma_complement = gamma_from_g(&g_poly(&degrees.total));
    let gamma_s = gamma_pn(gamma_complement.n).checked_sub(&gamma_complement)?;
    Ok(CsmReport {
        chi_s: chi_from_gamma(&gamma_s),
        chi_complement: chi_from_gamma(&gamma_complement),
        gamma_s,
        gamma_complement,
        degrees,
    })
}
