//! Characteristic polynomials of hyperplane arrangements, combinatorially
//! through the intersection lattice and algebraically through the CSM class
//! of the complement.

mod lattice;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::classcalc::{csm_subscheme, ChiPoly, ClassCalcError};
use crate::field_poly::{MPoly, Monomial, Ring, MAX_USER_VARS};
use crate::input::{parse_poly_file, InputError};
use crate::polar::TrialConfig;
use crate::unipoly::{IntPoly, UniPolyError};

pub use lattice::{bareiss_rank, build_lattice, Flat, IntersectionLattice};

pub const MAX_HYPERPLANES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("arrangement has no hyperplanes")]
    Empty,
    #[error("{0} hyperplanes exceed the limit of {MAX_HYPERPLANES}")]
    TooManyHyperplanes(usize),
    #[error("form {index} has {got} coefficients, expected {expected}")]
    WrongLength { index: usize, got: usize, expected: usize },
    #[error("form {0} is zero")]
    ZeroForm(usize),
    #[error("forms {0} and {1} are proportional")]
    Proportional(usize, usize),
    #[error("ambient space needs at least two and at most {MAX_USER_VARS} variables")]
    AmbientSize,
    #[error("line {line}: not a linear form")]
    NotLinear { line: usize },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Division(#[from] UniPolyError),
    #[error(transparent)]
    Pipeline(#[from] ClassCalcError),
}

/// Hyperplanes `ℓ_i = 0` in `P^n`, each `ℓ_i` a row of `n + 1` rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    forms: Vec<Vec<BigRational>>,
}

impl Arrangement {
    pub fn new(n: usize, forms: Vec<Vec<BigRational>>) -> Result<Self, ArrangementError> {
        if n == 0 || n + 1 > MAX_USER_VARS {
            return Err(ArrangementError::AmbientSize);
        }
        if forms.is_empty() {
            return Err(ArrangementError::Empty);
        }
        if forms.len() > MAX_HYPERPLANES {
            return Err(ArrangementError::TooManyHyperplanes(forms.len()));
        }
        for (index, f) in forms.iter().enumerate() {
            if f.len() != n + 1 {
                return Err(ArrangementError::WrongLength { index, got: f.len(), expected: n + 1 });
            }
            if f.iter().all(Zero::is_zero) {
                return Err(ArrangementError::ZeroForm(index));
            }
        }
        let rows: Vec<Vec<BigInt>> = forms.iter().map(|f| lattice::integer_row(f)).collect();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if bareiss_rank(&[rows[i].clone(), rows[j].clone()]) == 1 {
                    return Err(ArrangementError::Proportional(i, j));
                }
            }
        }
        Ok(Arrangement { n, forms })
    }

    /// Integer forms, one coefficient row per hyperplane.
    pub fn from_integer_rows(n: usize, rows: &[&[i64]]) -> Result<Self, ArrangementError> {
        let forms = rows
            .iter()
            .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
            .collect();
        Arrangement::new(n, forms)
    }

    /// The `n + 1` coordinate hyperplanes of `P^n`.
    pub fn boolean(n: usize) -> Result<Self, ArrangementError> {
        let forms = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        Arrangement::new(n, forms)
    }

    /// Projective dimension of the ambient space.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[Vec<BigRational>] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// The defining product `∏ ℓ_i` reduced into `ring`.
    pub fn product(&self, ring: Ring) -> MPoly {
        let field = ring.field();
        self.forms.iter().fold(MPoly::one(ring), |acc, form| {
            let terms = lattice::integer_row(form)
                .iter()
                .enumerate()
                .map(|(i, c)| (field.from_bigint(c), Monomial::var(i)))
                .filter(|(c, _)| *c != 0)
                .collect();
            &acc * &MPoly::from_terms(ring, terms)
        })
    }
}

/// Reads an arrangement file: a `vars:` header and one linear form per line.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ArrangementError> {
    let file = parse_poly_file(text)?;
    let forms = file
        .polys
        .iter()
        .map(|(line, p)| {
            p.linear_coefficients()
                .map(|row| row.into_iter().map(BigRational::from_integer).collect())
                .ok_or(ArrangementError::NotLinear { line: *line })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if file.n_vars < 2 {
        return Err(ArrangementError::AmbientSize);
    }
    Arrangement::new(file.n_vars - 1, forms)
}

/// `P(t) = Σ μ(X) t^{dim X}` over the flats of the central arrangement.
pub fn char_poly(a: &Arrangement) -> IntPoly {
    build_lattice(a).char_poly()
}

/// `P(t) / (t - 1)`.
pub fn reduced_char_poly(p: &IntPoly) -> Result<IntPoly, ArrangementError> {
    Ok(p.div_linear(1)?)
}

/// `χ_{M}(t) = (t·P̲(-t) + P̲(1)) / (t + 1)` for the complement `M` in `P^n`.
pub fn chi_from_charpoly(reduced: &IntPoly, n: usize) -> Result<ChiPoly, ArrangementError> {
    let num = &reduced.compose_linear(-1, 0).shift_up() + &IntPoly::constant(reduced.eval(1));
    Ok(ChiPoly::new(n, num.div_linear(-1)?)?)
}

/// `P̲(t) = ((t - 1)·χ_M(-t) + χ_M(0)) / t`.
pub fn charpoly_from_chi(chi: &ChiPoly) -> Result<IntPoly, ArrangementError> {
    let c = chi.poly();
    let flipped = c.compose_linear(-1, 0);
    let num = &(&flipped.shift_up() - &flipped) + &IntPoly::constant(c.coeff(0));
    Ok(num.div_t()?)
}

/// Reduced characteristic polynomial from the CSM class of the complement:
/// `P̲(t) = γ_M(t - 1)`.
pub fn charpoly_algebraic(a: &Arrangement, cfg: &TrialConfig) -> Result<IntPoly, ArrangementError> {
    let ring = cfg.ring(a.n);
    let report = csm_subscheme(&[a.product(ring)], cfg)?;
    Ok(report.gamma_complement.poly().compose_linear(1, -1))
}

/// `(-1)^n P̲(-t)`, which coincides with `g_X(t)` for the union `X`.
pub fn g_from_charpoly(reduced: &IntPoly, n: usize) -> IntPoly {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    reduced.compose_linear(-1, 0).scale(sign)
}
