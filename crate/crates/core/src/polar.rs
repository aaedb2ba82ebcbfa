//! Projective degrees of rational maps `P^n --> P^N` given by homogeneous
//! forms, polar degrees of hypersurfaces (gradient maps), and polar degrees
//! of arbitrary subschemes by inclusion–exclusion over generator products.
//!
//! The `i`-th projective degree counts the points of a general `P^i ⊂ P^n`
//! outside the base locus whose image lies in a general codimension-`i`
//! linear subspace of the target. The default [`DegreeMethod::Localized`]
//! restricts the forms to a random affine chart of a random `P^i`, pulls
//! back `i` random combinations, and inverts a generic element of the base
//! ideal with an extra variable `y` (`y·p = 1`); the number of standard
//! monomials of that zero-dimensional ideal is the length of the saturated
//! scheme. [`DegreeMethod::Saturation`] instead forms the homogeneous ideal
//! in `P^n`, saturates by the base ideal explicitly and measures its degree.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::field_poly::{random_linear_form, stream_label, MPoly, PrimeField, RandomSource, Ring, Seed};
use crate::groebner::{
    count_standard_monomials, degree_zero_dim_projective, dimension_from_basis, saturate_by_ideal, GbConfig,
    GroebnerError, Ideal,
};

/// Source dimensions above this are refused.
pub const MAX_AMBIENT_DIM: usize = 8;

/// Generator count cap for the inclusion–exclusion (2^r - 1 products).
pub const MAX_GENERATORS: usize = 12;

/// Fresh random choices tried per degree before giving up on genericity.
pub const MAX_ATTEMPTS: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("forms have different degrees")]
    MixedDegrees,
    #[error("all forms are zero")]
    ZeroMap,
    #[error("no generators given")]
    NoGenerators,
    #[error("too many generators: {0} (at most {MAX_GENERATORS})")]
    TooManyGenerators(usize),
    #[error("ambient dimension {0} exceeds {MAX_AMBIENT_DIM}")]
    AmbientTooLarge(usize),
    #[error("polynomials are not over the configured prime field")]
    FieldMismatch,
    #[error("independent trials disagree: {}", fmt_vectors(.0))]
    TrialDisagreement(Vec<DegreeVector>),
    #[error("degree {index}: no generic choice found in {attempts} attempts")]
    GenericityFailure { index: usize, attempts: u64 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

fn fmt_vectors(v: &[DegreeVector]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

/// How each projective degree is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DegreeMethod {
    #[default]
    Localized,
    Saturation,
}

/// Randomization and budget for the probabilistic computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub seed: Seed,
    pub prime: PrimeField,
    /// Independent trials that must agree; at least 1.
    pub trials: usize,
    pub method: DegreeMethod,
    pub gb: GbConfig,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: Seed::default(),
            prime: PrimeField::default(),
            trials: 3,
            method: DegreeMethod::default(),
            gb: GbConfig::default(),
        }
    }
}

impl TrialConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Seed(seed);
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials.max(1);
        self
    }

    pub fn with_method(mut self, method: DegreeMethod) -> Self {
        self.method = method;
        self
    }

    /// Ring of `P^n` over the configured field.
    pub fn ring(&self, n: usize) -> Ring {
        Ring::new(n + 1, self.prime).expect("ambient dimension within range")
    }
}

/// Projective (or polar) degrees `(g_0, ..., g_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector {
    pub n: usize,
    pub g: Vec<i64>,
}

impl DegreeVector {
    pub fn new(g: Vec<i64>) -> Self {
        assert!(!g.is_empty());
        DegreeVector { n: g.len() - 1, g }
    }

    pub fn last(&self) -> i64 {
        self.g[self.n]
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.g.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The forms `p_0, ..., p_N` of a rational map out of `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapForms {
    ring: Ring,
    forms: Vec<MPoly>,
    degree: u32,
}

impl MapForms {
    pub fn new(forms: Vec<MPoly>) -> Result<Self, PolarError> {
        let ring = forms.first().ok_or(PolarError::ZeroMap)?.ring();
        if forms.iter().any(|f| f.ring() != ring) {
            return Err(PolarError::FieldMismatch);
        }
        if forms.iter().all(|f| f.is_zero()) {
            return Err(PolarError::ZeroMap);
        }
        let mut degree = None;
        for f in forms.iter().filter(|f| !f.is_zero()) {
            let d = f.is_homogeneous().ok_or(PolarError::NotHomogeneous)?;
            if *degree.get_or_insert(d) != d {
                return Err(PolarError::MixedDegrees);
            }
        }
        Ok(MapForms {
            ring,
            forms,
            degree: degree.unwrap(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn forms(&self) -> &[MPoly] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension of the source projective space.
    pub fn source_dim(&self) -> usize {
        self.ring.n_vars() - 1
    }
}

/// The partial derivatives of a homogeneous polynomial.
pub fn gradient_map(f: &MPoly) -> Result<MapForms, PolarError> {
    let d = f.is_homogeneous().ok_or(PolarError::NotHomogeneous)?;
    if d == 0 {
        return Err(PolarError::ConstantPolynomial);
    }
    MapForms::new((0..f.ring().n_vars()).map(|i| f.partial_derivative(i)).collect())
}

fn random_combination(rng: &mut RandomSource, polys: &[MPoly], ring: Ring) -> MPoly {
    let p = ring.field().modulus();
    polys
        .iter()
        .fold(MPoly::zero(ring), |acc, q| &acc + &q.scalar_mul(rng.nonzero_element(p)))
}

/// Localized count of the `i`-th projective degree for one random choice.
fn degree_localized(m: &MapForms, i: usize, rng: &mut RandomSource, gb: &GbConfig) -> Result<u64, GroebnerError> {
    let n = m.source_dim();
    let modulus = m.ring.field().modulus();
    // variables w_0..w_{i-1} parametrize the chart, y inverts the base ideal
    let affine = m.ring.with_vars(i + 1);
    let y = MPoly::var(affine, i);
    let images: Vec<MPoly> = (0..=n)
        .map(|_| {
            let constant = MPoly::constant(affine, rng.field_element(modulus));
            (0..i).fold(constant, |acc, j| {
                &acc + &MPoly::var(affine, j).scalar_mul(rng.field_element(modulus))
            })
        })
        .collect();
    let pulled: Vec<MPoly> = m.forms.iter().map(|f| f.substitute(&images)).collect();
    let mut gens: Vec<MPoly> = (0..i).map(|_| random_combination(rng, &pulled, affine)).collect();
    let base = random_combination(rng, &pulled, affine);
    gens.push(&(&y * &base) - &MPoly::one(affine));
    let g = Ideal::new(affine, gens)?.groebner(gb)?;
    let dim = dimension_from_basis(&g);
    if dim > 0 {
        return Err(GroebnerError::DimensionPrecondition { dim });
    }
    Ok(count_standard_monomials(&g).expect("zero-dimensional"))
}

/// Literal route: `n - i` source hyperplanes plus `i` pulled-back target
/// hyperplanes, saturated by the base ideal, then the projective degree.
fn degree_by_saturation(m: &MapForms, i: usize, rng: &mut RandomSource, gb: &GbConfig) -> Result<u64, GroebnerError> {
    let n = m.source_dim();
    let ring = m.ring;
    let mut gens: Vec<MPoly> = (0..n - i).map(|_| random_linear_form(rng, ring)).collect();
    gens.extend((0..i).map(|_| random_combination(rng, &m.forms, ring)));
    let j = Ideal::new(ring, gens)?;
    let base = Ideal::new(ring, m.forms.clone())?;
    let sat = saturate_by_ideal(&j, &base, gb)?;
    if sat.groebner(gb)?.is_unit() {
        return Ok(0);
    }
    degree_zero_dim_projective(&sat, rng, gb)
}

fn degree_with_retries(
    m: &MapForms,
    i: usize,
    trial: usize,
    cfg: &TrialConfig,
) -> Result<i64, PolarError> {
    let root = RandomSource::new(cfg.seed);
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = root.split(stream_label(&[trial as u64, i as u64, attempt]));
        let res = match cfg.method {
            DegreeMethod::Localized => degree_localized(m, i, &mut rng, &cfg.gb),
            DegreeMethod::Saturation => degree_by_saturation(m, i, &mut rng, &cfg.gb),
        };
        match res {
            Ok(v) => return Ok(v as i64),
            Err(GroebnerError::DimensionPrecondition { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(PolarError::GenericityFailure {
        index: i,
        attempts: MAX_ATTEMPTS,
    })
}

fn check_field(ring: Ring, cfg: &TrialConfig) -> Result<(), PolarError> {
    if ring.field() != cfg.prime {
        return Err(PolarError::FieldMismatch);
    }
    Ok(())
}

/// Projective degrees of the map, certified by agreement across
/// `cfg.trials` independent random choices.
pub fn projective_degrees(m: &MapForms, cfg: &TrialConfig) -> Result<DegreeVector, PolarError> {
    check_field(m.ring, cfg)?;
    let n = m.source_dim();
    if n > MAX_AMBIENT_DIM {
        return Err(PolarError::AmbientTooLarge(n));
    }
    if m.degree == 0 {
        let mut g = vec![0; n + 1];
        g[0] = 1;
        return Ok(DegreeVector::new(g));
    }
    let trials = cfg.trials.max(1);
    let vectors: Vec<DegreeVector> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = (0..=n)
                .into_par_iter()
                .map(|i| degree_with_retries(m, i, t, cfg))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(DegreeVector::new(g))
        })
        .collect::<Result<_, PolarError>>()?;
    if vectors.iter().any(|v| v != &vectors[0]) {
        return Err(PolarError::TrialDisagreement(vectors));
    }
    Ok(vectors.into_iter().next().unwrap())
}

/// Polar degrees of a hypersurface: projective degrees of its gradient map.
pub fn polar_degrees_hypersurface(f: &MPoly, cfg: &TrialConfig) -> Result<DegreeVector, PolarError> {
    projective_degrees(&gradient_map(f)?, cfg)
}

/// True iff the polar map is birational, i.e. the top polar degree is 1.
pub fn is_homaloidal(f: &MPoly, cfg: &TrialConfig) -> Result<bool, PolarError> {
    Ok(polar_degrees_hypersurface(f, cfg)?.last() == 1)
}

/// Polar degrees of the hypersurface cut out by one product of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetDegrees {
    /// Zero-based generator indices in the product.
    pub indices: Vec<usize>,
    pub degrees: DegreeVector,
}

/// Result of the inclusion–exclusion over generator products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeDegrees {
    pub total: DegreeVector,
    /// One entry per nonempty subset, ordered by size then lexicographically.
    pub subsets: Vec<SubsetDegrees>,
}

/// Polar degrees of the subscheme defined by `gens`:
/// `g_i = Σ_{∅≠J} (-1)^{|J|+1} g_i(∏_{j∈J} F_j)`.
pub fn polar_degrees_scheme(gens: &[MPoly], cfg: &TrialConfig) -> Result<SchemeDegrees, PolarError> {
    let r = gens.len();
    if r == 0 {
        return Err(PolarError::NoGenerators);
    }
    if r > MAX_GENERATORS {
        return Err(PolarError::TooManyGenerators(r));
    }
    let ring = gens[0].ring();
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(PolarError::FieldMismatch);
    }
    check_field(ring, cfg)?;
    for g in gens {
        match g.is_homogeneous() {
            None => return Err(PolarError::NotHomogeneous),
            Some(0) => return Err(PolarError::ConstantPolynomial),
            Some(_) => {}
        }
    }
    let n = ring.n_vars() - 1;
    let mut masks: Vec<u32> = (1u32..1 << r).collect();
    masks.sort_by_key(|&m| (m.count_ones(), (0..r).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>()));
    let subsets: Vec<SubsetDegrees> = masks
        .par_iter()
        .map(|&mask| {
            let indices: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
            let product = indices.iter().fold(MPoly::one(ring), |acc, &i| &acc * &gens[i]);
            Ok(SubsetDegrees {
                indices,
                degrees: polar_degrees_hypersurface(&product, cfg)?,
            })
        })
        .collect::<Result<_, PolarError>>()?;
    let mut total = vec![0i64; n + 1];
    for s in &subsets {
        let sign = if s.indices.len() % 2 == 1 { 1 } else { -1 };
        for (acc, v) in total.iter_mut().zip(&s.degrees.g) {
            *acc += sign * v;
        }
    }
    Ok(SchemeDegrees {
        total: DegreeVector::new(total),
        subsets,
    })
}
