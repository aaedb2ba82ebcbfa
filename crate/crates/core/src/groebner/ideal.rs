use crate::field_poly::{random_linear_form, MPoly, Monomial, RandomSource, Ring};

use super::buchberger::{buchberger, GBasis};
use super::order::{EliminationOrder, MonomialOrder};
use super::{GbConfig, GroebnerError};

/// An ideal given by generators; zero generators are dropped on
/// construction, so the zero ideal has an empty generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<MPoly>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<MPoly>) -> Result<Self, GroebnerError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal {
            ring,
            generators: vec![MPoly::one(ring)],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous().is_some())
    }

    pub fn with_generator(&self, g: MPoly) -> Result<Ideal, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Ideal::new(self.ring, gens)
    }

    pub fn groebner(&self, cfg: &GbConfig) -> Result<GBasis, GroebnerError> {
        buchberger(self, MonomialOrder::DegRevLex, cfg)
    }

    /// Ideal equality via reduced degrevlex bases.
    pub fn same_ideal(&self, other: &Ideal, cfg: &GbConfig) -> Result<bool, GroebnerError> {
        Ok(self.groebner(cfg)?.elements() == other.groebner(cfg)?.elements())
    }

    /// Containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal, cfg: &GbConfig) -> Result<bool, GroebnerError> {
        let g = other.groebner(cfg)?;
        Ok(self.generators.iter().all(|f| g.contains(f)))
    }

    fn embed(&self, ring: Ring) -> Ideal {
        Ideal {
            ring,
            generators: self.generators.iter().map(|g| g.embed(ring)).collect(),
        }
    }

    /// Drops trailing auxiliary variables that no generator uses.
    fn restrict(&self, ring: Ring) -> Ideal {
        Ideal {
            ring,
            generators: self.generators.iter().map(|g| MPoly::from_sorted_terms(ring, g.terms().to_vec())).collect(),
        }
    }
}

/// Generators of `I ∩ k[remaining variables]`.
pub fn eliminate(ideal: &Ideal, vars: &[usize], cfg: &GbConfig) -> Result<Ideal, GroebnerError> {
    let n = ideal.ring().n_vars();
    if vars.iter().any(|&v| v >= n) {
        return Err(GroebnerError::NotProperSubset);
    }
    let order = EliminationOrder::new(vars);
    if order.mask().count_ones() as usize >= n {
        return Err(GroebnerError::NotProperSubset);
    }
    let g = buchberger(ideal, MonomialOrder::Elimination(order), cfg)?;
    let kept = g
        .polys()
        .iter()
        .filter(|p| !order.is_eliminated(p.lm()))
        .map(|p| p.to_mpoly(ideal.ring()))
        .collect();
    Ideal::new(ideal.ring(), kept)
}

/// `(J : p^∞)` via `J + (y·p - 1)` and elimination of `y`.
pub fn saturate_by_poly(j: &Ideal, p: &MPoly, cfg: &GbConfig) -> Result<Ideal, GroebnerError> {
    if p.is_zero() {
        return Err(GroebnerError::ZeroPolynomial);
    }
    if p.ring() != j.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let ring = j.ring();
    let n = ring.n_vars();
    let big = ring.extended(1);
    let y = MPoly::var(big, n);
    let rab = &(&y * &p.embed(big)) - &MPoly::one(big);
    let extended = j.embed(big).with_generator(rab)?;
    Ok(eliminate(&extended, &[n], cfg)?.restrict(ring))
}

/// `J ∩ K` via `u·J + (1-u)·K` and elimination of `u`.
pub fn intersect(j: &Ideal, k: &Ideal, cfg: &GbConfig) -> Result<Ideal, GroebnerError> {
    if j.ring() != k.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let ring = j.ring();
    let n = ring.n_vars();
    let big = ring.extended(1);
    let u = MPoly::var(big, n);
    let one_minus_u = &MPoly::one(big) - &u;
    let gens = j
        .generators()
        .iter()
        .map(|g| &u * &g.embed(big))
        .chain(k.generators().iter().map(|g| &one_minus_u * &g.embed(big)))
        .collect();
    let combined = Ideal::new(big, gens)?;
    Ok(eliminate(&combined, &[n], cfg)?.restrict(ring))
}

/// `(J : I^∞)`, the intersection of the saturations by each generator of `I`.
pub fn saturate_by_ideal(j: &Ideal, i: &Ideal, cfg: &GbConfig) -> Result<Ideal, GroebnerError> {
    if i.is_zero() {
        return Err(GroebnerError::ZeroPolynomial);
    }
    if i.ring() != j.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for p in i.generators() {
        let sat = saturate_by_poly(j, p, cfg)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => intersect(&prev, &sat, cfg)?,
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// Largest set of variables containing the support of no leading monomial;
/// `-1` for the unit ideal.
pub fn dimension_from_basis(g: &GBasis) -> i64 {
    if g.is_unit() {
        return -1;
    }
    let n = g.ring().n_vars();
    let supports: Vec<u32> = g.leading_monomials().iter().map(|m| m.support()).collect();
    (0u32..1 << n)
        .filter(|&mask| supports.iter().all(|&s| s & !mask != 0))
        .map(|mask| mask.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

/// Krull dimension of `k[x]/I` (the affine variety of `I`).
pub fn krull_dimension(ideal: &Ideal, cfg: &GbConfig) -> Result<i64, GroebnerError> {
    Ok(dimension_from_basis(&ideal.groebner(cfg)?))
}

/// Number of standard monomials of a zero-dimensional ideal, i.e. the
/// vector-space dimension of the quotient. `None` if the quotient is
/// infinite-dimensional; `Some(0)` for the unit ideal.
pub fn count_standard_monomials(g: &GBasis) -> Option<u64> {
    if g.is_unit() {
        return Some(0);
    }
    let n = g.ring().n_vars();
    let lms = g.leading_monomials();
    // each variable needs a pure power among the leading monomials
    let mut bounds = Vec::with_capacity(n);
    for v in 0..n {
        let b = lms.iter().filter(|m| m.support() == 1 << v).map(|m| m.exponent(v)).min()?;
        bounds.push(b);
    }
    fn walk(v: usize, cur: Monomial, bounds: &[u16], lms: &[Monomial]) -> u64 {
        if v == bounds.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..bounds[v] {
            let m = cur.with_exponent(v, e);
            // divisibility is monotone in each exponent, so stop early
            if lms.iter().any(|l| l.divides(&m)) {
                break;
            }
            total += walk(v + 1, m, bounds, lms);
        }
        total
    }
    Some(walk(0, Monomial::one(), &bounds, &lms))
}

/// Degree of the projective scheme of a homogeneous ideal whose scheme is
/// zero-dimensional or empty: slice the affine cone by `ℓ = 1` for a random
/// linear form `ℓ` and count standard monomials.
pub fn degree_zero_dim_projective(ideal: &Ideal, rng: &mut RandomSource, cfg: &GbConfig) -> Result<u64, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let ring = ideal.ring();
    let slice = &random_linear_form(rng, ring) - &MPoly::one(ring);
    let sliced = ideal.with_generator(slice)?;
    let g = sliced.groebner(cfg)?;
    let dim = dimension_from_basis(&g);
    if dim > 0 {
        return Err(GroebnerError::DimensionPrecondition { dim });
    }
    Ok(count_standard_monomials(&g).expect("zero-dimensional quotient is finite"))
}
