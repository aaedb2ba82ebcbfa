use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_USER_VARS, MAX_VARS};
use super::FieldPolyError;

/// Number of variables plus the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n_vars: usize,
    field: PrimeField,
}

impl Ring {
    /// A user-facing ring in `x0..x{n_vars-1}`, at most 16 variables.
    pub fn new(n_vars: usize, field: PrimeField) -> Result<Self, FieldPolyError> {
        if n_vars == 0 || n_vars > MAX_USER_VARS {
            return Err(FieldPolyError::TooManyVariables(n_vars));
        }
        Ok(Ring { n_vars, field })
    }

    /// Ring with `extra` auxiliary variables appended after the last one.
    pub(crate) fn extended(&self, extra: usize) -> Ring {
        assert!(self.n_vars + extra <= MAX_VARS, "auxiliary variable slots exhausted");
        Ring {
            n_vars: self.n_vars + extra,
            field: self.field,
        }
    }

    /// Same field, different variable count. Internal rings may use the
    /// auxiliary slots.
    pub(crate) fn with_vars(&self, n_vars: usize) -> Ring {
        assert!(n_vars <= MAX_VARS);
        Ring {
            n_vars,
            field: self.field,
        }
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
}

pub type Term = (u64, Monomial);

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept strictly descending in degrevlex with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    ring: Ring,
    terms: Vec<Term>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl MPoly {
    pub fn zero(ring: Ring) -> Self {
        MPoly {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, 1)
    }

    /// Constant from a field element (already reduced or not).
    pub fn constant(ring: Ring, c: u64) -> Self {
        let c = c % ring.field.modulus();
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(c, Monomial::one())]
        };
        MPoly { ring, terms }
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.n_vars, "variable index {i} out of range");
        MPoly {
            ring,
            terms: vec![(1, Monomial::var(i))],
        }
    }

    pub fn monomial(ring: Ring, c: u64, m: Monomial) -> Self {
        Self::from_terms(ring, vec![(c, m)])
    }

    /// Builds the canonical form from arbitrary (unsorted, repeated) terms.
    pub fn from_terms(ring: Ring, terms: Vec<Term>) -> Self {
        let field = ring.field;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            debug_assert!(m.exponents()[ring.n_vars..].iter().all(|&e| e == 0));
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.modulus());
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|&(_, c)| c != 0).map(|(m, c)| (c, m)).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.1));
        MPoly { ring, terms }
    }

    /// Trusts that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        MPoly { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.ring.field
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// Leading term in degrevlex.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Common degree of all terms; the zero polynomial reports 0.
    pub fn is_homogeneous(&self) -> Option<u32> {
        match self.terms.first() {
            None => Some(0),
            Some((_, m)) => {
                let d = m.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d).then_some(d)
            }
        }
    }

    fn check_ring(&self, other: &MPoly) -> Result<(), FieldPolyError> {
        if self.ring != other.ring {
            Err(FieldPolyError::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, FieldPolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, FieldPolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, FieldPolyError> {
        self.check_ring(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(MPoly::zero(self.ring));
        }
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for &(a, ma) in &self.terms {
            for &(b, mb) in &other.terms {
                let m = ma.checked_mul(&mb).ok_or(FieldPolyError::ExponentOverflow { pos: None })?;
                let e = acc.entry(m).or_insert(0);
                *e = field.add(*e, field.mul(a, b));
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|&(_, c)| c != 0).map(|(m, c)| (c, m)).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.1));
        Ok(MPoly::from_sorted_terms(self.ring, terms))
    }

    fn merge(&self, other: &MPoly, subtract: bool) -> MPoly {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: u64| if subtract { field.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ma) = self.terms[i];
            let (b, mb) = other.terms[j];
            match ma.cmp(&mb) {
                std::cmp::Ordering::Greater => {
                    out.push((a, ma));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((conv(b), mb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(a, conv(b));
                    if c != 0 {
                        out.push((c, ma));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|&(b, mb)| (conv(b), mb)));
        MPoly::from_sorted_terms(self.ring, out)
    }

    pub fn scalar_mul(&self, c: u64) -> MPoly {
        let field = self.field();
        let c = c % field.modulus();
        if c == 0 {
            return MPoly::zero(self.ring);
        }
        let terms = self.terms.iter().map(|&(a, m)| (field.mul(a, c), m)).collect();
        MPoly::from_sorted_terms(self.ring, terms)
    }

    /// Multiplication by a single term keeps the order, so no re-sort.
    pub fn mul_term(&self, c: u64, m: &Monomial) -> MPoly {
        let field = self.field();
        if c.is_multiple_of(field.modulus()) {
            return MPoly::zero(self.ring);
        }
        let terms = self.terms.iter().map(|&(a, ma)| (field.mul(a, c), ma.mul(m))).collect();
        MPoly::from_sorted_terms(self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rescales so that the leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(c, _)) => self.scalar_mul(self.field().inv(c)),
        }
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> MPoly {
        assert!(i < self.ring.n_vars, "variable index {i} out of range");
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exponent(i) > 0)
            .map(|&(c, m)| {
                let e = m.exponent(i);
                (field.mul(c, e as u64 % field.modulus()), m.with_exponent(i, e - 1))
            })
            .filter(|&(c, _)| c != 0)
            .collect();
        // differentiation in one variable keeps degrevlex order among survivors
        MPoly::from_terms(self.ring, terms)
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.ring.n_vars);
        let field = self.field();
        self.terms.iter().fold(0, |acc, &(c, m)| {
            let v = (0..self.ring.n_vars).fold(c, |v, i| field.mul(v, field.pow(point[i], m.exponent(i) as u64)));
            field.add(acc, v)
        })
    }

    /// Replaces `x_i` by `images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ring.n_vars);
        let target = images[0].ring;
        assert!(images.iter().all(|p| p.ring == target));
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut acc = MPoly::zero(target);
        for &(c, m) in &self.terms {
            let mut t = MPoly::constant(target, c);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Moves the polynomial into a ring with at least as many variables.
    pub(crate) fn embed(&self, ring: Ring) -> MPoly {
        assert!(ring.n_vars >= self.ring.n_vars && ring.field == self.ring.field);
        MPoly {
            ring,
            terms: self.terms.clone(),
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let field = self.field();
        let terms = self.terms.iter().map(|&(c, m)| (field.neg(c), m)).collect();
        MPoly::from_sorted_terms(self.ring, terms)
    }
}

/// Prints in the input grammar with coefficients in `(-p/2, p/2]`, so the
/// output parses back to the same polynomial.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, &(c, m)) in self.terms.iter().enumerate() {
            let c = field.centered(c);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for i in 0..self.ring.n_vars {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    e => factors.push(format!("x{i}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::parse_poly;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default()).unwrap()
    }

    fn p(s: &str, n: usize) -> MPoly {
        parse_poly(s, ring(n)).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x0*x2 - x1^2", 3).partial_derivative(1), p("-2*x1", 3));
        assert_eq!(p("x0*x3 - x1*x2", 4).partial_derivative(0), p("x3", 4));
        assert!(p("17", 3).partial_derivative(2).is_zero());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x0*x3 - x1*x2", 4).is_homogeneous(), Some(2));
        assert_eq!(p("x0^2 + x1", 2).is_homogeneous(), None);
        assert_eq!(MPoly::zero(ring(2)).is_homogeneous(), Some(0));
    }

    #[test]
    fn arithmetic_examples() {
        let f = p("x0^3 - 2*x0*x1 + 5", 2);
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(&p("x0 + x1", 2) * &p("x0 - x1", 2), p("x0^2 - x1^2", 2));
        assert_eq!(&f * &MPoly::one(ring(2)), f);
        assert_eq!(p("x0 + x1", 2).pow(3), p("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 2));
        assert_eq!(f.scalar_mul(0), MPoly::zero(ring(2)));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = p("x0", 2);
        let b = p("x0", 3);
        assert_eq!(a.checked_add(&b), Err(FieldPolyError::RingMismatch));
        assert_eq!(a.checked_mul(&b), Err(FieldPolyError::RingMismatch));
    }

    #[test]
    fn substitution_and_evaluation() {
        let f = p("x0*x1 - x2^2", 3);
        let r2 = ring(2);
        let images = vec![p("x0 + x1", 2), p("x0 - x1", 2), MPoly::var(r2, 1)];
        assert_eq!(f.substitute(&images), p("x0^2 - 2*x1^2", 2));
        assert_eq!(f.evaluate(&[3, 4, 2]), 8);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((-20i64..20, prop::collection::vec(0u16..4, n)), 0..6).prop_map(move |ts| {
            let r = ring(n);
            let f = r.field();
            MPoly::from_terms(r, ts.into_iter().map(|(c, e)| (f.from_i64(c), Monomial::from_exponents(&e))).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn derivative_is_linear_and_leibniz(a in arb_poly(3), b in arb_poly(3), i in 0usize..3) {
            prop_assert_eq!((&a + &b).partial_derivative(i), &a.partial_derivative(i) + &b.partial_derivative(i));
            let lhs = (&a * &b).partial_derivative(i);
            let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form_idempotent(a in arb_poly(4)) {
            let again = MPoly::from_terms(a.ring(), a.terms().to_vec());
            prop_assert_eq!(&again, &a);
            prop_assert!(a.terms().windows(2).all(|w| w[0].1 > w[1].1));
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly(4)) {
            let text = a.to_string();
            prop_assert_eq!(parse_poly(&text, a.ring()).unwrap(), a);
        }
    }
}
