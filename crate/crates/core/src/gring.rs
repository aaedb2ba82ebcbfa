//! Arithmetic in the Grothendieck ring of varieties over `P^∞`, carried out
//! on γ-images.
//!
//! `γ` is additive, multiplicative for the affine-concatenation product `·`,
//! and becomes multiplicative for the Segre product `⋆` after the
//! σ-transform `t^i ↦ t^i / i!`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::classcalc::gamma_pn;
use crate::unipoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GRingError {
    #[error("coefficient of t^{degree} does not become an integer under the inverse σ-transform")]
    NonIntegral { degree: usize },
}

/// A class in `K(Var_{P^∞})`, represented by its γ-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GClass {
    pub gamma: IntPoly,
    pub label: Option<String>,
}

impl GClass {
    pub fn new(gamma: IntPoly) -> Self {
        GClass { gamma, label: None }
    }

    pub fn labelled(gamma: IntPoly, label: impl Into<String>) -> Self {
        GClass {
            gamma,
            label: Some(label.into()),
        }
    }

    /// Euler characteristic of any representative.
    pub fn euler_characteristic(&self) -> i64 {
        self.gamma.coeff(0)
    }

    pub fn scale(&self, k: i64) -> GClass {
        GClass::new(self.gamma.scale(k))
    }
}

impl fmt::Display for GClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.gamma.fmt(f)
    }
}

impl Add for &GClass {
    type Output = GClass;
    fn add(self, rhs: &GClass) -> GClass {
        GClass::new(&self.gamma + &rhs.gamma)
    }
}

impl Sub for &GClass {
    type Output = GClass;
    fn sub(self, rhs: &GClass) -> GClass {
        GClass::new(&self.gamma - &rhs.gamma)
    }
}

impl Neg for &GClass {
    type Output = GClass;
    fn neg(self) -> GClass {
        GClass::new(-&self.gamma)
    }
}

/// Exact rational polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RatPoly::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `t^i ↦ t^i / i!`
pub fn sigma(p: &IntPoly) -> RatPoly {
    RatPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| BigRational::new(BigInt::from(c), factorial(i)))
            .collect(),
    )
}

/// `t^i ↦ i! t^i`, defined when every scaled coefficient is an integer.
pub fn sigma_inv(q: &RatPoly) -> Result<IntPoly, GRingError> {
    let coeffs = q
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scaled = c * BigRational::from_integer(factorial(i));
            if !scaled.is_integer() {
                return Err(GRingError::NonIntegral { degree: i });
            }
            Ok(scaled.to_integer().to_i64().expect("coefficient fits in i64"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::new(coeffs))
}

/// Segre product: `σ(γ(a ⋆ b)) = σ(γa)·σ(γb)`.
pub fn star(a: &GClass, b: &GClass) -> Result<GClass, GRingError> {
    Ok(GClass::new(sigma_inv(&sigma(&a.gamma).mul(&sigma(&b.gamma)))?))
}

/// Affine-concatenation product: `γ(a · b) = γa · γb`.
pub fn dot(a: &GClass, b: &GClass) -> GClass {
    GClass::new(&a.gamma * &b.gamma)
}

/// `k^* ⊂ P^1`, with `γ = t`.
pub fn class_t() -> GClass {
    GClass::labelled(IntPoly::t(), "T")
}

pub fn class_pn(n: usize) -> GClass {
    GClass::labelled(gamma_pn(n).poly().clone(), format!("P^{n}"))
}

/// `[A^n] = [P^n] - [P^{n-1}]`.
pub fn class_an(n: usize) -> GClass {
    let gamma = match n {
        0 => IntPoly::constant(1),
        _ => gamma_pn(n).poly() - gamma_pn(n - 1).poly(),
    };
    GClass::labelled(gamma, format!("A^{n}"))
}

/// Join of two embedded varieties placed in disjoint linear subspaces:
/// `γ(J(X,Y)) = t·γX·γY + γX + γY`, i.e. `((tγX+1)(tγY+1) - 1) / t`.
pub fn join_gamma(a: &GClass, b: &GClass) -> GClass {
    let one = IntPoly::constant(1);
    let fa = &a.gamma.shift_up() + &one;
    let fb = &b.gamma.shift_up() + &one;
    let numerator = &(&fa * &fb) - &one;
    GClass::new(numerator.div_t().expect("constant term cancels"))
}

/// Projective cone with a point as vertex: `γ = (t+1)γX + 1`.
pub fn cone_gamma(a: &GClass) -> GClass {
    GClass::new(&(&IntPoly::new(vec![1, 1]) * &a.gamma) + &IntPoly::constant(1))
}
