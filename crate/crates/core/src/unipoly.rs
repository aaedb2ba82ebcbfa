//! Dense univariate polynomials in `t` with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniPolyError {
    #[error("division is not exact")]
    InexactDivision,
    #[error("cannot parse polynomial in t at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `(a*t + b)^k`
    pub fn linear_power(a: i64, b: i64, k: u32) -> Self {
        (0..k).fold(IntPoly::constant(1), |acc, _| &acc * &IntPoly::new(vec![b, a]))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| c * i as i64).collect())
    }

    /// `p(a*t + b)`
    pub fn compose_linear(&self, a: i64, b: i64) -> Self {
        let lin = IntPoly::new(vec![b, a]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, &c| &(&acc * &lin) + &IntPoly::constant(c))
    }

    /// `t * p`
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(0);
        v.extend_from_slice(&self.coeffs);
        IntPoly { coeffs: v }
    }

    /// `p / t`, failing if the constant term is nonzero.
    pub fn div_t(&self) -> Result<Self, UniPolyError> {
        match self.coeffs.first() {
            None => Ok(IntPoly::zero()),
            Some(0) => Ok(IntPoly::new(self.coeffs[1..].to_vec())),
            Some(_) => Err(UniPolyError::InexactDivision),
        }
    }

    /// `p / (t - r)` by synthetic division, failing unless `p(r) = 0`.
    pub fn div_linear(&self, r: i64) -> Result<Self, UniPolyError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![0i64; n - 1];
        let mut carry = 0i64;
        for k in (0..n).rev() {
            let v = self.coeffs[k] + carry * r;
            if k == 0 {
                if v != 0 {
                    return Err(UniPolyError::InexactDivision);
                }
            } else {
                q[k - 1] = v;
                carry = v;
            }
        }
        Ok(IntPoly::new(q))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

/// `c0 + c1*t + c2*t^2 ...`, zero terms omitted.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{abs}*t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{abs}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Accepts the printed form as well as compact input such as `4+4t+2t^2`.
impl FromStr for IntPoly {
    type Err = UniPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let err = |pos: usize, msg: &str| UniPolyError::Parse {
            pos,
            msg: msg.to_string(),
        };
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        let number = |i: &mut usize| -> Option<i64> {
            let start = *i;
            while *i < chars.len()
                && chars[*i].1.is_ascii_digit()
                && (*i == start || chars[*i].0 == chars[*i - 1].0 + 1)
            {
                *i += 1;
            }
            (*i > start).then(|| chars[start..*i].iter().map(|c| c.1).collect::<String>().parse().ok())?
        };
        let mut coeffs: Vec<i64> = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1i64;
            let mut saw_sign = false;
            while i < chars.len() && matches!(chars[i].1, '+' | '-') {
                if chars[i].1 == '-' {
                    sign = -sign;
                }
                saw_sign = true;
                i += 1;
            }
            if i > 0 && !saw_sign {
                return Err(err(chars[i].0, "expected '+' or '-'"));
            }
            let pos = chars.get(i).map_or(s.len(), |c| c.0);
            let coef = number(&mut i);
            if coef.is_some() && i < chars.len() && chars[i].1 == '*' {
                i += 1;
                if i >= chars.len() || chars[i].1 != 't' {
                    return Err(err(chars.get(i).map_or(s.len(), |c| c.0), "expected 't' after '*'"));
                }
            }
            let mut power = 0usize;
            if i < chars.len() && chars[i].1 == 't' {
                i += 1;
                power = 1;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    power = number(&mut i).ok_or_else(|| err(chars.get(i).map_or(s.len(), |c| c.0), "expected exponent"))?
                        as usize;
                }
            } else if coef.is_none() {
                return Err(err(pos, "expected a term"));
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] += sign * coef.unwrap_or(1);
        }
        Ok(IntPoly::new(coeffs))
    }
}
