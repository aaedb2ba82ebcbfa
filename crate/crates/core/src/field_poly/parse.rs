//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' digits | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and `*` is mandatory between factors. Parsing is
//! exact over the integers; reduction into a prime field happens last.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{MPoly, Ring};
use super::FieldPolyError;

/// Polynomial with exact integer coefficients, keyed by monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPoly {
    pub n_vars: usize,
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl IntegerPoly {
    fn constant(n_vars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        IntegerPoly { n_vars, terms }
    }

    fn add(mut self, other: IntegerPoly, sign: i32) -> IntegerPoly {
        for (m, c) in other.terms {
            let e = self.terms.entry(m).or_insert_with(BigInt::zero);
            if sign < 0 {
                *e -= c;
            } else {
                *e += c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &IntegerPoly, pos: usize) -> Result<IntegerPoly, FieldPolyError> {
        let mut out = IntegerPoly::constant(self.n_vars, BigInt::zero());
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let m = ma
                    .checked_mul(mb)
                    .ok_or(FieldPolyError::ExponentOverflow { pos: Some(pos) })?;
                *out.terms.entry(m).or_insert_with(BigInt::zero) += a * b;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of every term if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Coefficient vector of a linear form (`None` if not homogeneous linear).
    pub fn linear_coefficients(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() || self.homogeneous_degree() != Some(1) {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); self.n_vars];
        for (m, c) in &self.terms {
            let i = (0..self.n_vars).find(|&i| m.exponent(i) == 1)?;
            coeffs[i] = c.clone();
        }
        Some(coeffs)
    }

    pub fn reduce(&self, ring: Ring) -> MPoly {
        let field = ring.field();
        MPoly::from_terms(ring, self.terms.iter().map(|(m, c)| (field.from_bigint(c), *m)).collect())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n_vars: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: impl Into<String>) -> FieldPolyError {
        FieldPolyError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<IntegerPoly, FieldPolyError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(rhs, if c == b'-' { -1 } else { 1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntegerPoly, FieldPolyError> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            let pos = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = acc.mul(&rhs, pos)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntegerPoly, FieldPolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let inner = self.unary()?;
                Ok(IntegerPoly::constant(self.n_vars, BigInt::zero()).add(inner, -1))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<IntegerPoly, FieldPolyError> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let pos = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("expected exponent after '^'"));
            }
            let e: u16 = std::str::from_utf8(digits)
                .unwrap()
                .parse()
                .map_err(|_| FieldPolyError::ExponentOverflow { pos: Some(pos) })?;
            let mut acc = IntegerPoly::constant(self.n_vars, BigInt::one());
            let (mut base, mut e) = (base, e);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&base, pos)?;
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul(&base, pos)?;
                }
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntegerPoly, FieldPolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let v = BigInt::parse_bytes(digits, 10).expect("ascii digits");
                Ok(IntegerPoly::constant(self.n_vars, v))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let index = name
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && (d.len() == 1 || !d.starts_with('0')))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i < self.n_vars);
                match index {
                    Some(i) => {
                        let mut terms = BTreeMap::new();
                        terms.insert(Monomial::var(i), BigInt::one());
                        Ok(IntegerPoly {
                            n_vars: self.n_vars,
                            terms,
                        })
                    }
                    None => Err(FieldPolyError::UnknownVariable {
                        pos: start,
                        name: name.to_string(),
                    }),
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected character '{}'", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

/// Parses with exact integer coefficients in `x0..x{n_vars-1}`.
pub fn parse_integer_poly(text: &str, n_vars: usize) -> Result<IntegerPoly, FieldPolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n_vars,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.syntax("trailing input"));
    }
    Ok(out)
}

/// Parses `text` and reduces it into `ring`.
pub fn parse_poly(text: &str, ring: Ring) -> Result<MPoly, FieldPolyError> {
    Ok(parse_integer_poly(text, ring.n_vars())?.reduce(ring))
}
