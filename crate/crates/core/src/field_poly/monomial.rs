use std::cmp::Ordering;

/// Largest number of variables a user-facing ring may have.
pub const MAX_USER_VARS: usize = 16;

/// Storage width of a monomial. Two slots above [`MAX_USER_VARS`] are kept
/// for the auxiliary variables introduced by saturation and intersection.
pub const MAX_VARS: usize = MAX_USER_VARS + 2;

/// A power product stored as a dense exponent vector.
///
/// Unused trailing slots are always zero, so comparisons and divisibility
/// tests can run over the full array regardless of the ring size.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// `None` on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        out.degree = self.degree + other.degree;
        Some(out)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.degree = other.degree - self.degree;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Self::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.degree = out.exps.iter().map(|&e| e as u32).sum();
        out
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.degree = out.degree - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }

    /// Degree in the variables selected by `mask`.
    pub fn masked_degree(&self, mask: u32) -> u32 {
        (0..MAX_VARS)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.exps[i] as u32)
            .sum()
    }

    /// Bit set of variables with nonzero exponent.
    pub fn support(&self) -> u32 {
        (0..MAX_VARS)
            .filter(|&i| self.exps[i] != 0)
            .fold(0, |acc, i| acc | (1 << i))
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Degrevlex restricted to the variables in `mask`.
    pub fn cmp_degrevlex_masked(&self, other: &Monomial, mask: u32) -> Ordering {
        match self.masked_degree(mask).cmp(&other.masked_degree(mask)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            if mask >> i & 1 == 0 {
                continue;
            }
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_degrevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
