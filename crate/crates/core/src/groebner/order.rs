use std::cmp::Ordering;

use crate::field_poly::{Monomial, MAX_VARS};

const ALL_VARS: u32 = (1 << MAX_VARS) - 1;

/// Block order: any monomial involving an eliminated variable is larger
/// than every monomial free of them; degrevlex inside each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EliminationOrder {
    eliminated: u32,
}

impl EliminationOrder {
    pub fn new(vars: &[usize]) -> Self {
        let eliminated = vars.iter().fold(0u32, |acc, &v| {
            assert!(v < MAX_VARS, "variable index {v} out of range");
            acc | (1 << v)
        });
        EliminationOrder { eliminated }
    }

    pub fn mask(&self) -> u32 {
        self.eliminated
    }

    pub fn is_eliminated(&self, m: &Monomial) -> bool {
        m.support() & self.eliminated != 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Elimination(EliminationOrder),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.cmp_degrevlex(b),
            MonomialOrder::Elimination(e) => a
                .cmp_degrevlex_masked(b, e.eliminated)
                .then_with(|| a.cmp_degrevlex_masked(b, ALL_VARS & !e.eliminated)),
        }
    }
}
