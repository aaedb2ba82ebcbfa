use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::unipoly::IntPoly;

use super::Arrangement;

/// Rank of a list of integer rows, by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Clears denominators of a rational row.
pub(crate) fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

/// A flat of the central arrangement, identified by the set of hyperplanes
/// containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Bit `i` set when hyperplane `i` contains the flat.
    pub hyperplanes: u32,
    /// Codimension in `k^{n+1}`.
    pub rank: usize,
    /// Linear dimension in `k^{n+1}`.
    pub dim: usize,
    pub moebius: i64,
}

/// Intersection lattice ordered by reverse inclusion; flats sorted by rank,
/// the ambient space first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    pub ambient_dim: usize,
    pub flats: Vec<Flat>,
}

impl IntersectionLattice {
    /// `P(t) = Σ μ(X) t^{dim X}`.
    pub fn char_poly(&self) -> IntPoly {
        self.flats
            .iter()
            .fold(IntPoly::zero(), |acc, f| &acc + &IntPoly::monomial(f.moebius, f.dim))
    }

    pub fn count_by_rank(&self) -> Vec<usize> {
        let top = self.flats.iter().map(|f| f.rank).max().unwrap_or(0);
        (0..=top).map(|r| self.flats.iter().filter(|f| f.rank == r).count()).collect()
    }
}

pub fn build_lattice(a: &Arrangement) -> IntersectionLattice {
    let rows: Vec<Vec<BigInt>> = a.forms().iter().map(|f| integer_row(f)).collect();
    let k = rows.len();
    let ambient_dim = a.n() + 1;
    let subset_rows = |mask: u32| -> Vec<Vec<BigInt>> {
        (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| rows[i].clone()).collect()
    };
    let closure = |mask: u32, rank: usize| -> u32 {
        let base = subset_rows(mask);
        (0..k).fold(mask, |acc, i| {
            if acc >> i & 1 == 1 {
                return acc;
            }
            let mut with = base.clone();
            with.push(rows[i].clone());
            if bareiss_rank(&with) == rank {
                acc | 1 << i
            } else {
                acc
            }
        })
    };

    let mut seen: HashSet<u32> = HashSet::from([0]);
    let mut levels: Vec<Vec<u32>> = vec![vec![0]];
    loop {
        let rank = levels.len();
        let mut next = Vec::new();
        for &flat in levels.last().unwrap() {
            for i in 0..k {
                if flat >> i & 1 == 1 {
                    continue;
                }
                let closed = closure(flat | 1 << i, rank);
                if seen.insert(closed) {
                    next.push(closed);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        levels.push(next);
    }

    let mut flats: Vec<Flat> = Vec::new();
    for (rank, level) in levels.iter().enumerate() {
        for &mask in level {
            let below: i64 = flats
                .iter()
                .filter(|f| f.hyperplanes & !mask == 0)
                .map(|f| f.moebius)
                .sum();
            flats.push(Flat {
                hyperplanes: mask,
                rank,
                dim: ambient_dim - rank,
                moebius: if rank == 0 { 1 } else { -below },
            });
        }
    }
    IntersectionLattice { ambient_dim, flats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bareiss_ranks() {
        assert_eq!(bareiss_rank(&[row(&[1, 2, 3]), row(&[2, 4, 6])]), 1);
        assert_eq!(bareiss_rank(&[row(&[1, 0, 0]), row(&[0, 1, 0]), row(&[1, 1, 0])]), 2);
        assert_eq!(bareiss_rank(&[row(&[0, 0, 1]), row(&[0, 2, 0]), row(&[3, 0, 0])]), 3);
        assert_eq!(bareiss_rank(&[row(&[0, 0])]), 0);
        assert_eq!(bareiss_rank(&[]), 0);
    }
}
