//! Fixed inputs shared by the benchmarks.

use polarcsm::arrangements::Arrangement;
use polarcsm::groebner::Ideal;
use polarcsm::{parse_poly, IntPoly, MPoly, TrialConfig};

pub const TWISTED_CUBIC: &[&str] = &["x0*x3 - x1*x2", "x0*x2 - x1^2", "x1*x3 - x2^2"];

pub const CYCLIC4: &[&str] = &[
    "x0 + x1 + x2 + x3",
    "x0*x1 + x1*x2 + x2*x3 + x3*x0",
    "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
    "x0*x1*x2*x3 - 1",
];

pub fn polys(gens: &[&str], n: usize) -> Vec<MPoly> {
    let ring = TrialConfig::default().ring(n);
    gens.iter().map(|g| parse_poly(g, ring).expect("fixture parses")).collect()
}

pub fn ideal(gens: &[&str], n: usize) -> Ideal {
    let p = polys(gens, n);
    Ideal::new(p[0].ring(), p).expect("fixture ideal")
}

/// `x_i - x_j` for `0 <= i < j <= n`.
pub fn braid(n: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..=n)
        .flat_map(|i| {
            (i + 1..=n).map(move |j| {
                let mut r = vec![0; n + 1];
                r[i] = 1;
                r[j] = -1;
                r
            })
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Arrangement::from_integer_rows(n, &refs).expect("braid arrangement")
}

/// `1 + 2t + ... + (d+1) t^d`.
pub fn ramp(d: usize) -> IntPoly {
    IntPoly::new((1..=d as i64 + 1).collect())
}
