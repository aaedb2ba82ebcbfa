use polarcsm::field_poly::{Monomial, RandomSource, Seed};
use polarcsm::groebner::{
    buchberger, degree_zero_dim_projective, eliminate, krull_dimension, saturate_by_ideal, saturate_by_poly, GBasis,
    EliminationOrder, GbConfig, Ideal, MonomialOrder,
};
use polarcsm::{parse_poly, MPoly, PrimeField, Ring};
use proptest::prelude::*;

fn ring(n: usize) -> Ring {
    Ring::new(n, PrimeField::default()).unwrap()
}

fn ideal(r: Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
}

fn gb(i: &Ideal) -> GBasis {
    buchberger(i, MonomialOrder::DegRevLex, &GbConfig::default()).unwrap()
}

/// Every S-polynomial and every input generator reduces to zero.
fn certify(i: &Ideal, g: &GBasis) {
    for f in i.generators() {
        assert!(g.normal_form(f).is_zero(), "generator {f} not reduced to 0");
    }
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            assert!(g.normal_form(&g.s_polynomial(a, b)).is_zero(), "S({a},{b}) not reduced to 0");
        }
    }
}

fn same(a: &Ideal, b: &Ideal) -> bool {
    a.same_ideal(b, &GbConfig::default()).unwrap()
}

const TWISTED_CUBIC: &[&str] = &["x0*x3 - x1*x2", "x0*x2 - x1^2", "x1*x3 - x2^2"];

fn monomials(r: Ring, texts: &[&str]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = texts.iter().map(|m| parse_poly(m, r).unwrap().leading_term().unwrap().1).collect();
    v.sort();
    v
}

/// Number of degree-`d` monomials in 4 variables outside the monomial ideal.
fn standard_count(lms: &[Monomial], d: u16) -> usize {
    let mut count = 0;
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                let m = Monomial::from_exponents(&[a, b, c, d - a - b - c]);
                if !lms.iter().any(|l| l.divides(&m)) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(4);
    let i = ideal(r, TWISTED_CUBIC);
    let g = gb(&i);
    certify(&i, &g);
    let mut lms = g.leading_monomials();
    lms.sort();
    assert_eq!(lms, monomials(r, &["x1^2", "x1*x2", "x2^2"]));
    // the rational normal cubic has Hilbert function 3d + 1
    for d in 0..6 {
        assert_eq!(standard_count(&lms, d), 3 * d as usize + 1);
    }

    let block = MonomialOrder::Elimination(EliminationOrder::new(&[0, 1]));
    let g = buchberger(&i, block, &GbConfig::default()).unwrap();
    certify(&i, &g);
    let lms = g.leading_monomials();
    for d in 0..6 {
        assert_eq!(standard_count(&lms, d), 3 * d as usize + 1);
    }
}

#[test]
fn small_bases_and_normal_forms() {
    let r = ring(2);
    let g = gb(&ideal(r, &["x0", "x1"]));
    assert_eq!(g.len(), 2);
    let g = gb(&ideal(r, &["x0^2 - x1*x0", "x0"]));
    assert_eq!(g.elements(), vec![parse_poly("x0", r).unwrap()]);

    let r4 = ring(4);
    let i = ideal(r4, TWISTED_CUBIC);
    let g = gb(&i);
    assert_eq!(g.normal_form(&MPoly::one(r4)), MPoly::one(r4));
    let f = parse_poly("x0^3 + 5*x1*x2 - x3", r4).unwrap();
    let shifted = &f + &(&parse_poly("x0 + 7*x2^2", r4).unwrap() * &i.generators()[1]);
    assert_eq!(g.normal_form(&shifted), g.normal_form(&f));
}

#[test]
fn certificates_on_corpus() {
    let r = ring(6);
    let cases: &[&[&str]] = &[
        &["x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"],
        &["x0 + x1 + x2 + x3", "x0*x1 + x1*x2 + x2*x3 + x3*x0", "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1", "x0*x1*x2*x3 - x4^4"],
        &["x0^2*x1 - x2^3 + x5", "x3*x4 - x1^2", "x0*x5 - x4^2 + 3"],
    ];
    for gens in cases {
        let i = ideal(r, gens);
        certify(&i, &gb(&i));
    }
}

#[test]
fn elimination() {
    let cfg = GbConfig::default();
    let r = ring(2);
    // x = x0, y = x1
    let e = eliminate(&ideal(r, &["x1 - x0^2", "x1"]), &[1], &cfg).unwrap();
    assert!(same(&e, &ideal(r, &["x0^2"])));
    let e = eliminate(&ideal(r, &["x0"]), &[1], &cfg).unwrap();
    assert!(same(&e, &ideal(r, &["x0"])));
    let e = eliminate(&ideal(r, &["x1*x0 - 1", "x0"]), &[1], &cfg).unwrap();
    assert!(same(&e, &Ideal::unit(r)));
}

#[test]
fn elimination_is_a_projection() {
    let cfg = GbConfig::default();
    let r = ring(4);
    let mut rng = RandomSource::new(Seed(5));
    for _ in 0..5 {
        let gens: Vec<MPoly> = (0..3)
            .map(|_| {
                let c = |rng: &mut RandomSource| rng.next_u64() % 7;
                let text = format!(
                    "{}*x0*x1 + {}*x2^2 - {}*x3 + {}*x0*x3 + {}",
                    c(&mut rng),
                    c(&mut rng),
                    c(&mut rng),
                    c(&mut rng),
                    c(&mut rng)
                );
                parse_poly(&text, r).unwrap()
            })
            .collect();
        let i = Ideal::new(r, gens).unwrap();
        let step = eliminate(&eliminate(&i, &[0], &cfg).unwrap(), &[0, 1], &cfg).unwrap();
        let once = eliminate(&i, &[0, 1], &cfg).unwrap();
        assert!(same(&step, &once));
    }
}

#[test]
fn saturation() {
    let cfg = GbConfig::default();
    let r = ring(3);
    let x0 = parse_poly("x0", r).unwrap();
    let s = saturate_by_poly(&ideal(r, &["x0^2*x1"]), &x0, &cfg).unwrap();
    assert!(same(&s, &ideal(r, &["x1"])));
    let j = ideal(r, &["x0*x1 - x2^2", "x1^3"]);
    assert!(same(&saturate_by_poly(&j, &MPoly::one(r), &cfg).unwrap(), &j));
    let s = saturate_by_poly(&ideal(r, &["x0*x1", "x0*x2"]), &x0, &cfg).unwrap();
    assert!(same(&s, &ideal(r, &["x1", "x2"])));

    assert!(same(&saturate_by_ideal(&j, &Ideal::unit(r), &cfg).unwrap(), &j));
    let r2 = ring(2);
    // neither line of V(x0*x1) lies inside the origin, so nothing is removed
    let s = saturate_by_ideal(&ideal(r2, &["x0*x1"]), &ideal(r2, &["x0", "x1"]), &cfg).unwrap();
    assert!(same(&s, &ideal(r2, &["x0*x1"])));
    let s = saturate_by_ideal(&ideal(r2, &["x0^2*x1", "x0*x1^2"]), &ideal(r2, &["x0", "x1"]), &cfg).unwrap();
    assert!(same(&s, &ideal(r2, &["x0*x1"])));
}

#[test]
fn saturation_properties() {
    let cfg = GbConfig::default();
    let r = ring(4);
    let j = ideal(r, &["x0*x3^2 - x1*x2*x3", "x0*x2*x3 - x1^2*x3", "x1*x3^2 - x2^2*x3"]);
    let i = ideal(r, &["x3"]);
    let sat = saturate_by_ideal(&j, &i, &cfg).unwrap();
    assert!(j.is_subset_of(&sat, &cfg).unwrap());
    assert!(same(&sat, &ideal(r, TWISTED_CUBIC)));
    assert!(same(&saturate_by_ideal(&sat, &i, &cfg).unwrap(), &sat));
    for p in i.generators() {
        assert!(same(&saturate_by_poly(&sat, p, &cfg).unwrap(), &sat));
    }
}

#[test]
fn krull_dimensions() {
    let cfg = GbConfig::default();
    let r = ring(4);
    assert_eq!(krull_dimension(&ideal(r, &["x0", "x1"]), &cfg).unwrap(), 2);
    assert_eq!(krull_dimension(&ideal(r, &["x0*x3 - x1*x2"]), &cfg).unwrap(), 3);
    assert_eq!(krull_dimension(&Ideal::zero(r), &cfg).unwrap(), 4);
    assert_eq!(krull_dimension(&ideal(r, TWISTED_CUBIC), &cfg).unwrap(), 2);
    assert_eq!(krull_dimension(&Ideal::unit(r), &cfg).unwrap(), -1);
}

#[test]
fn zero_dimensional_degrees_are_seed_independent() {
    let cfg = GbConfig::default();
    let r3 = ring(3);
    let r4 = ring(4);
    for seed in [1, 2, 3, 99] {
        let mut rng = RandomSource::new(Seed(seed));
        let lines = Ideal::new(
            r3,
            (0..2).map(|_| polarcsm::field_poly::random_linear_form(&mut rng, r3)).collect(),
        )
        .unwrap();
        assert_eq!(degree_zero_dim_projective(&lines, &mut rng, &cfg).unwrap(), 1);

        let mut gens = vec![parse_poly("x0*x3 - x1*x2", r4).unwrap()];
        gens.extend((0..2).map(|_| polarcsm::field_poly::random_linear_form(&mut rng, r4)));
        let quadric_line = Ideal::new(r4, gens).unwrap();
        assert_eq!(degree_zero_dim_projective(&quadric_line, &mut rng, &cfg).unwrap(), 2);

        let mut gens = ideal(r4, TWISTED_CUBIC).generators().to_vec();
        gens.push(polarcsm::field_poly::random_linear_form(&mut rng, r4));
        let section = Ideal::new(r4, gens).unwrap();
        assert_eq!(degree_zero_dim_projective(&section, &mut rng, &cfg).unwrap(), 3);

        assert_eq!(degree_zero_dim_projective(&Ideal::unit(r4), &mut rng, &cfg).unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_bases_are_certified(coeffs in prop::collection::vec(-5i64..=5, 12)) {
        let r = ring(3);
        let mons = ["x0^2", "x0*x1", "x1*x2", "x2^2", "x0", "x1"];
        let make = |cs: &[i64]| {
            let text = cs.iter().zip(mons).map(|(c, m)| format!("({c})*{m}")).collect::<Vec<_>>().join(" + ");
            parse_poly(&text, r).unwrap()
        };
        let i = Ideal::new(r, vec![make(&coeffs[..6]), make(&coeffs[6..])]).unwrap();
        let g = gb(&i);
        certify(&i, &g);
    }
}
