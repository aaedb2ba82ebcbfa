use std::path::PathBuf;

use polarcsm::arrangements::{
    build_lattice, char_poly, charpoly_algebraic, charpoly_from_chi, chi_from_charpoly, g_from_charpoly,
    parse_arrangement, reduced_char_poly, Arrangement,
};
use polarcsm::classcalc::{csm_subscheme, g_poly, sectional_euler};
use polarcsm::field_poly::is_prime;
use polarcsm::gring::{class_pn, star};
use polarcsm::input::parse_ideal;
use polarcsm::polar::{polar_degrees_hypersurface, polar_degrees_scheme, DegreeMethod, PolarError};
use polarcsm::{parse_poly, IntPoly, MPoly, PrimeField, TrialConfig};

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn gens(name: &str, cfg: &TrialConfig) -> Vec<MPoly> {
    parse_ideal(&data(name), cfg.prime).unwrap().1
}

fn poly(s: &str, n: usize, cfg: &TrialConfig) -> MPoly {
    parse_poly(s, cfg.ring(n)).unwrap()
}

fn ip(s: &str) -> IntPoly {
    s.parse().unwrap()
}

fn largest_prime_below(n: u64) -> u64 {
    (2..n).rev().find(|&k| is_prime(k)).unwrap()
}

#[test]
fn seed_and_prime_independence() {
    let primes = [2147483647, largest_prime_below(1 << 32), largest_prime_below(1 << 21)];
    for p in primes {
        for seed in [1, 42, 31337] {
            let cfg = TrialConfig {
                prime: PrimeField::new(p).unwrap(),
                ..TrialConfig::default()
            }
            .with_seed(seed);
            let sd = polar_degrees_scheme(&gens("twisted_cubic.txt", &cfg), &cfg).unwrap();
            assert_eq!(sd.total.g, vec![1, -1, -2, -2], "p = {p}, seed = {seed}");
        }
    }
}

#[test]
fn powers_do_not_change_polar_degrees() {
    let cfg = TrialConfig::default();
    for (text, n) in [("x0*x3 - x1*x2", 3), ("x0^3 + x1^3 + x2^3", 2), ("x0*x1*x2", 2), ("x0*x2 - x1^2", 2)] {
        let f = poly(text, n, &cfg);
        let g = polar_degrees_hypersurface(&f, &cfg).unwrap();
        for m in 2..=3 {
            assert_eq!(polar_degrees_hypersurface(&f.pow(m), &cfg).unwrap(), g, "{text} to the {m}");
        }
    }
}

#[test]
fn saturation_route_agrees() {
    let local = TrialConfig::default();
    let sat = TrialConfig::default().with_method(DegreeMethod::Saturation);
    for (text, n) in [
        ("x0*x3 - x1*x2", 3),
        ("x0*x2 - x1^2", 3),
        ("x0^3 + x1^3 + x2^3", 2),
        ("x0*x1*(x0 + x1)*x2", 2),
        ("x2*(x1*x3 - x2^2) - x3*(x0*x3 - x1*x2)", 3),
    ] {
        let a = polar_degrees_hypersurface(&poly(text, n, &local), &local).unwrap();
        let b = polar_degrees_hypersurface(&poly(text, n, &sat), &sat).unwrap();
        assert_eq!(a, b, "{text}");
    }
}

#[test]
fn smooth_plane_curves() {
    let cfg = TrialConfig::default();
    for (text, d) in [
        ("x0^2 + 3*x1^2 - 2*x2^2 + x0*x1", 2i64),
        ("x0^3 + x1^3 + x2^3 + 5*x0*x1*x2", 3),
        ("x0^4 + x1^4 + x2^4 - x0^2*x1*x2", 4),
        ("x0^5 + x1^5 + x2^5", 5),
    ] {
        let f = poly(text, 2, &cfg);
        let g = polar_degrees_hypersurface(&f, &cfg).unwrap();
        assert_eq!(g.g, vec![1, d - 1, (d - 1) * (d - 1)], "{text} is smooth");
        let r = csm_subscheme(&[f], &cfg).unwrap();
        assert_eq!(r.euler_characteristic(), 3 * d - d * d, "{text}");
        assert!(r.huh_check());
    }
}

#[test]
fn twisted_cubic_classes() {
    let cfg = TrialConfig::default();
    let r = csm_subscheme(&gens("twisted_cubic.txt", &cfg), &cfg).unwrap();
    assert_eq!(r.gamma_complement.poly(), &ip("2 + 3t + 4t^2 + t^3"));
    assert_eq!(r.gamma_s.poly(), &ip("2 + 3t"));
    assert_eq!(sectional_euler(&r.chi_complement), vec![2, 0, 2, 1]);
    assert_eq!(r.sectional_euler(), vec![2, 3, 0, 0]);
}

#[test]
fn segre_threefold_matches_star_product() {
    let cfg = TrialConfig::default();
    let r = csm_subscheme(&gens("segre_p1xp2.txt", &cfg), &cfg).unwrap();
    let s = star(&class_pn(1), &class_pn(2)).unwrap();
    assert_eq!(s.gamma, ip("6 + 9t + 8t^2 + 3t^3"));
    assert_eq!(r.gamma_s.poly(), &s.gamma);
}

#[test]
fn input_validation() {
    let cfg = TrialConfig::default();
    let f = poly("x0^2 + x1", 2, &cfg);
    assert_eq!(polar_degrees_hypersurface(&f, &cfg), Err(PolarError::NotHomogeneous));
    assert!(polar_degrees_scheme(&[], &cfg).is_err());
    let other = TrialConfig {
        prime: PrimeField::new(largest_prime_below(1 << 30)).unwrap(),
        ..cfg
    };
    assert!(polar_degrees_hypersurface(&poly("x0*x1", 2, &other), &cfg).is_err());
}

fn corpus_arrangements() -> Vec<(&'static str, Arrangement)> {
    ["four_lines.txt", "boolean_p2.txt", "triangle.txt", "braid_a3.txt"]
        .into_iter()
        .map(|name| (name, parse_arrangement(&data(name)).unwrap()))
        .collect()
}

#[test]
fn braid_arrangement_is_chromatic_polynomial_of_k4() {
    let (_, a) = corpus_arrangements().pop().unwrap();
    let chromatic = ip("-6t + 11t^2 - 6t^3 + t^4");
    assert_eq!(char_poly(&a), chromatic);
    let lattice = build_lattice(&a);
    // set partitions of four elements by number of blocks
    assert_eq!(lattice.count_by_rank(), vec![1, 6, 7, 1]);
}

#[test]
fn arrangement_corpus() {
    let cfg = TrialConfig::default();
    for (name, a) in corpus_arrangements() {
        let p = char_poly(&a);
        assert_eq!(p.eval(1), 0, "{name}");
        let reduced = reduced_char_poly(&p).unwrap();
        assert_eq!(charpoly_algebraic(&a, &cfg).unwrap(), reduced, "{name}");

        let chi = chi_from_charpoly(&reduced, a.n()).unwrap();
        assert_eq!(charpoly_from_chi(&chi).unwrap(), reduced, "{name}");

        let union = csm_subscheme(&[a.product(cfg.ring(a.n()))], &cfg).unwrap();
        assert_eq!(&union.chi_complement, &chi, "{name}");
        assert_eq!(g_poly(union.g()).poly(), &g_from_charpoly(&reduced, a.n()), "{name}");
    }
}

#[test]
fn deleting_a_generic_line() {
    // removing the generic line x2 from four_lines adds back that line minus
    // its three intersection points: χ(M) changes by χ(P^1 ∖ 3 pts) = -1
    let with = parse_arrangement(&data("four_lines.txt")).unwrap();
    let without = parse_arrangement("vars: x0 x1 x2\nx0\nx1\nx0 + x1\n").unwrap();
    let chi = |a: &Arrangement| {
        let reduced = reduced_char_poly(&char_poly(a)).unwrap();
        chi_from_charpoly(&reduced, a.n()).unwrap().poly().coeff(0)
    };
    assert_eq!(chi(&with), 0);
    assert_eq!(chi(&without) - chi(&with), -1);
}

#[test]
fn single_hyperplane_algebraic() {
    let cfg = TrialConfig::default();
    for n in 1..=3 {
        let mut row = vec![0i64; n + 1];
        row[0] = 1;
        row[n] = 2;
        let a = Arrangement::from_integer_rows(n, &[&row]).unwrap();
        assert_eq!(charpoly_algebraic(&a, &cfg).unwrap(), IntPoly::monomial(1, n));
    }
}
