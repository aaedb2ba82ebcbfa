use polarcsm::arrangements::{build_lattice, charpoly_algebraic, chi_from_charpoly, parse_arrangement, reduced_char_poly};
use polarcsm::classcalc::{csm_subscheme, g_poly, involute, sectional_euler};
use polarcsm::gring::{class_an, class_pn, class_t, cone_gamma, dot, join_gamma, sigma, star, GClass};
use polarcsm::input::parse_ideal;
use polarcsm::polar::{is_homaloidal, polar_degrees_scheme};
use polarcsm::{IntPoly, TrialConfig};
use serde_json::{json, Value};

use crate::error::CliError;

/// Human-readable lines plus the machine-readable result of one command.
pub struct Report {
    pub lines: Vec<String>,
    pub result: Value,
    /// Set when the report is complete but a cross-check failed.
    pub failure: Option<CliError>,
}

impl Report {
    fn new(lines: Vec<String>, result: Value) -> Self {
        Report { lines, result, failure: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrangementMethod {
    Lattice,
    Algebraic,
    Both,
}

fn coeffs(p: &IntPoly) -> Value {
    json!(p.coeffs())
}

fn product_label(indices: &[usize]) -> String {
    indices.iter().map(|i| format!("F{}", i + 1)).collect::<Vec<_>>().join("*")
}

pub fn polar(text: &str, cfg: &TrialConfig) -> Result<Report, CliError> {
    let (_, gens) = parse_ideal(text, cfg.prime)?;
    let sd = polar_degrees_scheme(&gens, cfg)?;
    let g = &sd.total;
    let gp = g_poly(g);
    let mut lines: Vec<String> = sd
        .subsets
        .iter()
        .map(|s| format!("g({}) = {}", product_label(&s.indices), s.degrees))
        .collect();
    lines.push(format!("g_S(t) = {gp}"));
    let mut result = json!({
        "g": g.g,
        "g_poly": coeffs(gp.poly()),
        "subsets": sd.subsets.iter().map(|s| json!({
            "generators": s.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "g": s.degrees.g,
        })).collect::<Vec<_>>(),
    });
    if gens.len() == 1 {
        let h = is_homaloidal(&gens[0], cfg)?;
        lines.push(format!("homaloidal: {h}"));
        result["homaloidal"] = json!(h);
    }
    lines.push(format!("g = {g}"));
    Ok(Report::new(lines, result))
}

pub fn csm(text: &str, cfg: &TrialConfig) -> Result<Report, CliError> {
    let (_, gens) = parse_ideal(text, cfg.prime)?;
    let r = csm_subscheme(&gens, cfg)?;
    let sections = r.sectional_euler();
    let sections_c = sectional_euler(&r.chi_complement);
    let huh = r.huh_check();
    let lines = vec![
        format!("g = {}", r.g()),
        format!("gamma_S = {}", r.gamma_s),
        format!("gamma_complement = {}", r.gamma_complement),
        format!("chi_S(t) = {}", r.chi_s),
        format!("chi_complement(t) = {}", r.chi_complement),
        format!("sections_S = {sections:?}"),
        format!("sections_complement = {sections_c:?}"),
        format!("chi(S) = {}", r.euler_characteristic()),
        format!("huh_check: {huh}"),
    ];
    let result = json!({
        "g": r.g().g,
        "gamma_S": coeffs(r.gamma_s.poly()),
        "gamma_complement": coeffs(r.gamma_complement.poly()),
        "chi_S": coeffs(r.chi_s.poly()),
        "chi_complement": coeffs(r.chi_complement.poly()),
        "sections_S": sections,
        "sections_complement": sections_c,
        "euler_characteristic": r.euler_characteristic(),
        "huh_check": huh,
    });
    Ok(Report::new(lines, result))
}

pub fn involution(text: &str) -> Result<Report, CliError> {
    let p: IntPoly = text.parse()?;
    let q = involute(&p);
    Ok(Report::new(
        vec![q.to_string()],
        json!({ "input": coeffs(&p), "output": coeffs(&q) }),
    ))
}

/// `P^n`, `A^n` and `T` by name, anything else as a γ-polynomial.
pub fn parse_class(text: &str) -> Result<GClass, CliError> {
    let t = text.trim();
    let index = |rest: &str| rest.strip_prefix('^').unwrap_or(rest).parse::<usize>().ok();
    if t == "T" {
        return Ok(class_t());
    }
    if let Some(n) = t.strip_prefix('P').and_then(index) {
        return Ok(class_pn(n));
    }
    if let Some(n) = t.strip_prefix('A').and_then(index) {
        return Ok(class_an(n));
    }
    Ok(GClass::new(t.parse()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GringOp {
    Star(String, String),
    Dot(String, String),
    Join(String, String),
    Cone(String),
    Sigma(String),
    Class(String),
}

pub fn gring(op: &GringOp) -> Result<Report, CliError> {
    let class = match op {
        GringOp::Star(a, b) => star(&parse_class(a)?, &parse_class(b)?)?,
        GringOp::Dot(a, b) => dot(&parse_class(a)?, &parse_class(b)?),
        GringOp::Join(a, b) => join_gamma(&parse_class(a)?, &parse_class(b)?),
        GringOp::Cone(a) => cone_gamma(&parse_class(a)?),
        GringOp::Class(a) => parse_class(a)?,
        GringOp::Sigma(a) => {
            let s = sigma(&parse_class(a)?.gamma);
            let pairs: Vec<Value> = s
                .coeffs()
                .iter()
                .map(|c| json!([c.numer().to_string(), c.denom().to_string()]))
                .collect();
            return Ok(Report::new(vec![s.to_string()], json!({ "sigma": pairs })));
        }
    };
    Ok(Report::new(
        vec![class.gamma.to_string()],
        json!({
            "gamma": coeffs(&class.gamma),
            "euler_characteristic": class.euler_characteristic(),
        }),
    ))
}

pub fn arrangement(text: &str, method: ArrangementMethod, cfg: &TrialConfig) -> Result<Report, CliError> {
    let a = parse_arrangement(text)?;
    let mut lines = Vec::new();
    let mut result = json!({ "n": a.n(), "hyperplanes": a.len() });
    let lattice = match method {
        ArrangementMethod::Algebraic => None,
        _ => {
            let l = build_lattice(&a);
            let p = l.char_poly();
            let reduced = reduced_char_poly(&p)?;
            lines.push(format!("flats_by_rank = {:?}", l.count_by_rank()));
            lines.push(format!("P = {p}"));
            result["flats_by_rank"] = json!(l.count_by_rank());
            result["P"] = coeffs(&p);
            Some(reduced)
        }
    };
    let algebraic = match method {
        ArrangementMethod::Lattice => None,
        _ => Some(charpoly_algebraic(&a, cfg)?),
    };
    let reduced = lattice.clone().or_else(|| algebraic.clone()).expect("at least one method runs");
    lines.push(format!("P_reduced = {reduced}"));
    result["P_reduced"] = coeffs(&reduced);
    if let (Some(_), Some(alg)) = (&lattice, &algebraic) {
        lines.push(format!("P_reduced_algebraic = {alg}"));
        result["P_reduced_algebraic"] = coeffs(alg);
    }
    let chi = chi_from_charpoly(&reduced, a.n())?;
    lines.push(format!("chi_M(t) = {chi}"));
    result["chi_M"] = coeffs(chi.poly());
    let mut failure = None;
    if let (Some(lat), Some(alg)) = (&lattice, &algebraic) {
        let matched = lat == alg;
        lines.push(format!("match: {matched}"));
        result["match"] = json!(matched);
        if !matched {
            failure = Some(CliError::Failure(format!(
                "lattice and algebraic characteristic polynomials differ: {lat} vs {alg}"
            )));
        }
    }
    Ok(Report { lines, result, failure })
}
