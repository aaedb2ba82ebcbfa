use std::cmp::Ordering;

use crate::field_poly::{MPoly, Monomial, PrimeField, Ring, Term};

use super::ideal::Ideal;
use super::order::MonomialOrder;
use super::{GbConfig, GroebnerError};

/// Polynomial with terms sorted descending in some [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly {
    pub(crate) terms: Vec<Term>,
}

impl OPoly {
    pub(crate) fn from_mpoly(f: &MPoly, order: &MonomialOrder) -> OPoly {
        let mut terms = f.terms().to_vec();
        if *order != MonomialOrder::DegRevLex {
            terms.sort_unstable_by(|a, b| order.cmp(&b.1, &a.1));
        }
        OPoly { terms }
    }

    pub(crate) fn to_mpoly(&self, ring: Ring) -> MPoly {
        MPoly::from_terms(ring, self.terms.clone())
    }

    #[inline]
    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, field: &PrimeField) {
        if let Some(&(c, _)) = self.terms.first() {
            if c != 1 {
                let inv = field.inv(c);
                for t in &mut self.terms {
                    t.0 = field.mul(t.0, inv);
                }
            }
        }
    }
}

/// `a - c*m*b`, both tails already sorted; `a` and `b` are slices of terms.
fn sub_mul(a: &[Term], c: u64, m: &Monomial, b: &[Term], order: &MonomialOrder, field: &PrimeField) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let negc = field.neg(c);
    while i < a.len() && j < b.len() {
        let bm = b[j].1.mul(m);
        match order.cmp(&a[i].1, &bm) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((field.mul(negc, b[j].0), bm));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.add(a[i].0, field.mul(negc, b[j].0));
                if v != 0 {
                    out.push((v, bm));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(bc, bm)| (field.mul(negc, bc), bm.mul(m))));
    out
}

/// Cheap pre-filter for divisibility: bit `i` set when variable `i` occurs.
#[inline]
fn divmask(m: &Monomial) -> u32 {
    m.support()
}

struct Reducer<'a> {
    polys: &'a [OPoly],
    masks: Vec<u32>,
    active: Vec<usize>,
}

impl<'a> Reducer<'a> {
    fn new(polys: &'a [OPoly], active: impl IntoIterator<Item = usize>) -> Self {
        Reducer {
            polys,
            masks: polys.iter().map(|p| divmask(p.lm())).collect(),
            active: active.into_iter().collect(),
        }
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mm = divmask(m);
        let mut best: Option<usize> = None;
        for &k in &self.active {
            if self.masks[k] & !mm != 0 {
                continue;
            }
            let g = &self.polys[k];
            if g.lm().divides(m) && best.is_none_or(|b| g.terms.len() < self.polys[b].terms.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Full reduction; every polynomial in `polys` must be monic.
    fn reduce(&self, f: Vec<Term>, order: &MonomialOrder, field: &PrimeField) -> OPoly {
        let mut rest = f;
        let mut start = 0;
        let mut done: Vec<Term> = Vec::new();
        while start < rest.len() {
            let (c, m) = rest[start];
            match self.find_divisor(&m) {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = g.lm().quotient_of(&m);
                    rest = sub_mul(&rest[start + 1..], c, &q, &g.terms[1..], order, field);
                    start = 0;
                }
                None => {
                    done.push((c, m));
                    start += 1;
                }
            }
        }
        OPoly { terms: done }
    }
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted ascending by leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GBasis {
    ring: Ring,
    order: MonomialOrder,
    polys: Vec<OPoly>,
}

impl GBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Basis elements in canonical (degrevlex) form.
    pub fn elements(&self) -> Vec<MPoly> {
        self.polys.iter().map(|p| p.to_mpoly(self.ring)).collect()
    }

    /// Leading monomials with respect to the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| *p.lm()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().is_one()
    }

    pub(crate) fn polys(&self) -> &[OPoly] {
        &self.polys
    }

    pub fn normal_form(&self, f: &MPoly) -> MPoly {
        assert_eq!(f.ring(), self.ring, "normal form across different rings");
        let field = self.ring.field();
        let reducer = Reducer::new(&self.polys, 0..self.polys.len());
        let f = OPoly::from_mpoly(f, &self.order);
        reducer.reduce(f.terms, &self.order, &field).to_mpoly(self.ring)
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// S-polynomial of two basis elements, for certificates.
    pub fn s_polynomial(&self, i: usize, j: usize) -> MPoly {
        let field = self.ring.field();
        s_poly(&self.polys[i], &self.polys[j], &self.order, &field).to_mpoly(self.ring)
    }
}

fn s_poly(f: &OPoly, g: &OPoly, order: &MonomialOrder, field: &PrimeField) -> OPoly {
    let lcm = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&lcm);
    let qg = g.lm().quotient_of(&lcm);
    let ftail: Vec<Term> = f.terms[1..].iter().map(|&(c, m)| (c, m.mul(&qf))).collect();
    OPoly {
        terms: sub_mul(&ftail, 1, &qg, &g.terms[1..], order, field),
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<OPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let (li, lj) = (self.polys[i].lm(), self.polys[j].lm());
        let lcm = li.lcm(lj);
        let sugar = (self.sugar[i] + lcm.degree() - li.degree()).max(self.sugar[j] + lcm.degree() - lj.degree());
        Pair { i, j, lcm, sugar }
    }

    /// Gebauer–Möller installation of a new basis element.
    fn insert(&mut self, h: OPoly, sugar: u32) {
        let hi = self.polys.len();
        let lh = *h.lm();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let candidates: Vec<Pair> = (0..hi).filter(|&g| self.active[g]).map(|g| self.pair(g, hi)).collect();

        // chain criterion among the new pairs, keeping one per lcm
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = self.polys[p.i].lm().coprime(&lh);
            let dominated = candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        // product criterion
        kept.retain(|p| !self.polys[p.i].lm().coprime(&lh));

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lh) != p.lcm
                && polys[p.j].lm().lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Buchberger's algorithm with the Gebauer–Möller criteria and sugar
/// selection.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, cfg: &GbConfig) -> Result<GBasis, GroebnerError> {
    let ring = ideal.ring();
    let field = ring.field();
    let mut state = State {
        order: &order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = |ring| GBasis {
        ring,
        order,
        polys: vec![OPoly {
            terms: vec![(1, Monomial::one())],
        }],
    };

    let mut inputs: Vec<OPoly> = ideal.generators().iter().map(|g| OPoly::from_mpoly(g, &order)).collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for mut g in inputs {
        let sugar = g.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0);
        g = {
            let active: Vec<usize> = (0..state.polys.len()).filter(|&k| state.active[k]).collect();
            Reducer::new(&state.polys, active).reduce(g.terms, &order, &field)
        };
        if g.is_zero() {
            continue;
        }
        if g.lm().is_one() {
            return Ok(unit(ring));
        }
        g.make_monic(&field);
        state.insert(g, sugar);
    }

    let mut reductions = 0usize;
    while let Some(pair) = state.select() {
        reductions += 1;
        if reductions > cfg.max_reductions {
            return Err(GroebnerError::ResourceCap {
                limit: cfg.max_reductions,
            });
        }
        let s = s_poly(&state.polys[pair.i], &state.polys[pair.j], &order, &field);
        if s.is_zero() {
            continue;
        }
        let active: Vec<usize> = (0..state.polys.len()).filter(|&k| state.active[k]).collect();
        let mut h = Reducer::new(&state.polys, active).reduce(s.terms, &order, &field);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit(ring));
        }
        h.make_monic(&field);
        state.insert(h, pair.sugar);
    }

    // inter-reduce the minimal basis
    let mut minimal: Vec<usize> = (0..state.polys.len()).filter(|&k| state.active[k]).collect();
    minimal.sort_by(|&a, &b| order.cmp(state.polys[a].lm(), state.polys[b].lm()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for (pos, &k) in minimal.iter().enumerate() {
        let others = minimal.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &o)| o);
        let reducer = Reducer::new(&state.polys, others);
        let g = &state.polys[k];
        let tail = reducer.reduce(g.terms[1..].to_vec(), &order, &field);
        let mut terms = Vec::with_capacity(tail.terms.len() + 1);
        terms.push(g.terms[0]);
        terms.extend(tail.terms);
        reduced.push(OPoly { terms });
    }
    Ok(GBasis {
        ring,
        order,
        polys: reduced,
    })
}
