//! Fraction-free Buchberger kernel.
//!
//! Polynomials are held with primitive integer coefficients and terms sorted
//! in descending monomial order. Everything here works on raw exponent
//! vectors; the varset-aware wrappers live in the parent module.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::order::MonomialOrder;
use crate::poly::{Monomial, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// Smallest lcm of leading monomials first.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties broken by the normal strategy.
    Sugar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

fn mask(m: &Monomial) -> u32 {
    m.exponents().iter().enumerate().fold(0u32, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
}

impl IPoly {
    pub fn zero() -> IPoly {
        IPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Clears denominators and sorts; returns the polynomial together with the
    /// rational `c` such that `original = c * result`.
    pub fn from_rat_terms(terms: &[(Monomial, Rat)], order: &MonomialOrder) -> (IPoly, Rat) {
        let mut den = BigInt::one();
        for (_, c) in terms {
            den = den.lcm(c.denom());
        }
        let mut out: Vec<(Monomial, BigInt)> =
            terms.iter().map(|(m, c)| (*m, c.numer() * (&den / c.denom()))).collect();
        out.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut p = IPoly { terms: out };
        let content = p.make_primitive();
        (p, Rat::new(content, den))
    }

    pub fn to_rat_terms(&self) -> Vec<(Monomial, Rat)> {
        self.terms.iter().map(|(m, c)| (*m, Rat::from_integer(c.clone()))).collect()
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the signed factor that was removed.
    pub fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
        g
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

/// `a*p[start..] - b*m*g`, keeping `p[..start]` scaled by `a`.
fn axpy_from(p: &[(Monomial, BigInt)], start: usize, a: &BigInt, b: &BigInt, m: &Monomial, g: &IPoly, order: &MonomialOrder) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + g.terms.len());
    let scale = |c: &BigInt| if a.is_one() { c.clone() } else { c * a };
    for t in &p[..start] {
        out.push((t.0, scale(&t.1)));
    }
    let (mut i, mut j) = (start, 0);
    let gt = &g.terms;
    while i < p.len() || j < gt.len() {
        let ord = if i < p.len() && j < gt.len() {
            order.cmp(&p[i].0, &gt[j].0.mul(m))
        } else if i < p.len() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        match ord {
            Ordering::Greater => {
                out.push((p[i].0, scale(&p[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gt[j].0.mul(m), -(&gt[j].1 * b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = scale(&p[i].1) - &gt[j].1 * b;
                if !c.is_zero() {
                    out.push((p[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub struct Reducers<'a> {
    polys: Vec<&'a IPoly>,
    masks: Vec<u32>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a IPoly>) -> Reducers<'a> {
        let polys: Vec<&IPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys.iter().map(|p| mask(p.lm())).collect();
        Reducers { polys, masks }
    }

    fn find(&self, t: &Monomial, skip: Option<usize>) -> Option<(usize, Monomial)> {
        let tm = mask(t);
        for (k, g) in self.polys.iter().enumerate() {
            if Some(k) == skip || self.masks[k] & !tm != 0 {
                continue;
            }
            if let Some(q) = g.lm().quotient_of(t) {
                return Some((k, q));
            }
        }
        None
    }
}

/// Reduces `p` by `reducers`. With `full` every term is reduced, otherwise
/// only the leading term. Returns the remainder (made primitive) and the
/// rational `s` with `remainder ≡ s * p` modulo the reducers.
pub fn reduce(p: &IPoly, reducers: &Reducers<'_>, full: bool, order: &MonomialOrder, skip: Option<usize>) -> (IPoly, Rat) {
    let mut terms = p.terms.clone();
    let mut scale = Rat::one();
    let mut pos = 0;
    let mut steps = 0usize;
    let start_bits = p.terms.first().map(|t| t.1.bits()).unwrap_or(0);
    while pos < terms.len() {
        let t = terms[pos].0;
        match reducers.find(&t, skip) {
            Some((k, q)) => {
                let g = reducers.polys[k];
                let c = &terms[pos].1;
                let d = c.gcd(g.lc());
                let mut a = g.lc() / &d;
                let mut b = c / &d;
                if a.sign() == Sign::Minus {
                    a = -a;
                    b = -b;
                }
                terms = axpy_from(&terms, pos, &a, &b, &q, g, order);
                if !a.is_one() {
                    scale *= Rat::from_integer(a);
                }
                steps += 1;
                let lead_bits = terms.get(pos).map(|t| t.1.bits()).unwrap_or(0);
                if steps.is_multiple_of(16) || lead_bits > start_bits + 64 {
                    let tmp = IPoly { terms };
                    let g = tmp.content();
                    terms = tmp.terms;
                    if !g.is_zero() && !g.is_one() {
                        for (_, c) in terms.iter_mut() {
                            *c = &*c / &g;
                        }
                        scale /= Rat::from_integer(g);
                    }
                }
            }
            None => {
                if !full {
                    break;
                }
                pos += 1;
            }
        }
    }
    let mut r = IPoly { terms };
    let g = r.make_primitive();
    scale /= Rat::from_integer(g);
    (r, scale)
}

fn spoly(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).expect("lcm");
    let mg = g.lm().quotient_of(&l).expect("lcm");
    let d = f.lc().gcd(g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    let fm = IPoly { terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect() };
    let terms = axpy_from(&fm.terms, 0, &a, &b, &mg, g, order);
    IPoly { terms }
}

/// S-polynomial of two (integer, sorted) polynomials; exposed for criterion checks.
pub fn s_polynomial(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    spoly(f, g, order)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<IPoly>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (fi, fj) = (&self.polys[i], &self.polys[j]);
        let lcm = fi.lm().lcm(fj.lm());
        let si = self.sugar[i] + lcm.degree() - fi.lm().degree();
        let sj = self.sugar[j] + lcm.degree() - fj.lm().degree();
        Pair { i, j, lcm, sugar: si.max(sj) }
    }

    /// Gebauer-Möller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let lm_h = *self.polys[h].lm();
        let mut c: Vec<Pair> = self.active.iter().map(|&g| self.make_pair(h, g)).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = lm_h.is_coprime(self.polys[p.j].lm());
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        d.retain(|p| !lm_h.is_coprime(self.polys[p.j].lm()));
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lij = p.lcm;
            !(lm_h.divides(&lij)
                && polys[p.i].lm().lcm(&lm_h) != lij
                && polys[p.j].lm().lcm(&lm_h) != lij)
        });
        self.pairs.extend(d);
        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn select(&mut self, selection: Selection) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match selection {
                Selection::Normal => order.cmp(&a.lcm, &b.lcm).then(a.sugar.cmp(&b.sugar)),
                Selection::Sugar => a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)),
            }
            .then((a.i, a.j).cmp(&(b.i, b.j)));
            if better == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn add(&mut self, h: IPoly, sugar: u32) -> bool {
        let unit = h.is_constant();
        self.polys.push(h);
        self.sugar.push(sugar);
        let idx = self.polys.len() - 1;
        if unit {
            self.active = vec![idx];
            self.pairs.clear();
            return true;
        }
        self.update(idx);
        false
    }
}

/// Reduced Gröbner basis, elements primitive with positive leading
/// coefficient, sorted by increasing leading monomial.
pub fn groebner(mut gens: Vec<IPoly>, order: &MonomialOrder, selection: Selection) -> Vec<IPoly> {
    gens.retain(|g| !g.is_zero());
    if gens.is_empty() {
        return Vec::new();
    }
    // smaller inputs first keeps the initial reductions cheap and the run deterministic
    gens.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.terms.len().cmp(&b.terms.len())));
    let mut st = State { order, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens {
        let sugar = g.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        let (h, _) = {
            let reducers = Reducers::new(st.active.iter().map(|&k| &st.polys[k]));
            reduce(&g, &reducers, true, order, None)
        };
        if h.is_zero() {
            continue;
        }
        if st.add(h, sugar) {
            return vec![st.polys.pop().expect("unit")];
        }
    }
    while let Some(pair) = st.select(selection) {
        let s = spoly(&st.polys[pair.i], &st.polys[pair.j], order);
        let (h, _) = {
            let reducers = Reducers::new(st.active.iter().map(|&k| &st.polys[k]));
            reduce(&s, &reducers, true, order, None)
        };
        if h.is_zero() {
            continue;
        }
        if st.add(h, pair.sugar) {
            let unit = st.polys.pop().expect("unit");
            return vec![IPoly { terms: vec![(Monomial::one(unit.lm().len()), BigInt::one())] }];
        }
    }
    let mut basis: Vec<IPoly> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    interreduce(basis, order)
}

/// Tail-reduces a minimal basis so that no term is divisible by another
/// element's leading monomial.
pub fn interreduce(basis: Vec<IPoly>, order: &MonomialOrder) -> Vec<IPoly> {
    let mut out = Vec::with_capacity(basis.len());
    {
        let reducers = Reducers::new(basis.iter());
        for (k, g) in basis.iter().enumerate() {
            let head = IPoly { terms: vec![g.terms[0].clone()] };
            let tail = IPoly { terms: g.terms[1..].to_vec() };
            let (mut r, s) = if tail.is_zero() { (IPoly::zero(), Rat::one()) } else { reduce(&tail, &reducers, true, order, Some(k)) };
            // recombine: head*s_num + r*s_den... the tail remainder equals s*tail mod G,
            // so head + tail ≡ head + r/s; clear the denominator.
            let s_num = s.numer().clone();
            let s_den = s.denom().clone();
            let mut terms = vec![(head.terms[0].0, &head.terms[0].1 * &s_num)];
            for (m, c) in r.terms.drain(..) {
                terms.push((m, c * &s_den));
            }
            let mut p = IPoly { terms };
            p.make_primitive();
            out.push(p);
        }
    }
    out
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(basis: &[IPoly], order: &MonomialOrder) -> bool {
    let reducers = Reducers::new(basis.iter());
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = spoly(&basis[i], &basis[j], order);
            let (r, _) = reduce(&s, &reducers, true, order, None);
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}
