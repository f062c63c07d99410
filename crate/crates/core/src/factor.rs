//! Partial factorization over the rationals, enough to split root-locus
//! ideals: monomial content, gcd of coefficients with respect to a single
//! variable, and a search for rational linear factors.

use crate::error::{AlgebraError, PolyError, Result};
use crate::groebner::{buchberger, intersect, Ideal};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rat, Var, VarSet};
use crate::univariate::UniPoly;

/// Total degree above which the linear-factor search is skipped.
pub const MAX_SEARCH_DEGREE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// Primitive, positive leading coefficient under grevlex.
    pub poly: Polynomial,
    pub multiplicity: u32,
    /// Proven irreducible over the rationals. When false the factor may
    /// still split.
    pub irreducible: bool,
}

/// Factors whose product is `p` up to a rational scalar. Monomial content
/// comes out as one entry per variable occurrence.
pub fn factor_generator(p: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for f in factorize(p)? {
        for _ in 0..f.multiplicity {
            out.push(f.poly.clone());
        }
    }
    Ok(out)
}

/// Distinct factors with multiplicity, sorted by their printed form.
pub fn factorize(p: &Polynomial) -> Result<Vec<Factor>> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let mut raw: Vec<(Polynomial, bool)> = Vec::new();
    let content = p.monomial_content()?;
    let vars = p.varset().clone();
    for (i, &v) in vars.vars().iter().enumerate() {
        for _ in 0..content.exp(i) {
            raw.push((Polynomial::var(&vars, v)?, true));
        }
    }
    let rest = p.div_monomial(&content).expect("content divides every term");
    if !rest.is_constant() {
        split(&normalize(&rest), &mut raw)?;
    }

    let mut out: Vec<Factor> = Vec::new();
    for (f, irr) in raw {
        match out.iter_mut().find(|g| g.poly == f) {
            Some(g) => {
                g.multiplicity += 1;
                g.irreducible &= irr;
            }
            None => out.push(Factor { poly: f, multiplicity: 1, irreducible: irr }),
        }
    }
    out.sort_by_key(|f| f.poly.to_string());
    Ok(out)
}

fn normalize(p: &Polynomial) -> Polynomial {
    p.primitive(&MonomialOrder::GrevLex)
}

// `p` is content-free, primitive and non-constant.
fn split(p: &Polynomial, out: &mut Vec<(Polynomial, bool)>) -> Result<()> {
    if p.total_degree().unwrap_or(0) <= 1 {
        out.push((p.clone(), true));
        return Ok(());
    }
    let mut vars = p.support();
    vars.sort_by_key(|v| p.degree_in(&[*v]));
    for v in vars {
        if let Some(g) = coefficient_gcd(p, v)? {
            let q = div_exact(p, &g).ok_or_else(|| AlgebraError::Numeric(format!("gcd `{g}` does not divide `{p}`")))?;
            split(&normalize(&g), out)?;
            split(&normalize(&q), out)?;
            return Ok(());
        }
        if p.degree_in(&[v]) == 1 {
            // primitive and of degree one in v
            out.push((p.clone(), true));
            return Ok(());
        }
    }
    let deg = p.total_degree().unwrap_or(0);
    match linear_factor(p)? {
        Some(a) => {
            let q = div_exact(p, &a).ok_or_else(|| AlgebraError::Numeric(format!("`{a}` does not divide `{p}`")))?;
            out.push((normalize(&a), true));
            split(&normalize(&q), out)
        }
        None => {
            let searched = deg <= MAX_SEARCH_DEGREE && fits_search(p);
            out.push((p.clone(), searched && deg <= 3));
            Ok(())
        }
    }
}

/// Exact quotient `p / d`, or `None` when `d` does not divide `p`.
pub fn div_exact(p: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    let order = MonomialOrder::GrevLex;
    let (ld, lc) = d.leading_term(&order)?.clone();
    let mut r = p.clone();
    let mut q = Polynomial::zero(p.varset());
    while let Some((lm, c)) = r.leading_term(&order).cloned() {
        let m = ld.quotient_of(&lm)?;
        let coef = c / &lc;
        q = &q + &Polynomial::monomial(p.varset(), m, coef.clone());
        r = &r - &d.mul_monomial(&m).scale(&coef);
    }
    Some(q)
}

/// Coefficients of `p` as a polynomial in `v`, keyed by the power of `v`.
fn coefficients_in(p: &Polynomial, v: Var) -> Vec<Polynomial> {
    let vars = p.varset();
    let i = vars.index_of(v).expect("variable in varset");
    let top = p.degree_in(&[v]) as usize;
    let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); top + 1];
    for (m, c) in p.terms() {
        let mut r = *m;
        r.set_exp(i, 0);
        buckets[m.exp(i) as usize].push((r, c.clone()));
    }
    buckets.into_iter().filter(|b| !b.is_empty()).map(|b| Polynomial::from_terms(vars, b)).collect()
}

/// A non-constant gcd of the coefficients of `p` with respect to `v`.
fn coefficient_gcd(p: &Polynomial, v: Var) -> Result<Option<Polynomial>> {
    let mut coeffs = coefficients_in(p, v);
    if coeffs.len() < 2 || coeffs.iter().any(|c| c.num_terms() == 1) {
        // a single-term coefficient forces a monomial gcd, and p has no monomial content
        return Ok(None);
    }
    coeffs.sort_by_key(|c| (c.total_degree(), c.num_terms()));
    let mut g = coeffs[0].clone();
    for c in &coeffs[1..] {
        g = gcd(&g, c)?;
        if g.is_constant() {
            return Ok(None);
        }
    }
    Ok(Some(g))
}

/// Variables renamed onto the front of the universe so spare slots are free.
struct Compact {
    original: VarSet,
    ring: VarSet,
    to: Vec<(Var, Var)>,
    back: Vec<(Var, Var)>,
}

impl Compact {
    fn new(original: &VarSet, support: &[Var], extra: usize) -> Option<Compact> {
        let n = support.len();
        if n + extra > Var::ALL.len() {
            return None;
        }
        let ring = VarSet::of(&Var::ALL[..n + extra]);
        let to = support.iter().zip(Var::ALL.iter()).map(|(a, b)| (*a, *b)).collect();
        let back = Var::ALL.iter().zip(support.iter()).map(|(a, b)| (*a, *b)).collect();
        Some(Compact { original: original.clone(), ring, to, back })
    }

    fn forward(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(p.rename(&self.to, &self.ring)?)
    }

    fn backward(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(p.rename(&self.back, &self.original)?)
    }
}

fn union_support(a: &Polynomial, b: &Polynomial) -> Vec<Var> {
    let mut s = a.support();
    for v in b.support() {
        if !s.contains(&v) {
            s.push(v);
        }
    }
    s.sort();
    s
}

/// Multivariate gcd through `<a> ∩ <b> = <lcm(a, b)>`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let vars = a.varset();
    if a.is_zero() {
        return Ok(normalize(b));
    }
    if b.is_zero() {
        return Ok(normalize(a));
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(vars));
    }
    let support = union_support(a, b);
    // the tag variable must stay free for the intersection
    let c = Compact::new(vars, &support, 0)
        .filter(|c| !c.ring.contains(Var::T))
        .ok_or_else(|| AlgebraError::Numeric("too many variables for gcd".into()))?;
    let (ca, cb) = (c.forward(a)?, c.forward(b)?);
    let l = intersect(&Ideal::new(&c.ring, vec![ca.clone()])?, &Ideal::new(&c.ring, vec![cb.clone()])?)?;
    let gb = buchberger(&l, MonomialOrder::GrevLex);
    let lcm = match gb.elements() {
        [one] => one.clone(),
        other => return Err(AlgebraError::Numeric(format!("principal intersection with {} generators", other.len()))),
    };
    let g = div_exact(&(&ca * &cb), &lcm).ok_or_else(|| AlgebraError::Numeric("lcm does not divide the product".into()))?;
    Ok(normalize(&c.backward(&g)?))
}

fn search_size(p: &Polynomial) -> usize {
    p.support().len() + usize::from(!p.is_homogeneous())
}

fn fits_search(p: &Polynomial) -> bool {
    let n = search_size(p);
    2 * n - 1 <= Var::ALL.len()
}

/// x-exponents with the c-monomial terms sharing them.
type TermGroup = (Vec<u16>, Vec<(Monomial, Rat)>);

/// A rational linear factor `a` of `p` (degree one, possibly with constant
/// term), found by undetermined coefficients.
pub fn linear_factor(p: &Polynomial) -> Result<Option<Polynomial>> {
    let deg = p.total_degree().unwrap_or(0);
    if deg <= 1 || deg > MAX_SEARCH_DEGREE || !fits_search(p) {
        return Ok(None);
    }
    let homogeneous = p.is_homogeneous();
    let support = p.support();
    let n = search_size(p);
    let compact = Compact::new(p.varset(), &support, 2 * n - 1 - support.len()).expect("fits");
    let ring = compact.ring.clone();
    let xs: Vec<Var> = Var::ALL[..n].to_vec();
    // c_i lives in slot n + i - 1, paired with x_i for i >= 1
    let cvar = |i: usize| Var::ALL[n + i - 1];
    let mut big = compact.forward(p)?;
    if !homogeneous {
        big = big.homogenize(xs[n - 1])?;
    }

    for j in 0..n - 1 {
        let mut tail = Polynomial::zero(&ring);
        for (i, &x) in xs.iter().enumerate().skip(j + 1) {
            let term = &Polynomial::var(&ring, cvar(i))? * &Polynomial::var(&ring, x)?;
            tail = &tail + &term;
        }
        let restricted = big.substitute(xs[j], &-&tail)?;
        // coefficients of the x-monomials are the equations in the c's
        let x_slots: Vec<usize> = (0..n).collect();
        let mut groups: Vec<TermGroup> = Vec::new();
        for (m, c) in restricted.terms() {
            let key: Vec<u16> = x_slots.iter().map(|&k| m.exp(k)).collect();
            let mut cm = *m;
            for &k in &x_slots {
                cm.set_exp(k, 0);
            }
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, t)) => t.push((cm, c.clone())),
                None => groups.push((key, vec![(cm, c.clone())])),
            }
        }
        let eqs: Vec<Polynomial> = groups.into_iter().map(|(_, t)| Polynomial::from_terms(&ring, t)).collect();
        let unknowns: Vec<Var> = (j + 1..n).map(cvar).collect();
        if let Some(sol) = rational_solution(eqs, &unknowns)? {
            let mut a = Polynomial::var(&ring, xs[j])?;
            for (i, &x) in xs.iter().enumerate().skip(j + 1) {
                let c = sol.iter().find(|(v, _)| *v == cvar(i)).map(|(_, r)| r.clone()).expect("solved");
                a = &a + &Polynomial::var(&ring, x)?.scale(&c);
            }
            if !homogeneous {
                a = a.dehomogenize(xs[n - 1])?;
            }
            if a.is_constant() {
                continue;
            }
            let a = compact.backward(&a)?;
            return Ok(Some(normalize(&a)));
        }
    }
    Ok(None)
}

/// One rational solution of a zero-dimensional system, or `None`.
fn rational_solution(eqs: Vec<Polynomial>, unknowns: &[Var]) -> Result<Option<Vec<(Var, Rat)>>> {
    let eqs: Vec<Polynomial> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
    if eqs.iter().any(Polynomial::is_constant) {
        return Ok(None);
    }
    if unknowns.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let univariate = |e: &Polynomial| {
        let s = e.support();
        (s.len() == 1 && unknowns.contains(&s[0])).then_some(s[0])
    };
    let (var, poly) = match eqs.iter().find_map(|e| univariate(e).map(|v| (v, e.clone()))) {
        Some(found) => found,
        None => {
            let vars = eqs[0].varset().clone();
            let gb = buchberger(&Ideal::new(&vars, eqs.clone())?, MonomialOrder::Lex);
            if gb.is_unit() {
                return Ok(None);
            }
            let last = *unknowns.last().expect("nonempty");
            match gb.elements().iter().find(|e| e.support() == [last]) {
                Some(e) => (last, e.clone()),
                // not zero-dimensional; only possible for p = 0
                None => return Ok(None),
            }
        }
    };
    let uni = UniPoly::from_polynomial(&poly, var)?;
    let rest: Vec<Var> = unknowns.iter().copied().filter(|v| *v != var).collect();
    for (r, _) in uni.rational_roots() {
        let sub = eqs.iter().map(|e| e.substitute_value(var, &r)).collect::<std::result::Result<Vec<_>, _>>()?;
        if let Some(mut sol) = rational_solution(sub, &rest)? {
            sol.push((var, r));
            return Ok(Some(sol));
        }
    }
    Ok(None)
}
