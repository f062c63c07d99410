//! Ideals, reduced Gröbner bases and the operations built on them:
//! normal forms, membership, elimination, intersection and equality.

pub mod engine;

use crate::error::{AlgebraError, Result};
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Rat, Var, VarSet};

pub use engine::Selection;
use engine::{IPoly, Reducers};

/// A finite generating set. The zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    vars: VarSet,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.varset() != vars {
                return Err(crate::error::PolyError::VarsetMismatch {
                    left: vars.to_string(),
                    right: g.varset().to_string(),
                }
                .into());
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal { vars: vars.clone(), gens: out })
    }

    pub fn parse(vars: &VarSet, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| Polynomial::parse(s, vars)).collect::<std::result::Result<Vec<_>, _>>()?;
        Ideal::new(vars, polys)
    }

    pub fn unit(vars: &VarSet) -> Ideal {
        Ideal { vars: vars.clone(), gens: vec![Polynomial::one(vars)] }
    }

    pub fn varset(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// `self + <extra>`.
    pub fn with_generator(&self, extra: Polynomial) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(extra);
        Ideal::new(&self.vars, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.vars, gens)
    }

    pub fn to_varset(&self, target: &VarSet) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_varset(target)).collect::<std::result::Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }
}

/// Reduced Gröbner basis. Elements are integer-primitive with positive
/// leading coefficient and sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: VarSet,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    internal: Vec<IPoly>,
}

impl GroebnerBasis {
    pub fn varset(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { vars: self.vars.clone(), gens: self.elements.clone() }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form(p, self)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Post-hoc Buchberger criterion check.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        engine::is_groebner(&self.internal, &self.order)
    }

    /// Reducedness: no term of an element is divisible by another leading monomial.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.internal.iter().enumerate() {
            for (j, h) in self.internal.iter().enumerate() {
                if i != j && g.terms.iter().any(|(m, _)| h.lm().divides(m)) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GbOptions {
    pub selection: Selection,
}

pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    buchberger_with(ideal, order, GbOptions::default())
}

pub fn buchberger_with(ideal: &Ideal, order: MonomialOrder, opts: GbOptions) -> GroebnerBasis {
    let gens: Vec<IPoly> = ideal.gens.iter().map(|g| IPoly::from_rat_terms(g.terms(), &order).0).collect();
    let internal = engine::groebner(gens, &order, opts.selection);
    let elements = internal.iter().map(|g| Polynomial::from_terms(&ideal.vars, g.to_rat_terms())).collect();
    GroebnerBasis { vars: ideal.vars.clone(), order, elements, internal }
}

/// Remainder of `p` on division by `gb`; zero iff `p` lies in the ideal.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if p.varset() != &gb.vars {
        return Err(crate::error::PolyError::VarsetMismatch { left: p.varset().to_string(), right: gb.vars.to_string() }.into());
    }
    if p.is_zero() {
        return Ok(p.clone());
    }
    let (ip, content) = IPoly::from_rat_terms(p.terms(), &gb.order);
    let reducers = Reducers::new(gb.internal.iter());
    let (r, scale) = engine::reduce(&ip, &reducers, true, &gb.order, None);
    // r ≡ scale * ip and p = content * ip
    let factor: Rat = content / scale;
    Ok(Polynomial::from_terms(p.varset(), r.to_rat_terms()).scale(&factor))
}

pub fn contains(ideal: &Ideal, p: &Polynomial) -> Result<bool> {
    buchberger(ideal, MonomialOrder::GrevLex).contains(p)
}

/// `I ⊆ J` checked generator-wise against a basis of `J`.
pub fn is_subideal(small: &Ideal, big_gb: &GroebnerBasis) -> Result<bool> {
    for g in small.generators() {
        if !big_gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal, order: MonomialOrder) -> Result<bool> {
    if a.vars != b.vars {
        return Err(crate::error::PolyError::VarsetMismatch { left: a.vars.to_string(), right: b.vars.to_string() }.into());
    }
    Ok(buchberger(a, order).elements == buchberger(b, order).elements)
}

/// Generators of `I ∩ k[kept variables]`, computed with a block order whose
/// front block holds `elim`. The result lives in the varset with `elim`
/// removed. Uses sugar selection, which is far cheaper under block orders.
pub fn eliminate(ideal: &Ideal, elim: &[Var]) -> Result<Ideal> {
    eliminate_with(ideal, elim, GbOptions { selection: Selection::Sugar })
}

pub fn eliminate_with(ideal: &Ideal, elim: &[Var], opts: GbOptions) -> Result<Ideal> {
    let vars = ideal.varset();
    let front: Vec<Var> = vars.vars().iter().copied().filter(|v| elim.contains(v)).collect();
    let kept = vars.without(elim);
    let mut order_vars = front.clone();
    order_vars.extend(kept.vars().iter().copied());
    let work = VarSet::new(&order_vars)?;
    let moved = ideal.to_varset(&work)?;
    let gb = buchberger_with(&moved, MonomialOrder::elimination(front.len()), opts);
    let gens = gb
        .elements
        .iter()
        .filter(|g| g.is_free_of(&front))
        .map(|g| g.to_varset(&kept))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ideal::new(&kept, gens)
}

/// `I ∩ J` via elimination of a tag variable from `t*I + (1-t)*J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.vars != b.vars {
        return Err(crate::error::PolyError::VarsetMismatch { left: a.vars.to_string(), right: b.vars.to_string() }.into());
    }
    if a.vars.contains(Var::T) {
        return Err(AlgebraError::TagVariableInUse(Var::T));
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(&a.vars, Vec::new());
    }
    let tagged = a.vars.with_inserted(0, Var::T)?;
    let t = Polynomial::var(&tagged, Var::T)?;
    let one_minus_t = &Polynomial::one(&tagged) - &t;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&t * &g.to_varset(&tagged)?);
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &g.to_varset(&tagged)?);
    }
    let joined = Ideal::new(&tagged, gens)?;
    let out = eliminate(&joined, &[Var::T])?;
    out.to_varset(&a.vars)
}

/// Normalized S-polynomial, for tests and diagnostics.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fi, _) = IPoly::from_rat_terms(f.terms(), &order);
    let (gi, _) = IPoly::from_rat_terms(g.terms(), &order);
    let s = engine::s_polynomial(&fi, &gi, &order);
    Polynomial::from_terms(f.varset(), s.to_rat_terms())
}

/// Scales `p` so that coefficients are coprime integers with positive
/// leading coefficient under `order`.
pub fn normalize(p: &Polynomial, order: &MonomialOrder) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    p.primitive(order)
}

#[cfg(test)]
mod tests;
