//! Exact sparse multivariate polynomials over the rationals.
//!
//! Variables come from a small fixed universe (see [`Var`]); a [`VarSet`]
//! picks an ordered subset of it and every [`Polynomial`] carries the set it
//! lives in. Exponent vectors are dense (one slot per variable of the set),
//! term maps are sparse.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::order::MonomialOrder;

/// Exact rational coefficient.
pub type Rat = BigRational;

/// Upper bound on the number of variables a polynomial may carry.
pub const MAX_VARS: usize = 10;

/// The fixed variable universe.
///
/// `L` is the tangent-line multiplier used by the dual-curve construction and
/// `T` the tag variable used by ideal intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    Kd,
    Kn,
    U,
    V,
    W,
    L,
    T,
}

impl Var {
    pub const ALL: [Var; MAX_VARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::Kd,
        Var::Kn,
        Var::U,
        Var::V,
        Var::W,
        Var::L,
        Var::T,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Kd => "kd",
            Var::Kn => "kn",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::L => "l",
            Var::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ordered list of distinct variables. The listing order is the variable
/// precedence used by monomial orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[Var]>);

impl VarSet {
    pub fn new(vars: &[Var]) -> Result<VarSet, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(*v));
            }
        }
        Ok(VarSet(vars.into()))
    }

    /// Like [`VarSet::new`] for literal lists known to be duplicate free.
    pub fn of(vars: &[Var]) -> VarSet {
        VarSet::new(vars).expect("duplicate variable in literal varset")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn index_of(&self, var: Var) -> Option<usize> {
        self.0.iter().position(|&v| v == var)
    }

    pub fn contains(&self, var: Var) -> bool {
        self.index_of(var).is_some()
    }

    /// A new set with `var` inserted at `pos`.
    pub fn with_inserted(&self, pos: usize, var: Var) -> Result<VarSet, PolyError> {
        let mut vars = self.0.to_vec();
        vars.insert(pos.min(vars.len()), var);
        VarSet::new(&vars)
    }

    /// A new set with the given variables removed.
    pub fn without(&self, drop: &[Var]) -> VarSet {
        let vars: Vec<Var> = self.0.iter().copied().filter(|v| !drop.contains(v)).collect();
        VarSet(vars.into())
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|v| v.name()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Exponent vector; slot `i` belongs to variable `i` of the owning varset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
}

impl Monomial {
    pub fn one(len: usize) -> Monomial {
        assert!(len <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], len: len as u8 }
    }

    pub fn var(len: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(len);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    pub fn exp(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn set_exp(&mut self, index: usize, e: u16) {
        self.exps[index] = e;
    }

    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents().iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.len() {
            m.exps[i] += other.exps[i];
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.len()).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.len() {
            m.exps[i] -= self.exps[i];
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.len() {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.len() {
            m.exps[i] = m.exps[i].min(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.len()).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by exponent vector (lexicographic over the varset
/// order) with no zero coefficients, so structural equality is ideal-free
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VarSet,
    terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Polynomial {
        Polynomial { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn one(vars: &VarSet) -> Polynomial {
        Polynomial::constant(vars, Rat::one())
    }

    pub fn var(vars: &VarSet, var: Var) -> Result<Polynomial, PolyError> {
        let i = vars.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.name().into()))?;
        Ok(Polynomial { vars: vars.clone(), terms: vec![(Monomial::var(vars.len(), i), Rat::one())] })
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Rat) -> Polynomial {
        assert_eq!(m.len(), vars.len());
        Polynomial::from_terms(vars, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), vars.len());
            if c.is_zero() {
                continue;
            }
            let slot = acc.entry(m).or_insert_with(Rat::zero);
            *slot += c;
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { vars: vars.clone(), terms }
    }

    pub fn parse(text: &str, vars: &VarSet) -> Result<Polynomial, PolyError> {
        crate::parse::parse(text, vars)
    }

    pub fn varset(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in the given subset of variables.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        let idx: Vec<usize> = vars.iter().filter_map(|&v| self.vars.index_of(v)).collect();
        self.terms
            .iter()
            .map(|(m, _)| idx.iter().map(|&i| m.exp(i) as u32).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneity with respect to a subset of variables only.
    pub fn is_homogeneous_in(&self, vars: &[Var]) -> bool {
        let idx: Vec<usize> = vars.iter().filter_map(|&v| self.vars.index_of(v)).collect();
        let mut degs = self.terms.iter().map(|(m, _)| idx.iter().map(|&i| m.exp(i) as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn uses(&self, var: Var) -> bool {
        match self.vars.index_of(var) {
            Some(i) => self.terms.iter().any(|(m, _)| m.exp(i) > 0),
            None => false,
        }
    }

    pub fn is_free_of(&self, vars: &[Var]) -> bool {
        vars.iter().all(|&v| !self.uses(v))
    }

    /// Variables that actually occur, in varset order.
    pub fn support(&self) -> Vec<Var> {
        self.vars.vars().iter().copied().filter(|&v| self.uses(v)).collect()
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarsetMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { vars: self.vars.clone(), terms: out }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect::<Vec<_>>();
        // multiplication by a monomial preserves the lexicographic term order
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: Var) -> Result<Polynomial, PolyError> {
        let i = self.vars.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.name().into()))?;
        let terms = self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let mut d = *m;
            let e = m.exp(i);
            d.set_exp(i, e - 1);
            (d, c * Rat::from_integer(BigInt::from(e)))
        });
        Ok(Polynomial::from_terms(&self.vars, terms))
    }

    /// Multiplies each term by the power of `hvar` that lifts it to the total degree.
    pub fn homogenize(&self, hvar: Var) -> Result<Polynomial, PolyError> {
        let i = self.vars.index_of(hvar).ok_or_else(|| PolyError::UnknownVariable(hvar.name().into()))?;
        if self.uses(hvar) {
            return Err(PolyError::HomogenizingVariableOccurs(hvar));
        }
        let d = self.total_degree().unwrap_or(0);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut h = *m;
            h.set_exp(i, (d - m.degree()) as u16);
            (h, c.clone())
        });
        Ok(Polynomial::from_terms(&self.vars, terms))
    }

    /// Sets `hvar = 1`.
    pub fn dehomogenize(&self, hvar: Var) -> Result<Polynomial, PolyError> {
        self.substitute_value(hvar, &Rat::one())
    }

    pub fn substitute_value(&self, var: Var, value: &Rat) -> Result<Polynomial, PolyError> {
        let i = self.vars.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.name().into()))?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut r = *m;
            let e = m.exp(i);
            r.set_exp(i, 0);
            (r, c * rat_pow(value, e as u32))
        });
        Ok(Polynomial::from_terms(&self.vars, terms))
    }

    /// Replaces `var` by the polynomial `value` (same varset).
    pub fn substitute(&self, var: Var, value: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(value)?;
        let i = self.vars.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.name().into()))?;
        let max_e = self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0);
        let mut powers = vec![Polynomial::one(&self.vars)];
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut acc = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut r = *m;
            r.set_exp(i, 0);
            let piece = powers[m.exp(i) as usize].mul_monomial(&r).scale(c);
            acc = &acc + &piece;
        }
        Ok(acc)
    }

    /// Component-wise minimum of all exponent vectors.
    pub fn monomial_content(&self) -> Result<Monomial, PolyError> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?.0;
        Ok(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((m.quotient_of(t)?, c.clone()));
        }
        Some(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn evaluate(&self, assignment: &dyn Fn(Var) -> Option<Rat>) -> Result<Rat, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, &v) in self.vars.vars().iter().enumerate() {
            let used = self.terms.iter().any(|(m, _)| m.exp(i) > 0);
            values.push(match assignment(v) {
                Some(x) => x,
                None if used => return Err(PolyError::MissingVariable(v)),
                None => Rat::zero(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in values.iter().enumerate() {
                if m.exp(i) > 0 {
                    t *= rat_pow(x, m.exp(i) as u32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn evaluate_map(&self, assignment: &[(Var, Rat)]) -> Result<Rat, PolyError> {
        self.evaluate(&|v| assignment.iter().find(|(w, _)| *w == v).map(|(_, x)| x.clone()))
    }

    /// Floating-point evaluation; variables absent from `assignment` read as zero.
    pub fn evaluate_f64(&self, assignment: &dyn Fn(Var) -> f64) -> f64 {
        let values: Vec<f64> = self.vars.vars().iter().map(|&v| assignment(v)).collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = rat_to_f64(c);
                for (i, x) in values.iter().enumerate() {
                    if m.exp(i) > 0 {
                        t *= x.powi(m.exp(i) as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Re-expresses the polynomial over another varset. Fails if a variable in
    /// use is missing from the target.
    pub fn to_varset(&self, target: &VarSet) -> Result<Polynomial, PolyError> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, &v) in self.vars.vars().iter().enumerate() {
            let j = target.index_of(v);
            if j.is_none() && self.terms.iter().any(|(m, _)| m.exp(i) > 0) {
                return Err(PolyError::UnknownVariable(v.name().into()));
            }
            map.push(j);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut r = Monomial::one(target.len());
            for (i, j) in map.iter().enumerate() {
                if let Some(j) = j {
                    r.set_exp(*j, m.exp(i));
                }
            }
            (r, c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Renames variables (a bijection between the old and new names).
    pub fn rename(&self, mapping: &[(Var, Var)], target: &VarSet) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, &v) in self.vars.vars().iter().enumerate() {
            let to = mapping.iter().find(|(a, _)| *a == v).map(|(_, b)| *b).unwrap_or(v);
            let j = target.index_of(to);
            if j.is_none() && self.terms.iter().any(|(m, _)| m.exp(i) > 0) {
                return Err(PolyError::UnknownVariable(to.name().into()));
            }
            map.push(j);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut r = Monomial::one(target.len());
            for (i, j) in map.iter().enumerate() {
                if let Some(j) = j {
                    r.set_exp(*j, r.exp(*j) + m.exp(i));
                }
            }
            (r, c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&(Monomial, Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// The unique rational multiple with coprime integer coefficients and a
    /// positive leading coefficient under `order`.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        let Some((_, lc)) = self.leading_term(order) else {
            return self.clone();
        };
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = Rat::new(den_lcm, num_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Formats with terms in descending `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &v) in self.vars.vars().iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::GrevLex))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial varset mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial varset mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial varset mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }
}

pub fn rat_pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

pub fn rat_to_f64(c: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        // very large numerators/denominators: scale through the bit lengths
        let n = c.numer();
        let d = c.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(900) as usize;
        let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
        nf / df
    })
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `a` or `a/b`.
pub fn format_rat(c: &Rat) -> String {
    c.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Syntax { pos: 0, msg: format!("invalid rational `{s}`") };
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().map_err(|_| bad())?;
            let d: BigInt = b.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            if let Some((int, frac)) = s.split_once('.') {
                let digits = format!("{int}{frac}");
                let n: BigInt = digits.parse().map_err(|_| bad())?;
                let d = num_traits::pow(BigInt::from(10), frac.len());
                return Ok(Rat::new(n, d));
            }
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}
