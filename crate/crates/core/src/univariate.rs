//! Dense univariate polynomials over the rationals: gcd, square-free
//! decomposition and exact rational roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, PolyError, Result};
use crate::poly::{rat_to_f64, Monomial, Polynomial, Rat, Var, VarSet};

/// Coefficients stored lowest degree first; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// From a highest-degree-first list, the usual control-engineering entry.
    pub fn from_descending(coeffs: &[Rat]) -> UniPoly {
        UniPoly::new(coeffs.iter().rev().cloned().collect())
    }

    pub fn from_i64_descending(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().rev().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly { coeffs: vec![Rat::one()] }
    }

    /// `s - r`
    pub fn linear_root(r: &Rat) -> UniPoly {
        UniPoly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<Rat> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap_or(0);
        let lc_inv = d.leading().expect("nonzero").recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: returns `(factor, multiplicity)` with square-free,
    /// pairwise coprime monic factors whose product (with powers) is the
    /// monic part of `self`.
    pub fn square_free_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.add(&b.derivative().scale(&-Rat::one()));
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, k));
            }
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            d = c.add(&b.derivative().scale(&-Rat::one()));
            k += 1;
        }
        out
    }

    /// Exact rational roots with multiplicity, sorted ascending.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        let mut roots = Vec::new();
        for (factor, mult) in self.square_free_decomposition() {
            for r in square_free_rational_roots(&factor) {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Integer coefficients with unit content, lowest degree first.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    pub fn to_polynomial(&self, vars: &VarSet, var: Var) -> Result<Polynomial, PolyError> {
        let i = vars.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.name().into()))?;
        let terms = self.coeffs.iter().enumerate().map(|(k, c)| {
            let mut m = Monomial::one(vars.len());
            m.set_exp(i, k as u16);
            (m, c.clone())
        });
        Ok(Polynomial::from_terms(vars, terms))
    }

    /// Reads a polynomial that involves at most `var`.
    pub fn from_polynomial(p: &Polynomial, var: Var) -> Result<UniPoly> {
        let i = p.varset().index_of(var);
        let mut coeffs: Vec<Rat> = Vec::new();
        for (m, c) in p.terms() {
            let k = match i {
                Some(i) => m.exp(i) as usize,
                None => 0,
            };
            if m.degree() as usize != k {
                return Err(AlgebraError::Numeric(format!("`{p}` is not univariate in {var}")));
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = VarSet::of(&[Var::X]);
        let p = self.to_polynomial(&vars, Var::X).map_err(|_| fmt::Error)?;
        f.write_str(&p.to_string().replace('x', "s"))
    }
}

const TRIAL_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > TRIAL_LIMIT {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = 1u64;
            for _ in 0..=e {
                next.push(d * pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Some(divs.into_iter().map(BigInt::from).collect())
}

fn square_free_rational_roots(f: &UniPoly) -> Vec<Rat> {
    let mut roots = Vec::new();
    let mut ints = f.primitive_integer();
    // zero roots
    let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rat::zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let reduced = UniPoly::new(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
    let a0 = ints[0].clone();
    let an = ints.last().expect("nonempty").clone();
    let found: Vec<Rat> = match (divisors(&a0), divisors(&an)) {
        (Some(ps), Some(qs)) => {
            let mut out = Vec::new();
            for q in &qs {
                for p in &ps {
                    if !p.gcd(q).is_one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let cand = Rat::new(p * BigInt::from(sign), q.clone());
                        if reduced.eval(&cand).is_zero() && !out.contains(&cand) {
                            out.push(cand);
                        }
                    }
                }
            }
            out
        }
        _ => numeric_candidates(&reduced, &an),
    };
    roots.extend(found);
    roots
}

/// Candidates from floating-point roots, each verified exactly.
fn numeric_candidates(f: &UniPoly, lead: &BigInt) -> Vec<Rat> {
    let mut out = Vec::new();
    let approx = match crate::numeric::roots_f64(&f.to_f64_coeffs()) {
        Ok(r) => r,
        Err(_) => return out,
    };
    let dens: Vec<BigInt> = divisors(lead).unwrap_or_else(|| vec![BigInt::one()]);
    for z in approx {
        if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            continue;
        }
        for q in &dens {
            let qf = q.to_f64().unwrap_or(f64::INFINITY);
            let pf = (z.re * qf).round();
            if !pf.is_finite() {
                continue;
            }
            let Some(p) = num_bigint::BigInt::from_f64(pf) else { continue };
            let cand = Rat::new(p, q.clone());
            if f.eval(&cand).is_zero() && !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

use num_traits::FromPrimitive;
