//! Real projective points of zero-dimensional specializations, found slice by
//! slice with lex bases and exact rational roots.

use std::fmt;

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, Ideal};
use crate::numeric::roots_f64;
use crate::order::MonomialOrder;
use crate::poly::{rat_to_f64, Polynomial, Rat, Var, VarSet};
use crate::univariate::UniPoly;

/// A coordinate value; approximate values come from irrational roots.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rat),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rat_to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    fn is_zero(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_zero(),
            Value::Approx(x) => x.abs() < 1e-12,
        }
    }

    fn div(&self, d: &Value) -> Value {
        match (self, d) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a / b),
            _ => Value::Approx(self.to_f64() / d.to_f64()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "~{x}"),
        }
    }
}

/// `(a : b : c)`, scaled so that the last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    coords: [Value; 3],
}

impl ProjectivePoint {
    pub fn new(a: Value, b: Value, c: Value) -> Result<ProjectivePoint> {
        let coords = [a, b, c];
        let pivot = coords
            .iter()
            .rposition(|v| !v.is_zero())
            .ok_or_else(|| AlgebraError::Numeric("(0:0:0) is not a projective point".into()))?;
        let d = coords[pivot].clone();
        let mut out: [Value; 3] = coords.map(|v| if v.is_zero() { Value::Exact(Rat::zero()) } else { v.div(&d) });
        out[pivot] = Value::Exact(Rat::from_integer(1.into()));
        Ok(ProjectivePoint { coords: out })
    }

    pub fn exact(a: Rat, b: Rat, c: Rat) -> Result<ProjectivePoint> {
        ProjectivePoint::new(Value::Exact(a), Value::Exact(b), Value::Exact(c))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> ProjectivePoint {
        let r = |n: i64| Rat::from_integer(n.into());
        ProjectivePoint::exact(r(a), r(b), r(c)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Value; 3] {
        &self.coords
    }

    pub fn is_exact(&self) -> bool {
        self.coords.iter().all(Value::is_exact)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.coords[0].to_f64(), self.coords[1].to_f64(), self.coords[2].to_f64()]
    }

    /// Equality up to scale, with a tolerance for approximate coordinates.
    pub fn same_as(&self, other: &ProjectivePoint) -> bool {
        if self.is_exact() && other.is_exact() {
            return self == other;
        }
        let (a, b) = (self.to_f64(), other.to_f64());
        a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= 1e-7 * (1.0 + x.abs().max(y.abs())))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedPoint {
    pub point: ProjectivePoint,
    /// Product of root multiplicities along the triangular solve.
    pub multiplicity: usize,
}

/// Points found on every slice, plus slices that could not be solved.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PointSet {
    pub points: Vec<ClassifiedPoint>,
    pub issues: Vec<String>,
}

impl PointSet {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.iter().any(|c| c.point.same_as(p))
    }

    fn push(&mut self, point: ProjectivePoint, multiplicity: usize) {
        if !self.contains(&point) {
            self.points.push(ClassifiedPoint { point, multiplicity });
        }
    }
}

#[derive(Debug, Clone)]
struct Solution {
    values: Vec<(Var, Value)>,
    multiplicity: usize,
}

fn real_approx_roots(p: &UniPoly) -> Result<Vec<f64>> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for z in roots_f64(&p.to_f64_coeffs())? {
        if z.im.abs() <= 1e-9 * (1.0 + z.re.abs()) {
            out.push(z.re);
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Real solutions of a system in `unknowns` (eliminated from the last one
/// backwards). Irrational roots are carried approximately.
fn solve_real(eqs: &[Polynomial], unknowns: &[Var], slice: &str) -> Result<Vec<Solution>> {
    let eqs: Vec<Polynomial> = eqs.iter().filter(|e| !e.is_zero()).cloned().collect();
    if eqs.iter().any(Polynomial::is_constant) {
        return Ok(Vec::new());
    }
    if unknowns.is_empty() {
        return Ok(vec![Solution { values: Vec::new(), multiplicity: 1 }]);
    }
    let vars = VarSet::new(unknowns)?;
    let moved = eqs.iter().map(|e| e.to_varset(&vars)).collect::<std::result::Result<Vec<_>, _>>()?;
    if moved.is_empty() {
        return Err(AlgebraError::NotZeroDimensional(slice.into()));
    }
    let gb = buchberger(&Ideal::new(&vars, moved)?, MonomialOrder::Lex);
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let last = *unknowns.last().expect("nonempty");
    let uni = gb
        .elements()
        .iter()
        .find(|e| e.is_free_of(&unknowns[..unknowns.len() - 1]))
        .ok_or_else(|| AlgebraError::NotZeroDimensional(slice.into()))?;
    let q = UniPoly::from_polynomial(uni, last)?;
    let rest = &unknowns[..unknowns.len() - 1];
    let mut out = Vec::new();
    for (factor, mult) in q.square_free_decomposition() {
        let mut remaining = factor;
        for (r, _) in remaining.rational_roots() {
            remaining = remaining.div_rem(&UniPoly::linear_root(&r)).0;
            let sub = gb.elements().iter().map(|e| e.substitute_value(last, &r)).collect::<std::result::Result<Vec<_>, _>>()?;
            for mut s in solve_real(&sub, rest, slice)? {
                s.values.push((last, Value::Exact(r.clone())));
                s.multiplicity *= mult;
                out.push(s);
            }
        }
        for x in real_approx_roots(&remaining)? {
            for mut s in solve_numeric(gb.elements(), rest, last, x, slice)? {
                s.values.push((last, Value::Approx(x)));
                s.multiplicity *= mult;
                out.push(s);
            }
        }
    }
    Ok(out)
}

// Back-substitution of an approximate root; supports one remaining unknown.
fn solve_numeric(basis: &[Polynomial], rest: &[Var], last: Var, x: f64, slice: &str) -> Result<Vec<Solution>> {
    match rest {
        [] => Ok(vec![Solution { values: Vec::new(), multiplicity: 1 }]),
        [next] => {
            // univariate-in-next polynomials with f64 coefficients
            let mut candidates: Vec<(usize, Vec<f64>)> = Vec::new();
            for e in basis {
                let i = e.varset().index_of(*next).expect("unknown in varset");
                let j = e.varset().index_of(last).expect("unknown in varset");
                let deg = e.degree_in(&[*next]) as usize;
                let mut c = vec![0.0; deg + 1];
                for (m, k) in e.terms() {
                    c[m.exp(i) as usize] += rat_to_f64(k) * x.powi(m.exp(j) as i32);
                }
                let scale = c.iter().fold(1.0f64, |a, v| a.max(v.abs()));
                while c.len() > 1 && c.last().is_some_and(|v| v.abs() <= 1e-10 * scale) {
                    c.pop();
                }
                if c.len() > 1 {
                    candidates.push((c.len() - 1, c));
                }
            }
            candidates.sort_by_key(|c| c.0);
            let Some((_, coeffs)) = candidates.first() else {
                return Err(AlgebraError::NotZeroDimensional(slice.into()));
            };
            let mut out = Vec::new();
            for z in roots_f64(coeffs)? {
                if z.im.abs() > 1e-9 * (1.0 + z.re.abs()) {
                    continue;
                }
                let t = z.re;
                let ok = basis.iter().all(|e| crate::numeric::residual(e, &|v| if v == last { x } else if v == *next { t } else { 0.0 }).normalized() <= 1e-6);
                if ok && !out.iter().any(|s: &Solution| matches!(s.values[0].1, Value::Approx(u) if (u - t).abs() < 1e-9)) {
                    out.push(Solution { values: vec![(*next, Value::Approx(t))], multiplicity: 1 });
                }
            }
            Ok(out)
        }
        _ => Err(AlgebraError::NotZeroDimensional(format!("{slice} (approximate back-substitution in several unknowns)"))),
    }
}

/// Real points of the projective variety cut out by homogeneous `gens` in
/// the coordinates `[a, b, c]`, from the slices `c = 1`, `c = 0, a = 1` and
/// `(0:1:0)`.
pub fn projective_points(gens: &[Polynomial], coords: [Var; 3]) -> PointSet {
    let [a, b, c] = coords;
    let one = Rat::from_integer(1.into());
    let zero = Rat::zero();
    let mut set = PointSet::default();
    let value_of = |s: &Solution, v: Var| s.values.iter().find(|(w, _)| *w == v).map(|(_, x)| x.clone());

    let run = |name: &str, fixed: &[(Var, Rat)], unknowns: &[Var], set: &mut PointSet| {
        let mut eqs = Vec::new();
        for g in gens {
            let mut e = g.clone();
            for (v, r) in fixed {
                match e.substitute_value(*v, r) {
                    Ok(x) => e = x,
                    Err(err) => {
                        set.issues.push(format!("{name}: {err}"));
                        return;
                    }
                }
            }
            eqs.push(e);
        }
        match solve_real(&eqs, unknowns, name) {
            Ok(sols) => {
                for s in sols {
                    let get = |v: Var| {
                        fixed
                            .iter()
                            .find(|(w, _)| *w == v)
                            .map(|(_, r)| Value::Exact(r.clone()))
                            .or_else(|| value_of(&s, v))
                            .expect("every coordinate assigned")
                    };
                    if let Ok(p) = ProjectivePoint::new(get(a), get(b), get(c)) {
                        set.push(p, s.multiplicity);
                    }
                }
            }
            Err(e) => set.issues.push(e.to_string()),
        }
    };
    run(&format!("{c}=1"), &[(c, one.clone())], &[a, b], &mut set);
    run(&format!("{c}=0, {a}=1"), &[(c, zero.clone()), (a, one.clone())], &[b], &mut set);
    run(&format!("{c}=0, {a}=0, {b}=1"), &[(c, zero.clone()), (a, zero), (b, one)], &[], &mut set);
    set
}

/// Substitutes numeric values for the parameters `kd, kn`.
pub fn specialize(gens: &[Polynomial], kd: &Rat, kn: &Rat) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let mut e = g.clone();
        if e.varset().contains(Var::Kd) {
            e = e.substitute_value(Var::Kd, kd)?;
        }
        if e.varset().contains(Var::Kn) {
            e = e.substitute_value(Var::Kn, kn)?;
        }
        out.push(e);
    }
    Ok(out)
}

/// Initial (`kd = 1, kn = 0`) and terminal (`kd = 0, kn = 1`) points.
pub fn initial_and_terminal(gens: &[Polynomial], coords: [Var; 3]) -> Result<(PointSet, PointSet)> {
    let one = Rat::from_integer(1.into());
    let zero = Rat::zero();
    let init = projective_points(&specialize(gens, &one, &zero)?, coords);
    let term = projective_points(&specialize(gens, &zero, &one)?, coords);
    Ok((init, term))
}

/// Generators at `kd = 1, kn = λ` with `λ` kept symbolic as `l`, in the
/// varset `coords + [l]`.
pub fn intermediate_description(gens: &[Polynomial], coords: [Var; 3]) -> Result<Vec<Polynomial>> {
    let target = VarSet::new(&[coords[0], coords[1], coords[2], Var::L])?;
    let mut out = Vec::new();
    for g in gens {
        let vars = g.varset();
        let mut e = g.clone();
        if vars.contains(Var::Kd) {
            e = e.substitute_value(Var::Kd, &Rat::from_integer(1.into()))?;
        }
        let mut ext = vars.clone();
        if !ext.contains(Var::L) {
            ext = ext.with_inserted(ext.len(), Var::L)?;
        }
        e = e.to_varset(&ext)?;
        if ext.contains(Var::Kn) {
            let l = Polynomial::var(&ext, Var::L)?;
            e = e.substitute(Var::Kn, &l)?;
        }
        let e = e.to_varset(&target)?.primitive(&MonomialOrder::GrevLex);
        if !e.is_zero() && !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

/// A point with the number of components on which it occurs.
#[derive(Debug, Clone, PartialEq)]
pub struct MergedPoint {
    pub point: ProjectivePoint,
    pub count: usize,
}

/// Merges points over components, counting repeats.
pub fn merge_points<'a>(sets: impl Iterator<Item = &'a PointSet>) -> Vec<MergedPoint> {
    let mut out: Vec<MergedPoint> = Vec::new();
    for set in sets {
        for p in &set.points {
            match out.iter_mut().find(|m| m.point.same_as(&p.point)) {
                Some(m) => m.count += 1,
                None => out.push(MergedPoint { point: p.point.clone(), count: 1 }),
            }
        }
    }
    out
}
