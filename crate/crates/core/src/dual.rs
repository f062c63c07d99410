//! Dual curves of root-locus components through the incidence ideal
//! `<f, u - l fx, v - l fy, w - l fz>` and elimination of `x, y, z, l`.

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, eliminate, Ideal};
use crate::order::MonomialOrder;
use crate::points::{initial_and_terminal, intermediate_description, merge_points, MergedPoint, PointSet};
use crate::poly::{Polynomial, Var, VarSet};
use crate::rootlocus::{RLComponent, RootLocus, XYZ};

pub const UVW: [Var; 3] = [Var::U, Var::V, Var::W];
const PARAMS: [Var; 2] = [Var::Kd, Var::Kn];

/// `[u, v, w, kd, kn]`, the ring of dual ideals.
pub fn dual_ring() -> VarSet {
    ring_of(UVW)
}

fn ring_of(coords: [Var; 3]) -> VarSet {
    VarSet::of(&[coords[0], coords[1], coords[2], Var::Kd, Var::Kn])
}

fn check_homogeneous(f: &Polynomial, coords: [Var; 3]) -> Result<()> {
    if f.is_zero() || !f.is_homogeneous_in(&coords) {
        return Err(AlgebraError::NotHomogeneous(format!("`{f}` in {}, {}, {}", coords[0], coords[1], coords[2])));
    }
    Ok(())
}

/// `<gen, to_i - l * d(grad)/d(from_i)>` over `from + [l, kd, kn] + to`.
fn incidence(gen: &Polynomial, grad_of: &Polynomial, from: [Var; 3], to: [Var; 3]) -> Result<Ideal> {
    let ring = VarSet::new(&[from[0], from[1], from[2], Var::L, Var::Kd, Var::Kn, to[0], to[1], to[2]])?;
    let l = Polynomial::var(&ring, Var::L)?;
    let g = grad_of.to_varset(&ring)?;
    let mut gens = vec![gen.to_varset(&ring)?];
    for (a, b) in from.iter().zip(to.iter()) {
        let d = g.partial_derivative(*a)?;
        gens.push(&Polynomial::var(&ring, *b)? - &(&l * &d));
    }
    Ideal::new(&ring, gens)
}

/// Eliminates `from + [l]`, returning a reduced basis over `to + [kd, kn]`.
fn eliminate_incidence(ideal: &Ideal, from: [Var; 3], to: [Var; 3], what: &str) -> Result<Ideal> {
    let elim = eliminate(ideal, &[from[0], from[1], from[2], Var::L])?;
    if elim.is_zero_ideal() {
        return Err(AlgebraError::DegenerateElimination(what.into()));
    }
    let target = ring_of(to);
    let moved = elim.to_varset(&target)?;
    Ok(buchberger(&moved, MonomialOrder::GrevLex).to_ideal())
}

/// The incidence ideal of a curve homogeneous in `x, y, z` (parameters
/// allowed in the coefficients), over `[x, y, z, l, kd, kn, u, v, w]`.
pub fn incidence_ideal(f: &Polynomial) -> Result<Ideal> {
    check_homogeneous(f, XYZ)?;
    incidence(f, f, XYZ, UVW)
}

fn main_generator(ideal: &Ideal, coords: [Var; 3]) -> Option<Polynomial> {
    ideal
        .generators()
        .iter()
        .max_by_key(|g| (g.degree_in(&coords), std::cmp::Reverse(g.to_string())))
        .map(|g| g.primitive(&MonomialOrder::GrevLex))
}

fn dual_ideal_of(f: &Polynomial, from: [Var; 3], to: [Var; 3]) -> Result<Ideal> {
    check_homogeneous(f, from)?;
    eliminate_incidence(&incidence(f, f, from, to)?, from, to, &format!("dual of `{f}`"))
}

/// Dual curve of `f`, over `[u, v, w, kd, kn]`: the elimination generator of
/// highest degree in `u, v, w`.
pub fn dual_curve(f: &Polynomial) -> Result<Polynomial> {
    let ideal = dual_ideal_of(f, XYZ, UVW)?;
    main_generator(&ideal, UVW).ok_or_else(|| AlgebraError::DegenerateElimination(format!("dual of `{f}`")))
}

/// The full elimination ideal of the incidence construction on `f`.
pub fn dual_ideal(f: &Polynomial) -> Result<Ideal> {
    dual_ideal_of(f, XYZ, UVW)
}

fn param_dual(param: &Polynomial, f: &Polynomial, from: [Var; 3], to: [Var; 3]) -> Result<Polynomial> {
    check_homogeneous(f, from)?;
    let what = format!("parametrization `{param}` over `{f}`");
    let ideal = eliminate_incidence(&incidence(param, f, from, to)?, from, to, &what)?;
    ideal
        .generators()
        .iter()
        .filter(|g| !g.is_free_of(&PARAMS))
        .min_by_key(|g| (g.total_degree(), g.num_terms(), g.to_string()))
        .map(|g| g.primitive(&MonomialOrder::GrevLex))
        .ok_or(AlgebraError::DegenerateElimination(what))
}

/// Eliminates `x, y, z, l` from `<param, u - l fx, v - l fy, w - l fz>` and
/// returns the parameter-dependent generator.
pub fn dual_parametrization(param: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    param_dual(param, f, XYZ, UVW)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeLawStatus {
    Holds,
    Violated,
    /// The dualized curve has a singular point; the law does not apply.
    SkippedSingular,
    /// Coefficients depend on `kd, kn` and smoothness was not decided.
    SkippedParametric,
}

impl DegreeLawStatus {
    pub fn name(self) -> &'static str {
        match self {
            DegreeLawStatus::Holds => "holds",
            DegreeLawStatus::Violated => "violated",
            DegreeLawStatus::SkippedSingular => "skipped-singular",
            DegreeLawStatus::SkippedParametric => "skipped-parametric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeLaw {
    pub source: Polynomial,
    pub source_degree: u32,
    pub dual_degree: u32,
    pub status: DegreeLawStatus,
}

impl DegreeLaw {
    pub fn expected(&self) -> u32 {
        self.source_degree * self.source_degree.saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Nonsingular,
    Singular,
    Undecided,
}

/// Smoothness of a homogeneous plane curve in `coords`: nonsingular iff the
/// partials vanish together only at the origin, i.e. a grevlex basis of
/// `<fx, fy, fz>` has a pure-power leading monomial in each coordinate.
pub fn smoothness(f: &Polynomial, coords: [Var; 3]) -> Result<Smoothness> {
    check_homogeneous(f, coords)?;
    let deg = f.total_degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(Smoothness::Nonsingular);
    }
    if coords.iter().any(|c| !f.uses(*c)) {
        // a cone over a point
        return Ok(Smoothness::Singular);
    }
    if !f.is_free_of(&PARAMS) {
        return Ok(Smoothness::Undecided);
    }
    let vars = VarSet::new(&coords)?;
    let g = f.to_varset(&vars)?;
    let partials = coords.iter().map(|c| g.partial_derivative(*c)).collect::<std::result::Result<Vec<_>, _>>()?;
    let gb = buchberger(&Ideal::new(&vars, partials)?, MonomialOrder::GrevLex);
    let order = MonomialOrder::GrevLex;
    let lms: Vec<_> = gb.elements().iter().filter_map(|e| e.leading_term(&order).map(|t| t.0)).collect();
    let pure = |i: usize| lms.iter().any(|m| m.exp(i) > 0 && m.degree() == m.exp(i) as u32);
    Ok(if (0..3).all(pure) { Smoothness::Nonsingular } else { Smoothness::Singular })
}

pub fn degree_law(source: &Polynomial, dual: &Polynomial, coords: [Var; 3], dual_coords: [Var; 3]) -> Result<DegreeLaw> {
    let source_degree = source.degree_in(&coords);
    let dual_degree = dual.degree_in(&dual_coords);
    let status = match smoothness(source, coords)? {
        Smoothness::Singular => DegreeLawStatus::SkippedSingular,
        Smoothness::Undecided => DegreeLawStatus::SkippedParametric,
        Smoothness::Nonsingular if dual_degree == source_degree * source_degree.saturating_sub(1) => DegreeLawStatus::Holds,
        Smoothness::Nonsingular => DegreeLawStatus::Violated,
    };
    Ok(DegreeLaw { source: source.clone(), source_degree, dual_degree, status })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    /// The locus has degree at least two and dualizes to a curve.
    Curve,
    /// The locus is a line, whose dual is a single point; the curve part of
    /// the dual comes from the parametrization generator.
    PointDual,
}

/// The dual of one component; its union over components is the ADRL.
#[derive(Debug, Clone)]
pub struct DualComponent {
    pub kind: DualKind,
    /// Over `[u, v, w, kd, kn]`.
    pub ideal: Ideal,
    /// Parameter-free generator of the dual ideal.
    pub curve: Option<Polynomial>,
    /// Parameter-dependent generator of the dual ideal.
    pub param: Option<Polynomial>,
    /// For a line component, the ideal of its dual point.
    pub point_ideal: Option<Ideal>,
    /// `curve` at `w = 1`, over `[u, v]`.
    pub affine_equation: Option<Polynomial>,
    pub degree_law: DegreeLaw,
    pub initial: PointSet,
    pub terminal: PointSet,
    /// Generators at `kd = 1, kn = λ` over `[u, v, w, l]`.
    pub intermediate: Vec<Polynomial>,
}

fn locus_and_param(ideal: &Ideal, coords: [Var; 3]) -> Result<(Option<Polynomial>, Option<Polynomial>)> {
    let geo = eliminate(ideal, &PARAMS)?;
    let locus = geo
        .generators()
        .iter()
        .min_by_key(|g| (g.total_degree(), g.to_string()))
        .map(|g| g.primitive(&MonomialOrder::GrevLex))
        .map(|g| g.to_varset(&VarSet::new(&coords).expect("distinct")))
        .transpose()?;
    let param = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_free_of(&PARAMS))
        .min_by_key(|g| (u32::from(g.degree_in(&PARAMS) != 1), g.total_degree(), g.num_terms(), g.to_string()))
        .cloned();
    Ok((locus, param))
}

/// Dual ideal of a component given by its locus and parametrization
/// generators, in the direction `from -> to`.
fn dual_pair(locus: &Polynomial, param: &Polynomial, from: [Var; 3], to: [Var; 3]) -> Result<(DualKind, Ideal, Option<Ideal>, DegreeLaw)> {
    let ring = ring_of(to);
    if locus.total_degree().unwrap_or(0) <= 1 {
        let ideal = dual_ideal_of(param, from, to)?;
        let point = dual_ideal_of(locus, from, to)?;
        let main = main_generator(&ideal, to).expect("nonzero ideal");
        let law = degree_law(param, &main, from, to)?;
        Ok((DualKind::PointDual, ideal, Some(point), law))
    } else {
        let curve_ideal = dual_ideal_of(locus, from, to)?;
        let curve = main_generator(&curve_ideal, to).expect("nonzero ideal");
        let p = param_dual(param, locus, from, to)?;
        let law = degree_law(locus, &curve, from, to)?;
        let ideal = Ideal::new(&ring, vec![curve.to_varset(&ring)?, p])?;
        let ideal = buchberger(&ideal, MonomialOrder::GrevLex).to_ideal();
        Ok((DualKind::Curve, ideal, None, law))
    }
}

pub fn dualize_component(c: &RLComponent) -> Result<DualComponent> {
    let locus = c.locus.as_ref().ok_or_else(|| AlgebraError::DegenerateElimination("component has no locus generator".into()))?;
    let param = c.param.as_ref().ok_or_else(|| AlgebraError::DegenerateElimination("component has no parametrization generator".into()))?;
    let locus = locus.to_varset(&ring_of(XYZ))?;
    let (kind, ideal, point_ideal, degree_law) = dual_pair(&locus, param, XYZ, UVW)?;
    let (curve, dparam) = locus_and_param(&ideal, UVW)?;
    let affine_equation = match &curve {
        Some(g) => Some(g.dehomogenize(Var::W)?.to_varset(&VarSet::of(&[Var::U, Var::V]))?),
        None => None,
    };
    let (initial, terminal) = initial_and_terminal(ideal.generators(), UVW)?;
    let intermediate = intermediate_description(ideal.generators(), UVW)?;
    Ok(DualComponent {
        kind,
        ideal,
        curve,
        param: dparam,
        point_ideal,
        affine_equation,
        degree_law,
        initial,
        terminal,
        intermediate,
    })
}

pub fn dualize_root_locus(rl: &RootLocus) -> Result<Vec<DualComponent>> {
    rl.components.iter().map(dualize_component).collect()
}

/// The construction applied to the dual component with the roles of
/// `(x, y, z)` and `(u, v, w)` swapped; the result lives in `[x, y, z, kd, kn]`.
pub fn bidual(dc: &DualComponent) -> Result<Ideal> {
    let param = dc.param.as_ref().ok_or_else(|| AlgebraError::DegenerateElimination("dual component has no parametrization".into()))?;
    match dc.kind {
        DualKind::PointDual => dual_ideal_of(param, UVW, XYZ),
        DualKind::Curve => {
            let curve = dc.curve.as_ref().ok_or_else(|| AlgebraError::DegenerateElimination("dual component has no curve".into()))?;
            let curve = curve.to_varset(&dual_ring())?;
            let (_, ideal, _, _) = dual_pair(&curve, param, UVW, XYZ)?;
            Ok(ideal)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Adrl {
    pub components: Vec<DualComponent>,
    /// Affine pieces at `w = 1`, over `[u, v]`.
    pub affine_pieces: Vec<Polynomial>,
    pub initial: Vec<MergedPoint>,
    pub terminal: Vec<MergedPoint>,
}

pub fn assemble_adrl(components: Vec<DualComponent>) -> Result<Adrl> {
    if components.is_empty() {
        return Err(AlgebraError::Empty("no dual components to assemble".into()));
    }
    let affine_pieces = components.iter().filter_map(|c| c.affine_equation.clone()).collect();
    let initial = merge_points(components.iter().map(|c| &c.initial));
    let terminal = merge_points(components.iter().map(|c| &c.terminal));
    Ok(Adrl { components, affine_pieces, initial, terminal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::points::ProjectivePoint;
    use crate::rootlocus::{decompose_root_locus, projective_ring, TransferFunction};

    fn xyz(s: &str) -> Polynomial {
        Polynomial::parse(s, &projective_ring()).unwrap()
    }

    fn uvw(s: &str) -> Polynomial {
        Polynomial::parse(s, &dual_ring()).unwrap()
    }

    #[test]
    fn incidence_of_circle() {
        let i = incidence_ideal(&xyz("x^2 + y^2 + 2*x*z")).unwrap();
        let g: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(g, vec!["x^2 + y^2 + 2*x*z", "-2*x*l - 2*z*l + u", "-2*y*l + v", "-2*x*l + w"]);
        let line = incidence_ideal(&xyz("y")).unwrap();
        assert_eq!(line.generators()[2].to_string(), "-l + v");
        assert!(incidence_ideal(&xyz("x^2 + y")).is_err());
    }

    #[test]
    fn conic_duals() {
        assert_eq!(dual_curve(&xyz("x^2 + y^2 + 2*x*z")).unwrap(), uvw("v^2 + 2*u*w - w^2"));
        assert_eq!(dual_curve(&xyz("x^2*kd + x*z*kn + z^2*kn")).unwrap(), uvw("kd*w^2 + kn*u^2 - kn*u*w"));
        let h1 = dual_parametrization(&xyz("2*x*kd + z*kn"), &xyz("x^2 + y^2 + 2*x*z")).unwrap();
        assert_eq!(h1, uvw("kn*u + (2*kd - kn)*w"));
    }

    #[test]
    fn smoothness_checks() {
        assert_eq!(smoothness(&xyz("x^2 + y^2 + 2*x*z"), XYZ).unwrap(), Smoothness::Nonsingular);
        assert_eq!(smoothness(&xyz("y^2*z - x^3 - x^2*z"), XYZ).unwrap(), Smoothness::Singular);
        assert_eq!(smoothness(&xyz("x^2*kd + x*z*kn + z^2*kn"), XYZ).unwrap(), Smoothness::Singular);
        assert_eq!(smoothness(&xyz("x^2*kd + y^2*kn + z^2*kn"), XYZ).unwrap(), Smoothness::Undecided);
    }

    #[test]
    fn double_integrator_duals_and_biduals() {
        let tf = TransferFunction::from_i64(&[1, 1], &[1, 0, 0]).unwrap();
        let rl = decompose_root_locus(&tf).unwrap();
        let duals = dualize_root_locus(&rl).unwrap();
        let ring = dual_ring();
        let j1d = Ideal::parse(&ring, &["v", "kd*w^2 + kn*u^2 - kn*u*w"]).unwrap();
        let j2d = Ideal::parse(&ring, &["v^2 + 2*u*w - w^2", "kn*u + (2*kd - kn)*w"]).unwrap();
        assert_eq!(duals[0].kind, DualKind::PointDual);
        assert!(ideal_equal(&duals[0].ideal, &j1d, MonomialOrder::GrevLex).unwrap());
        assert!(ideal_equal(&duals[1].ideal, &j2d, MonomialOrder::GrevLex).unwrap());
        assert_eq!(duals[0].point_ideal.as_ref().unwrap().generators().len(), 2);
        for (d, c) in duals.iter().zip(&rl.components) {
            let back = bidual(d).unwrap();
            assert!(ideal_equal(&back, &c.ideal, MonomialOrder::GrevLex).unwrap());
        }
        let adrl = assemble_adrl(duals).unwrap();
        assert_eq!(adrl.initial, vec![MergedPoint { point: ProjectivePoint::from_ints(1, 0, 0), count: 2 }]);
        assert_eq!(adrl.terminal.len(), 2);
        assert!(assemble_adrl(Vec::new()).is_err());
    }
}
