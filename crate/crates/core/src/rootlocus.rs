//! From a transfer function to the irreducible components of its projective
//! root locus.

use std::fmt;

use num_traits::Zero;

use crate::decompose::{filter_parameter_trivial, minimal_components, ComponentFlag, ComponentSet};
use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, eliminate, GroebnerBasis, Ideal};
use crate::order::MonomialOrder;
use crate::points::{initial_and_terminal, intermediate_description, PointSet};
use crate::poly::{parse_rat, Polynomial, Rat, Var, VarSet};
use crate::univariate::UniPoly;

pub const XYZ: [Var; 3] = [Var::X, Var::Y, Var::Z];

/// `[x, y, kd, kn]`, the ring of the real/imaginary split.
pub fn affine_ring() -> VarSet {
    VarSet::of(&[Var::X, Var::Y, Var::Kd, Var::Kn])
}

/// `[x, y, z, kd, kn]`, the ring of the homogenized ideal.
pub fn projective_ring() -> VarSet {
    VarSet::of(&[Var::X, Var::Y, Var::Z, Var::Kd, Var::Kn])
}

/// `G(s) = num(s) / den(s)` with `den` monic and coprime to `num`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferFunction {
    num: UniPoly,
    den: UniPoly,
}

impl TransferFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<TransferFunction> {
        let bad = |m: String| Err(AlgebraError::InvalidTransferFunction(m));
        if num.is_zero() {
            return bad("numerator is zero".into());
        }
        match den.degree() {
            None => return bad("denominator is zero".into()),
            Some(0) => return bad("denominator must have degree at least 1".into()),
            _ => {}
        }
        if !den.is_monic() {
            return bad(format!("denominator `{den}` is not monic"));
        }
        let g = num.gcd(&den);
        if g.degree().unwrap_or(0) > 0 {
            return bad(format!("numerator and denominator share the factor `{g}`"));
        }
        Ok(TransferFunction { num, den })
    }

    /// Coefficient lists, highest degree first.
    pub fn from_coefficients(num: &[Rat], den: &[Rat]) -> Result<TransferFunction> {
        TransferFunction::new(UniPoly::from_descending(num), UniPoly::from_descending(den))
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<TransferFunction> {
        TransferFunction::new(UniPoly::from_i64_descending(num), UniPoly::from_i64_descending(den))
    }

    /// Comma-separated coefficient lists such as `"1,1"` and `"1,0,0"`,
    /// highest degree first. Both are divided by the leading coefficient of
    /// the denominator.
    pub fn parse(num: &str, den: &str) -> Result<TransferFunction> {
        let list = |s: &str| -> Result<Vec<Rat>> {
            let items: Vec<&str> = s.split(',').map(str::trim).collect();
            if items.iter().any(|i| i.is_empty()) {
                return Err(AlgebraError::InvalidTransferFunction(format!("empty coefficient in `{s}`")));
            }
            items.into_iter().map(|i| parse_rat(i).map_err(AlgebraError::from)).collect()
        };
        let (num, den) = (UniPoly::from_descending(&list(num)?), UniPoly::from_descending(&list(den)?));
        match den.leading() {
            Some(lc) if !lc.is_zero() => {
                let inv = lc.recip();
                TransferFunction::new(num.scale(&inv), den.scale(&inv))
            }
            _ => TransferFunction::new(num, den),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }
}

impl fmt::Display for TransferFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// `kd * den(s) + kn * num(s)`, stored by powers of `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPencil {
    pub den: UniPoly,
    pub num: UniPoly,
}

impl ParameterPencil {
    pub fn degree(&self) -> usize {
        self.den.degree().unwrap_or(0).max(self.num.degree().unwrap_or(0))
    }

    /// Coefficient of `s^k` as a linear form in `kd, kn`.
    pub fn coefficient(&self, k: usize, vars: &VarSet) -> Result<Polynomial> {
        let kd = Polynomial::var(vars, Var::Kd)?.scale(&self.den.coeff(k));
        let kn = Polynomial::var(vars, Var::Kn)?.scale(&self.num.coeff(k));
        Ok(&kd + &kn)
    }
}

impl fmt::Display for ParameterPencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kd*({}) + kn*({})", self.den, self.num)
    }
}

pub fn build_pencil(tf: &TransferFunction) -> ParameterPencil {
    ParameterPencil { den: tf.den.clone(), num: tf.num.clone() }
}

/// Real and imaginary parts of the pencil at `s = x + iy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub u: Polynomial,
    pub v: Polynomial,
}

/// Expands `(x + iy)^k` with `i^2 = -1` and collects both parts.
pub fn complex_split(pencil: &ParameterPencil) -> Result<Pencil> {
    let vars = affine_ring();
    let x = Polynomial::var(&vars, Var::X)?;
    let y = Polynomial::var(&vars, Var::Y)?;
    let mut re = Polynomial::one(&vars);
    let mut im = Polynomial::zero(&vars);
    let mut u = Polynomial::zero(&vars);
    let mut v = Polynomial::zero(&vars);
    for k in 0..=pencil.degree() {
        let c = pencil.coefficient(k, &vars)?;
        u = &u + &(&c * &re);
        v = &v + &(&c * &im);
        // (re + i im)(x + i y)
        let next_re = &(&re * &x) - &(&im * &y);
        let next_im = &(&re * &y) + &(&im * &x);
        re = next_re;
        im = next_im;
    }
    Ok(Pencil { u, v })
}

/// One irreducible piece of the projective root locus.
#[derive(Debug, Clone)]
pub struct RLComponent {
    /// Reduced grevlex basis over `[x, y, z, kd, kn]`.
    pub ideal: Ideal,
    pub flags: Vec<ComponentFlag>,
    /// Parameter-free generator (over `[x, y, z]`).
    pub locus: Option<Polynomial>,
    /// Parameter-dependent generator (over `[x, y, z, kd, kn]`).
    pub param: Option<Polynomial>,
    /// `locus` at `z = 1`, over `[x, y]`.
    pub affine_equation: Option<Polynomial>,
    pub initial: PointSet,
    pub terminal: PointSet,
    /// Generators at `kd = 1, kn = λ` over `[x, y, z, l]`.
    pub intermediate: Vec<Polynomial>,
    /// The same at `z = 1`, over `[x, y, l]`.
    pub intermediate_affine: Vec<Polynomial>,
}

impl RLComponent {
    pub fn locus_degree(&self) -> u32 {
        self.locus.as_ref().and_then(Polynomial::total_degree).unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct RootLocus {
    pub tf: TransferFunction,
    pub pencil: Pencil,
    /// Grevlex basis of `<u, v>` over `[x, y, kd, kn]`.
    pub basis: GroebnerBasis,
    /// Element-wise homogenization of `basis`.
    pub homogenized: Ideal,
    /// Every minimal component, the parameter-trivial one included.
    pub decomposition: ComponentSet,
    pub components: Vec<RLComponent>,
}

/// Homogenizes each basis element with `z`, moving into `[x, y, z, kd, kn]`.
pub fn homogenize_basis(gb: &GroebnerBasis) -> Result<Ideal> {
    let ring = projective_ring();
    let gens = gb
        .elements()
        .iter()
        .map(|g| g.to_varset(&ring).and_then(|p| p.homogenize(Var::Z)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ideal::new(&ring, gens)
}

pub fn decompose_root_locus(tf: &TransferFunction) -> Result<RootLocus> {
    let pencil = complex_split(&build_pencil(tf))?;
    let ideal = Ideal::new(&affine_ring(), vec![pencil.u.clone(), pencil.v.clone()])?;
    let basis = buchberger(&ideal, MonomialOrder::GrevLex);
    let homogenized = homogenize_basis(&basis)?;
    let decomposition = minimal_components(&homogenized)?;
    let kept = filter_parameter_trivial(&decomposition)?;
    let mut components =
        kept.components.iter().map(|c| component_from_ideal(&c.ideal, c.flags.clone())).collect::<Result<Vec<_>>>()?;
    components.sort_by_key(|c| (c.locus_degree(), c.locus.as_ref().map(|p| p.to_string()).unwrap_or_default()));
    Ok(RootLocus { tf: tf.clone(), pencil, basis, homogenized, decomposition, components })
}

fn pick<'a>(cands: impl Iterator<Item = &'a Polynomial>, key: impl Fn(&Polynomial) -> (u32, u32, usize)) -> Option<Polynomial> {
    cands.min_by_key(|p| (key(p), p.to_string())).cloned()
}

/// Locus and parametrization generators of a component ideal.
pub fn split_generators(ideal: &Ideal) -> Result<(Option<Polynomial>, Option<Polynomial>)> {
    let params = [Var::Kd, Var::Kn];
    let geo = eliminate(ideal, &params)?;
    let locus = pick(geo.generators().iter(), |p| (p.total_degree().unwrap_or(0), 0, p.num_terms()))
        .map(|p| p.primitive(&MonomialOrder::GrevLex));
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    let param = pick(gb.elements().iter().filter(|g| !g.is_free_of(&params)), |p| {
        let linear = u32::from(p.degree_in(&params) != 1);
        (linear, p.total_degree().unwrap_or(0), p.num_terms())
    });
    Ok((locus, param))
}

/// Builds the component record and classifies its points.
pub fn component_from_ideal(ideal: &Ideal, flags: Vec<ComponentFlag>) -> Result<RLComponent> {
    let (locus, param) = split_generators(ideal)?;
    let affine_equation = match &locus {
        Some(f) => Some(f.dehomogenize(Var::Z)?.to_varset(&VarSet::of(&[Var::X, Var::Y]))?),
        None => None,
    };
    let gens = ideal.generators();
    let (initial, terminal) = initial_and_terminal(gens, XYZ)?;
    let intermediate = intermediate_description(gens, XYZ)?;
    let affine_vars = VarSet::of(&[Var::X, Var::Y, Var::L]);
    let mut intermediate_affine = Vec::new();
    for g in &intermediate {
        let a = g.dehomogenize(Var::Z)?.to_varset(&affine_vars)?.primitive(&MonomialOrder::GrevLex);
        if !a.is_zero() && !intermediate_affine.contains(&a) {
            intermediate_affine.push(a);
        }
    }
    Ok(RLComponent {
        ideal: ideal.clone(),
        flags,
        locus,
        param,
        affine_equation,
        initial,
        terminal,
        intermediate,
        intermediate_affine,
    })
}
