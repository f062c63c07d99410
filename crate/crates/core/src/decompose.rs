//! Splitting an ideal into the ideals of the irreducible components of its
//! variety by recursive factoring of Gröbner basis elements.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::factor::{factorize, Factor};
use crate::groebner::{buchberger, is_subideal, GroebnerBasis, Ideal};
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentFlag {
    /// Every generator is proven irreducible.
    VerifiedPrimeCandidate,
    /// Some generator could not be proven irreducible.
    PossiblyReducible,
    /// The ideal contains both `kd` and `kn`.
    ParameterTrivial,
}

impl ComponentFlag {
    pub fn name(self) -> &'static str {
        match self {
            ComponentFlag::VerifiedPrimeCandidate => "verified-prime-candidate",
            ComponentFlag::PossiblyReducible => "possibly-reducible",
            ComponentFlag::ParameterTrivial => "parameter-trivial",
        }
    }
}

impl fmt::Display for ComponentFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct Component {
    /// Generated by its reduced grevlex basis.
    pub ideal: Ideal,
    pub basis: GroebnerBasis,
    pub flags: Vec<ComponentFlag>,
}

impl Component {
    pub fn has_flag(&self, flag: ComponentFlag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }
}

#[derive(Debug, Clone)]
pub struct ComponentSet {
    pub source: Ideal,
    pub components: Vec<Component>,
}

impl ComponentSet {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn ideals(&self) -> Vec<Ideal> {
        self.components.iter().map(|c| c.ideal.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DecomposeOptions {
    pub max_depth: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { max_depth: 16 }
    }
}

pub fn minimal_components(ideal: &Ideal) -> Result<ComponentSet> {
    minimal_components_with(ideal, DecomposeOptions::default())
}

struct Splitter {
    opts: DecomposeOptions,
    seen: HashSet<Vec<Polynomial>>,
    factors: HashMap<Polynomial, Vec<Factor>>,
    leaves: Vec<(GroebnerBasis, bool)>,
}

impl Splitter {
    fn factors_of(&mut self, p: &Polynomial) -> Result<Vec<Factor>> {
        if let Some(f) = self.factors.get(p) {
            return Ok(f.clone());
        }
        let f = factorize(p)?;
        self.factors.insert(p.clone(), f.clone());
        Ok(f)
    }

    fn visit(&mut self, ideal: &Ideal, depth: usize) -> Result<()> {
        if depth > self.opts.max_depth {
            return Err(AlgebraError::DepthExceeded(self.opts.max_depth));
        }
        let gb = buchberger(ideal, MonomialOrder::GrevLex);
        if gb.is_unit() || !self.seen.insert(gb.elements().to_vec()) {
            return Ok(());
        }
        let mut certified = true;
        for g in gb.elements() {
            let fs = self.factors_of(g)?;
            let trivial = fs.len() == 1 && fs[0].multiplicity == 1;
            if !trivial {
                let base = gb.to_ideal();
                for f in fs {
                    self.visit(&base.with_generator(f.poly)?, depth + 1)?;
                }
                return Ok(());
            }
            certified &= fs[0].irreducible;
        }
        self.leaves.push((gb, certified));
        Ok(())
    }
}

/// Ideals of the irreducible components of `V(ideal)`, one per component,
/// each given by its reduced grevlex basis.
pub fn minimal_components_with(ideal: &Ideal, opts: DecomposeOptions) -> Result<ComponentSet> {
    let mut s = Splitter { opts, seen: HashSet::new(), factors: HashMap::new(), leaves: Vec::new() };
    s.visit(ideal, 0)?;

    let mut leaves: Vec<(GroebnerBasis, bool)> = Vec::new();
    for (gb, cert) in s.leaves {
        if !leaves.iter().any(|(g, _)| g.elements() == gb.elements()) {
            leaves.push((gb, cert));
        }
    }
    // drop any leaf that contains another one
    let mut keep = vec![true; leaves.len()];
    for i in 0..leaves.len() {
        for j in 0..leaves.len() {
            if i != j && keep[j] && is_subideal(&leaves[j].0.to_ideal(), &leaves[i].0)? {
                keep[i] = false;
                break;
            }
        }
    }
    let mut components = Vec::new();
    for ((gb, cert), k) in leaves.into_iter().zip(keep) {
        if !k {
            continue;
        }
        let mut flags = vec![if cert { ComponentFlag::VerifiedPrimeCandidate } else { ComponentFlag::PossiblyReducible }];
        if contains_both_parameters(&gb)? {
            flags.push(ComponentFlag::ParameterTrivial);
        }
        components.push(Component { ideal: gb.to_ideal(), basis: gb, flags });
    }
    components.sort_by_key(sort_key);
    Ok(ComponentSet { source: ideal.clone(), components })
}

fn sort_key(c: &Component) -> (u32, Vec<String>) {
    let deg = c.generators().iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
    (deg, c.generators().iter().map(|g| g.to_string()).collect())
}

fn contains_both_parameters(gb: &GroebnerBasis) -> Result<bool> {
    let vars = gb.varset();
    if !vars.contains(Var::Kd) || !vars.contains(Var::Kn) {
        return Ok(false);
    }
    Ok(gb.contains(&Polynomial::var(vars, Var::Kd)?)? && gb.contains(&Polynomial::var(vars, Var::Kn)?)?)
}

/// Removes components on which `(kd, kn) = (0, 0)`, which is not a point of
/// the parameter line.
pub fn filter_parameter_trivial(cs: &ComponentSet) -> Result<ComponentSet> {
    let components: Vec<Component> =
        cs.components.iter().filter(|c| !c.has_flag(ComponentFlag::ParameterTrivial)).cloned().collect();
    if components.is_empty() {
        return Err(AlgebraError::AllComponentsTrivial);
    }
    Ok(ComponentSet { source: cs.source.clone(), components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::poly::VarSet;

    fn ring() -> VarSet {
        VarSet::of(&[Var::X, Var::Y, Var::Z, Var::Kd, Var::Kn])
    }

    #[test]
    fn product_of_variables() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let cs = minimal_components(&Ideal::parse(&vars, &["x*y"]).unwrap()).unwrap();
        let got: Vec<String> = cs.components.iter().map(|c| c.generators()[0].to_string()).collect();
        assert_eq!(got, vec!["x", "y"]);
    }

    #[test]
    fn embedded_and_repeated_structure_collapses() {
        // <x^2, x*y> has variety x = 0
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let cs = minimal_components(&Ideal::parse(&vars, &["x^2", "x*y"]).unwrap()).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.components[0].generators()[0].to_string(), "x");
    }

    #[test]
    fn trivial_component_detected_and_filtered() {
        let vars = ring();
        let only = Ideal::parse(&vars, &["kd", "kn"]).unwrap();
        let cs = minimal_components(&only).unwrap();
        assert!(cs.components[0].has_flag(ComponentFlag::ParameterTrivial));
        assert_eq!(filter_parameter_trivial(&cs).unwrap_err(), AlgebraError::AllComponentsTrivial);

        let plain = minimal_components(&Ideal::parse(&vars, &["x*y"]).unwrap()).unwrap();
        assert_eq!(filter_parameter_trivial(&plain).unwrap().len(), 2);
    }

    #[test]
    fn double_integrator_components() {
        let vars = ring();
        let ih = Ideal::parse(
            &vars,
            &["2*x*y*kd + y*z*kn", "x^2*kd - y^2*kd + x*z*kn + z^2*kn", "x^2*y*kn + y^3*kn + 2*x*y*z*kn", "2*y^3*kd - x*y*z*kn - 2*y*z^2*kn"],
        )
        .unwrap();
        let cs = minimal_components(&ih).unwrap();
        assert_eq!(cs.len(), 3);
        let expected = [
            Ideal::parse(&vars, &["kd", "kn"]).unwrap(),
            Ideal::parse(&vars, &["y", "x^2*kd + x*z*kn + z^2*kn"]).unwrap(),
            Ideal::parse(&vars, &["x^2 + y^2 + 2*x*z", "2*x*kd + z*kn"]).unwrap(),
        ];
        for e in &expected {
            assert!(cs.components.iter().any(|c| ideal_equal(&c.ideal, e, MonomialOrder::GrevLex).unwrap()), "missing {e:?}");
        }
        let kept = filter_parameter_trivial(&cs).unwrap();
        assert_eq!(kept.len(), 2);
    }

    #[test]
    fn depth_limit_is_an_error() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let r = minimal_components_with(&Ideal::parse(&vars, &["x*y"]).unwrap(), DecomposeOptions { max_depth: 0 });
        assert_eq!(r.unwrap_err(), AlgebraError::DepthExceeded(0));
    }
}
