//! The JSON report. Exact rationals travel as `"a/b"` strings and every
//! polynomial as a string in the input grammar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rlalg_core::dual::{Adrl, DualComponent, DualKind};
use rlalg_core::points::{ClassifiedPoint, MergedPoint, PointSet, Value};
use rlalg_core::rootlocus::{RLComponent, RootLocus};
use rlalg_core::{ComponentFlag, Ideal, Polynomial, ProjectivePoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub transfer_function: TransferFunctionReport,
    /// Grevlex basis of the real/imaginary split over `[x, y, kd, kn]`.
    pub basis: Vec<String>,
    /// Its element-wise homogenization over `[x, y, z, kd, kn]`.
    pub homogenized: Vec<String>,
    pub components: Vec<ComponentReport>,
    /// Components dropped because they contain both `kd` and `kn`.
    pub removed: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dual: Option<DualReport>,
    pub provenance: Provenance,
    /// Excluded from determinism comparisons.
    pub volatile: Volatile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferFunctionReport {
    /// Highest degree first, after dividing by the leading denominator coefficient.
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub display: String,
    pub pencil: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    /// Exact coordinates, or `null` when any coordinate is approximate.
    pub exact: Option<[String; 3]>,
    pub approx: [f64; 3],
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSetReport {
    pub points: Vec<PointReport>,
    pub issues: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergedPointReport {
    pub exact: Option<[String; 3]>,
    pub approx: [f64; 3],
    /// Number of components on which the point occurs.
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub id: usize,
    pub generators: Vec<String>,
    pub locus: Option<String>,
    pub parametrization: Option<String>,
    pub affine_equation: Option<String>,
    pub flags: Vec<String>,
    pub initial: PointSetReport,
    pub terminal: PointSetReport,
    /// Generators at `kd = 1, kn = l`.
    pub intermediate: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeLawReport {
    pub source: String,
    pub source_degree: u32,
    pub dual_degree: u32,
    pub expected: u32,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualComponentReport {
    pub id: usize,
    /// `curve` or `point-dual`.
    pub kind: String,
    pub generators: Vec<String>,
    pub curve: Option<String>,
    pub parametrization: Option<String>,
    /// For `point-dual`, the ideal of the point dual to the line.
    pub point_ideal: Option<Vec<String>>,
    pub affine_equation: Option<String>,
    pub degree_law: DegreeLawReport,
    pub initial: PointSetReport,
    pub terminal: PointSetReport,
    pub intermediate: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualReport {
    pub components: Vec<DualComponentReport>,
    pub initial: Vec<MergedPointReport>,
    pub terminal: Vec<MergedPointReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub orders: BTreeMap<String, String>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Volatile {
    pub timings_ms: BTreeMap<String, f64>,
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn ideal_strings(i: &Ideal) -> Vec<String> {
    strings(i.generators())
}

fn coords(p: &ProjectivePoint) -> (Option<[String; 3]>, [f64; 3]) {
    let exact = if p.is_exact() {
        let c = p.coords();
        let s = |v: &Value| match v {
            Value::Exact(r) => r.to_string(),
            Value::Approx(x) => x.to_string(),
        };
        Some([s(&c[0]), s(&c[1]), s(&c[2])])
    } else {
        None
    };
    (exact, p.to_f64())
}

fn point(c: &ClassifiedPoint) -> PointReport {
    let (exact, approx) = coords(&c.point);
    PointReport { exact, approx, multiplicity: c.multiplicity }
}

fn point_set(s: &PointSet) -> PointSetReport {
    PointSetReport { points: s.points.iter().map(point).collect(), issues: s.issues.clone() }
}

fn merged(m: &MergedPoint) -> MergedPointReport {
    let (exact, approx) = coords(&m.point);
    MergedPointReport { exact, approx, count: m.count }
}

fn component(id: usize, c: &RLComponent) -> ComponentReport {
    ComponentReport {
        id,
        generators: ideal_strings(&c.ideal),
        locus: c.locus.as_ref().map(|p| p.to_string()),
        parametrization: c.param.as_ref().map(|p| p.to_string()),
        affine_equation: c.affine_equation.as_ref().map(|p| p.to_string()),
        flags: c.flags.iter().map(|f| f.name().to_string()).collect(),
        initial: point_set(&c.initial),
        terminal: point_set(&c.terminal),
        intermediate: strings(&c.intermediate),
    }
}

fn dual_component(id: usize, d: &DualComponent) -> DualComponentReport {
    let law = &d.degree_law;
    DualComponentReport {
        id,
        kind: match d.kind {
            DualKind::Curve => "curve",
            DualKind::PointDual => "point-dual",
        }
        .to_string(),
        generators: ideal_strings(&d.ideal),
        curve: d.curve.as_ref().map(|p| p.to_string()),
        parametrization: d.param.as_ref().map(|p| p.to_string()),
        point_ideal: d.point_ideal.as_ref().map(ideal_strings),
        affine_equation: d.affine_equation.as_ref().map(|p| p.to_string()),
        degree_law: DegreeLawReport {
            source: law.source.to_string(),
            source_degree: law.source_degree,
            dual_degree: law.dual_degree,
            expected: law.expected(),
            status: law.status.name().to_string(),
        },
        initial: point_set(&d.initial),
        terminal: point_set(&d.terminal),
        intermediate: strings(&d.intermediate),
    }
}

pub fn dual_report(adrl: &Adrl) -> DualReport {
    DualReport {
        components: adrl.components.iter().enumerate().map(|(i, d)| dual_component(i, d)).collect(),
        initial: adrl.initial.iter().map(merged).collect(),
        terminal: adrl.terminal.iter().map(merged).collect(),
    }
}

pub fn report(rl: &RootLocus, dual: Option<&Adrl>, timings: BTreeMap<String, f64>) -> Report {
    let desc = |u: &rlalg_core::UniPoly| u.descending().iter().map(|c| c.to_string()).collect();
    let mut orders = BTreeMap::new();
    orders.insert("basis".into(), "grevlex x > y > kd > kn".into());
    orders.insert("components".into(), "grevlex x > y > z > kd > kn".into());
    orders.insert("elimination".into(), "block, eliminated variables first, grevlex in each block".into());
    Report {
        transfer_function: TransferFunctionReport {
            num: desc(rl.tf.num()),
            den: desc(rl.tf.den()),
            display: rl.tf.to_string(),
            pencil: rlalg_core::rootlocus::build_pencil(&rl.tf).to_string(),
        },
        basis: strings(rl.basis.elements()),
        homogenized: ideal_strings(&rl.homogenized),
        components: rl.components.iter().enumerate().map(|(i, c)| component(i, c)).collect(),
        removed: rl
            .decomposition
            .components
            .iter()
            .filter(|c| c.has_flag(ComponentFlag::ParameterTrivial))
            .map(|c| ideal_strings(&c.ideal))
            .collect(),
        dual: dual.map(dual_report),
        provenance: Provenance { orders, version: env!("CARGO_PKG_VERSION").to_string() },
        volatile: Volatile { timings_ms: timings },
    }
}

/// Every polynomial string in the report, paired with the ring it lives in.
pub fn polynomial_strings(r: &Report) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let mut add = |ring: &'static str, s: &String| out.push((ring, s.clone()));
    for s in &r.basis {
        add("x,y,kd,kn", s);
    }
    for s in &r.homogenized {
        add("x,y,z,kd,kn", s);
    }
    for c in &r.components {
        c.generators.iter().chain(&c.locus).chain(&c.parametrization).for_each(|s| add("x,y,z,kd,kn", s));
        c.affine_equation.iter().for_each(|s| add("x,y", s));
        c.intermediate.iter().for_each(|s| add("x,y,z,l", s));
    }
    if let Some(d) = &r.dual {
        for c in &d.components {
            c.generators.iter().chain(&c.curve).chain(&c.parametrization).for_each(|s| add("u,v,w,kd,kn", s));
            c.point_ideal.iter().flatten().for_each(|s| add("u,v,w,kd,kn", s));
            c.affine_equation.iter().for_each(|s| add("u,v", s));
            c.intermediate.iter().for_each(|s| add("u,v,w,l", s));
        }
    }
    out
}
