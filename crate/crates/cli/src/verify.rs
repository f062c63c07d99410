//! Self-checks: numeric samples against the components, biduals, degree law.

use rlalg_core::dual::{bidual, DegreeLawStatus, DualComponent};
use rlalg_core::numeric::{residual, sample_root_locus};
use rlalg_core::rootlocus::RootLocus;
use rlalg_core::{ideal_equal, AlgebraError, MonomialOrder, Var};

/// Biduals of dual curves above this degree are skipped; the elimination
/// grows too large for an interactive check.
pub const BIDUAL_MAX_DEGREE: u32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

/// `λ_k = k / (n - k)`, spreading `n` samples over `[0, n - 1]` with more
/// of them near the poles.
pub fn lambda_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| k as f64 / (n - k) as f64).collect()
}

/// Smallest over components of the largest normalized generator residual.
pub fn union_residual(rl: &RootLocus, lambda: f64, x: f64, y: f64) -> f64 {
    rl.components
        .iter()
        .map(|c| {
            let at = |v: Var| match v {
                Var::X => x,
                Var::Y => y,
                Var::Z | Var::Kd => 1.0,
                Var::Kn => lambda,
                _ => 0.0,
            };
            c.ideal.generators().iter().map(|g| residual(g, &at).normalized()).fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

pub fn oracle(rl: &RootLocus, samples: usize, tol: f64) -> Result<Check, AlgebraError> {
    let mut worst = (0.0f64, 0.0, 0.0, 0.0);
    let (mut total, mut bad) = (0usize, 0usize);
    for s in sample_root_locus(&rl.tf, &lambda_grid(samples))? {
        for z in &s.roots {
            let r = union_residual(rl, s.lambda, z.re, z.im);
            total += 1;
            if r.is_nan() || r > tol {
                bad += 1;
            }
            if r.is_nan() || r > worst.0 {
                worst = (r, s.lambda, z.re, z.im);
            }
        }
    }
    let (r, l, x, y) = worst;
    let sign = if y < 0.0 { '-' } else { '+' };
    let detail = format!(
        "{samples} samples, {total} roots, {bad} above tol {tol:e}; worst normalized residual {r:.3e} at λ = {l}, s = {x} {sign} {}i",
        y.abs()
    );
    Ok(Check { name: "oracle-agreement".into(), outcome: if bad == 0 { Outcome::Pass } else { Outcome::Fail }, detail })
}

pub fn bidual_checks(rl: &RootLocus, duals: &[DualComponent]) -> Result<Vec<Check>, AlgebraError> {
    let mut out = Vec::new();
    for (i, (c, d)) in rl.components.iter().zip(duals).enumerate() {
        let name = format!("bidual[{i}]");
        let deg = d.curve.as_ref().map(|g| g.degree_in(&[Var::U, Var::V, Var::W])).unwrap_or(0);
        if deg > BIDUAL_MAX_DEGREE {
            out.push(Check { name, outcome: Outcome::Skip, detail: format!("dual curve degree {deg} exceeds {BIDUAL_MAX_DEGREE}") });
            continue;
        }
        let back = bidual(d)?;
        let ok = ideal_equal(&back, &c.ideal, MonomialOrder::GrevLex)?;
        let detail = if ok { "recovers the component ideal".to_string() } else { format!("got {:?}", back.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>()) };
        out.push(Check { name, outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail });
    }
    Ok(out)
}

pub fn degree_law_checks(duals: &[DualComponent]) -> Vec<Check> {
    duals
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let law = &d.degree_law;
            let outcome = match law.status {
                DegreeLawStatus::Holds => Outcome::Pass,
                DegreeLawStatus::Violated => Outcome::Fail,
                DegreeLawStatus::SkippedSingular | DegreeLawStatus::SkippedParametric => Outcome::Skip,
            };
            let detail = format!(
                "{}: source degree {}, dual degree {}, d(d-1) = {} for `{}`",
                law.status.name(),
                law.source_degree,
                law.dual_degree,
                law.expected(),
                law.source
            );
            Check { name: format!("degree-law[{i}]"), outcome, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rlalg_core::dual::dualize_root_locus;
    use rlalg_core::{decompose_root_locus, TransferFunction};

    #[test]
    fn grid_starts_at_poles() {
        let g = lambda_grid(4);
        assert_eq!(g, vec![0.0, 1.0 / 3.0, 1.0, 3.0]);
    }

    #[test]
    fn checks_pass_and_fail_as_expected() {
        let rl = decompose_root_locus(&TransferFunction::from_i64(&[1, 1], &[1, 0, 0]).unwrap()).unwrap();
        assert_eq!(oracle(&rl, 50, 1e-8).unwrap().outcome, Outcome::Pass);
        assert_eq!(oracle(&rl, 50, 1e-30).unwrap().outcome, Outcome::Fail);
        let duals = dualize_root_locus(&rl).unwrap();
        assert!(bidual_checks(&rl, &duals).unwrap().iter().all(|c| c.outcome == Outcome::Pass));
        let laws = degree_law_checks(&duals);
        assert_eq!(laws[0].outcome, Outcome::Skip);
        assert_eq!(laws[1].outcome, Outcome::Pass);
    }
}
