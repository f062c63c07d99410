//! Exact computer-algebra toolkit for splitting a root locus into its
//! irreducible plane-curve components and computing their dual curves.

pub mod decompose;
pub mod dual;
pub mod error;
pub mod factor;
pub mod groebner;
pub mod numeric;
pub mod order;
mod parse;
pub mod points;
pub mod poly;
pub mod rootlocus;
pub mod univariate;

pub use dual::{assemble_adrl, bidual, dual_curve, dual_parametrization, dualize_component, incidence_ideal, Adrl, DualComponent};
pub use decompose::{filter_parameter_trivial, minimal_components, ComponentFlag, ComponentSet};
pub use error::{AlgebraError, PolyError};
pub use factor::factor_generator;
pub use groebner::{buchberger, contains, eliminate, ideal_equal, intersect, normal_form, GroebnerBasis, Ideal};
pub use order::MonomialOrder;
pub use points::{merge_points, MergedPoint, PointSet, ProjectivePoint};
pub use poly::{Monomial, Polynomial, Rat, Var, VarSet};
pub use rootlocus::{decompose_root_locus, RLComponent, RootLocus, TransferFunction};
pub use univariate::UniPoly;
