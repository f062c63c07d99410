use super::*;
use crate::poly::Var::*;

fn xykk() -> VarSet {
    VarSet::of(&[X, Y, Kd, Kn])
}

fn xyzkk() -> VarSet {
    VarSet::of(&[X, Y, Z, Kd, Kn])
}

fn p(vars: &VarSet, s: &str) -> Polynomial {
    Polynomial::parse(s, vars).unwrap()
}

#[test]
fn double_integrator_basis_matches_printed_generators() {
    let vars = xykk();
    let i = Ideal::parse(&vars, &["kd*(x^2 - y^2) + kn*(x + 1)", "2*kd*x*y + kn*y"]).unwrap();
    let gb = buchberger(&i, MonomialOrder::GrevLex);
    let mut got: Vec<Polynomial> = gb.elements().to_vec();
    let mut want = vec![
        p(&vars, "2*x*y*kd + y*kn"),
        p(&vars, "x^2*kd - y^2*kd + x*kn + kn"),
        p(&vars, "x^2*y*kn + y^3*kn + 2*x*y*kn"),
        p(&vars, "2*y^3*kd - x*y*kn - 2*y*kn"),
    ];
    let key = |q: &Polynomial| q.to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    assert_eq!(got, want);
    assert!(gb.satisfies_buchberger_criterion());
    assert!(gb.is_reduced());
}

#[test]
fn trivial_bases() {
    let vars = VarSet::of(&[X, Y]);
    let gb = buchberger(&Ideal::parse(&vars, &["x", "y"]).unwrap(), MonomialOrder::Lex);
    assert_eq!(gb.elements(), &[p(&vars, "y"), p(&vars, "x")]);
    let zero = buchberger(&Ideal::new(&vars, vec![Polynomial::zero(&vars)]).unwrap(), MonomialOrder::Lex);
    assert!(zero.is_empty());
    let unit = buchberger(&Ideal::parse(&vars, &["x", "x + 1"]).unwrap(), MonomialOrder::GrevLex);
    assert!(unit.is_unit());
}

#[test]
fn normal_form_examples() {
    let vars = xyzkk();
    let g1 = p(&vars, "2*x*y*kd + y*z*kn");
    let gb = buchberger(&Ideal::new(&vars, vec![g1.clone()]).unwrap(), MonomialOrder::GrevLex);
    assert!(normal_form(&g1, &gb).unwrap().is_zero());

    let aff = xykk();
    let j1 = Ideal::parse(&aff, &["y", "x^2*kd + x*kn + kn"]).unwrap();
    let gb = buchberger(&j1, MonomialOrder::GrevLex);
    let u = p(&aff, "kd*(x^2 - y^2) + kn*(x + 1)");
    assert!(normal_form(&u, &gb).unwrap().is_zero());

    let xy = VarSet::of(&[X, Y]);
    let gb = buchberger(&Ideal::parse(&xy, &["y"]).unwrap(), MonomialOrder::GrevLex);
    assert_eq!(normal_form(&p(&xy, "x"), &gb).unwrap(), p(&xy, "x"));
}

#[test]
fn normal_form_is_exact_remainder() {
    let xy = VarSet::of(&[X, Y]);
    let gb = buchberger(&Ideal::parse(&xy, &["2*x - 1"]).unwrap(), MonomialOrder::Lex);
    // x^2 + y ≡ 1/4 + y
    assert_eq!(normal_form(&p(&xy, "x^2 + y"), &gb).unwrap(), p(&xy, "y + 1/4"));
    assert_eq!(normal_form(&p(&xy, "3/7*x"), &gb).unwrap(), p(&xy, "3/14"));
}

#[test]
fn membership() {
    let aff = xykk();
    let j1 = Ideal::parse(&aff, &["y", "x^2*kd + x*kn + kn"]).unwrap();
    assert!(contains(&j1, &p(&aff, "kd*(x^2 - y^2) + kn*(x + 1)")).unwrap());
    let kk = Ideal::parse(&aff, &["kd", "kn"]).unwrap();
    assert!(!contains(&kk, &Polynomial::one(&aff)).unwrap());
    let xi = Ideal::parse(&aff, &["x"]).unwrap();
    assert!(contains(&xi, &p(&aff, "x*y + x")).unwrap());
}

#[test]
fn equality() {
    let xy = VarSet::of(&[X, Y]);
    let a = Ideal::parse(&xy, &["x", "y"]).unwrap();
    let b = Ideal::parse(&xy, &["y", "x + y"]).unwrap();
    assert!(ideal_equal(&a, &b, MonomialOrder::GrevLex).unwrap());
    let c = Ideal::parse(&xy, &["x"]).unwrap();
    let d = Ideal::parse(&xy, &["x^2"]).unwrap();
    assert!(!ideal_equal(&c, &d, MonomialOrder::GrevLex).unwrap());
}

#[test]
fn elimination_examples() {
    let xy = VarSet::of(&[X, Y]);
    let e = eliminate(&Ideal::parse(&xy, &["x - y"]).unwrap(), &[X]).unwrap();
    assert!(e.is_zero_ideal());
    assert_eq!(e.varset(), &VarSet::of(&[Y]));

    let vars = VarSet::of(&[X, Y, Z, L, U, V, W]);
    let inc = Ideal::parse(&vars, &["x^2 + y^2 + 2*x*z", "u - l*(2*x + 2*z)", "v - 2*l*y", "w - 2*l*x"]).unwrap();
    let e = eliminate(&inc, &[X, Y, Z, L]).unwrap();
    let uvw = VarSet::of(&[U, V, W]);
    assert_eq!(e.generators(), &[p(&uvw, "v^2 + 2*u*w - w^2")]);
}

#[test]
fn elimination_with_parameters_contains_dual_parametrization() {
    let vars = VarSet::of(&[X, Y, Z, L, Kd, Kn, U, V, W]);
    let inc = Ideal::parse(
        &vars,
        &["x^2 + y^2 + 2*x*z", "2*x*kd + z*kn", "u - l*(2*x + 2*z)", "v - 2*l*y", "w - 2*l*x"],
    )
    .unwrap();
    let e = eliminate(&inc, &[X, Y, Z, L]).unwrap();
    let kept = VarSet::of(&[Kd, Kn, U, V, W]);
    assert!(e.generators().iter().all(|g| g.varset() == &kept));
    assert!(contains(&e, &p(&kept, "kn*u + (2*kd - kn)*w")).unwrap());
}

#[test]
fn intersection_examples() {
    let xy = VarSet::of(&[X, Y]);
    let i = intersect(&Ideal::parse(&xy, &["x"]).unwrap(), &Ideal::parse(&xy, &["y"]).unwrap()).unwrap();
    assert!(ideal_equal(&i, &Ideal::parse(&xy, &["x*y"]).unwrap(), MonomialOrder::GrevLex).unwrap());
    let a = Ideal::parse(&xy, &["x^2 - y", "x*y"]).unwrap();
    let aa = intersect(&a, &a).unwrap();
    assert!(ideal_equal(&aa, &a, MonomialOrder::GrevLex).unwrap());
    let tagged = VarSet::of(&[X, T]);
    let bad = Ideal::parse(&tagged, &["x"]).unwrap();
    assert!(matches!(intersect(&bad, &bad), Err(AlgebraError::TagVariableInUse(T))));
}

#[test]
fn homogeneous_inputs_give_homogeneous_basis() {
    let vars = xyzkk();
    let i = Ideal::parse(
        &vars,
        &["2*x*y*kd + y*z*kn", "x^2*kd - y^2*kd + x*z*kn + z^2*kn", "x^2*y*kn + y^3*kn + 2*x*y*z*kn", "2*y^3*kd - x*y*z*kn - 2*y*z^2*kn"],
    )
    .unwrap();
    let gb = buchberger(&i, MonomialOrder::GrevLex);
    assert!(gb.elements().iter().all(Polynomial::is_homogeneous));
    assert!(gb.satisfies_buchberger_criterion());
}
