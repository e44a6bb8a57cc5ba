use super::*;
use crate::algebra::{int, rat, Poly};
use crate::demo;
use crate::syzygy::build_syzygy;

struct Setup {
    sys: RootSystem,
    forms: Vec<StandardForm>,
    alpha: SemiCurvette,
    beta: SemiCurvette,
}

fn setup() -> Setup {
    let sys = demo::root_system();
    let (alpha, beta) = demo::region_pair();
    let forms = demo::standard_forms(&sys, &alpha, &beta).unwrap();
    Setup { sys, forms, alpha, beta }
}

#[test]
fn c_contains_both_points() {
    let s = setup();
    let c = build_c(&s.forms, &s.sys, &s.alpha).unwrap();
    assert!(c.member(&s.alpha).unwrap());
    assert!(c.member(&s.beta).unwrap());
    let empty = build_c(&[], &s.sys, &s.alpha).unwrap();
    assert_eq!(empty.constraints.len(), 1);
    assert!(empty.member(&s.alpha).unwrap());
    // Flip the sign of f1 at a point: c < 2b.
    let flipped = demo::alpha_with_tail(&int(2), &int(3), &int(1));
    assert!(!c.member(&flipped).unwrap());
}

#[test]
fn cprime_counts_and_membership() {
    let s = setup();
    let one = vec![s.forms[0].clone()];
    let r = build_cprime(&one, &s.sys, &s.alpha).unwrap();
    let mags = r.constraints.iter().filter(|t| matches!(t.constraint, Constraint::MagnitudeGE { .. })).count();
    assert_eq!(mags, 1);
    let cp = build_cprime(&s.forms, &s.sys, &s.alpha).unwrap();
    assert!(cp.member(&s.alpha).unwrap() && cp.member(&s.beta).unwrap());
    let c = build_c(&s.forms, &s.sys, &s.alpha).unwrap();
    let (members, bad) = containment_sample(&cp, &c, &s.alpha, 7, 100).unwrap();
    assert!(members > 0);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn sign_constancy() {
    let s = setup();
    let c = build_c(&s.forms, &s.sys, &s.alpha).unwrap();
    let rep = sign_constancy_sample(&c, &s.forms, &s.alpha, 42, 100).unwrap();
    assert!(rep.members > 0);
    assert!(rep.violations.is_empty(), "{:?}", rep.violations);
    let corrupted = c.without("C:ValueLT:i=1,j=1");
    let rep = sign_constancy_sample(&corrupted, &s.forms, &s.alpha, 42, 100).unwrap();
    assert!(!rep.violations.is_empty());
    assert_eq!(sign_constancy_sample(&c, &s.forms, &s.alpha, 42, 0).unwrap(), SampleReport::default());
}

#[test]
fn region_d() {
    let s = setup();
    let r = s.sys.roots();
    let syz = build_syzygy(&r[0], &r[1], &r[2], &demo::weights()).unwrap();
    let (d, eps) = build_d(&s.forms, &s.sys, &syz, [2, 0, 1], &s.alpha, &s.beta, &Epsilon::Auto).unwrap();
    assert_eq!(eps, rat(2, 5));
    assert!(d.member(&s.alpha).unwrap() && d.member(&s.beta).unwrap());
    let rep = sign_constancy_sample(&d, &s.forms, &s.alpha, 3, 100).unwrap();
    assert!(rep.violations.is_empty(), "{:?}", rep.violations);
    let err = build_d(&s.forms, &s.sys, &syz, [2, 0, 1], &s.alpha, &s.beta, &Epsilon::Fixed(int(1)));
    assert!(matches!(err, Err(Error::InvalidEpsilon(_))));
    let err = build_d(&s.forms, &s.sys, &syz, [0, 1, 2], &s.alpha, &s.beta, &Epsilon::Auto);
    assert!(matches!(err, Err(Error::InvalidEpsilon(_))));
    let (roles, d2, _) = build_d_any_order(&s.forms, &s.sys, &syz, &s.alpha, &s.beta, &Epsilon::Auto).unwrap();
    assert!(d2.member(&s.alpha).unwrap() && d2.member(&s.beta).unwrap(), "{roles:?}");
}

#[test]
fn strengthening() {
    // Units W1 = 3 + x, W2 = 1 + y on top of the plain variables.
    let mut sys = RootSystem::new(3, vec![]).unwrap();
    let w1 = sys.add_aux(Poly::parse(3, "3 + x").unwrap()).unwrap();
    let w2 = sys.add_aux(Poly::parse(3, "1 + y").unwrap()).unwrap();
    let mut r = Region::new(sys.clone(), "test");
    let left = GenMonomial::factor(w1, 1).with(Factor::Var(0), 1);
    let right = GenMonomial::factor(w2, 1).with(Factor::Var(1), 1);
    r.push(Constraint::MagnitudeGE { left: (int(1), left), right: (int(1), right), strict: false }, "m");
    r.push(Constraint::Sign { target: GenMonomial::var(0), sign: 1 }, "s");
    let units = unit_values_at_origin(&sys, &[w1, w2]).unwrap();
    let st = strengthen_monomial(&r, &units).unwrap();
    assert_eq!(
        st.constraints[0].constraint,
        Constraint::MagnitudeGE { left: (rat(3, 2), GenMonomial::var(0)), right: (int(2), GenMonomial::var(1)), strict: false }
    );
    assert_eq!(st.constraints[1], r.constraints[1]);
    let alpha = demo::alpha(&int(1), &int(3));
    let (members, bad) = containment_sample(&st, &r, &alpha, 11, 100).unwrap();
    assert!(members > 0 && bad.is_empty());
    assert!(matches!(strengthen_monomial(&r, &[(w1, int(0))]), Err(Error::NotAUnit(_))));
    // No units: unchanged.
    let plain = strengthen_monomial(&r, &[]).unwrap();
    assert_eq!(plain.constraints, r.constraints);
}
