//! The two-parameter family of curvettes on the monomial curve (t³, t⁴, t⁵)
//! used throughout the book and the tests:
//!
//! x = t^(0,3), y = t^(0,4) + b·t^(1,0), z = t^(0,5) + c·t^(1,1)
//!
//! with the three binomials f₁ = xz − y², f₂ = x³ − yz, f₃ = x²y − z².

use crate::algebra::{int, GenSeries, GroupVec, Poly, Rat, SignChar};
use crate::curvette::{SemiCurvette, Weights};
use crate::error::Result;
use crate::roots::{BinomialRoot, GenMonomial, RootSystem, StandardForm};

/// The curvette with parameters (b, c) and all t-powers positive.
pub fn alpha(b: &Rat, c: &Rat) -> SemiCurvette {
    alpha_with_tail(b, c, &int(0))
}

/// Same family with an extra term e·t^(1,2) in z. The extra term does not
/// change any leading data at generic (b, c); it decides the sign of f₁ on
/// the locus c = 2b.
pub fn alpha_with_tail(b: &Rat, c: &Rat, e: &Rat) -> SemiCurvette {
    let x = GenSeries::from_int_terms(2, &[(int(1), &[0, 3])]);
    let y = GenSeries::from_int_terms(2, &[(int(1), &[0, 4]), (b.clone(), &[1, 0])]);
    let z = GenSeries::from_int_terms(2, &[(int(1), &[0, 5]), (c.clone(), &[1, 1]), (e.clone(), &[1, 2])]);
    SemiCurvette::new(vec![x, y, z], SignChar::positive(2)).expect("valid curvette")
}

/// f₁, f₂, f₃.
pub fn fs() -> [Poly; 3] {
    [
        Poly::parse(3, "x*z - y^2").unwrap(),
        Poly::parse(3, "x^3 - y*z").unwrap(),
        Poly::parse(3, "x^2*y - z^2").unwrap(),
    ]
}

/// y·f₁ + (1/5)·x·f₂, which changes sign between (b,c) = (1,3) and (2,5).
pub fn certificate_element() -> Poly {
    Poly::parse(3, "y*(x*z - y^2) + 1/5*x*(x^3 - y*z)").unwrap()
}

/// Weights ((0,3),(0,4),(0,5)).
pub fn weights() -> Weights {
    Weights::ints(&[3, 4, 5], 2).unwrap()
}

/// The value (1,8) of the separating ideal for the default pair.
pub fn mu() -> GroupVec {
    GroupVec::ints(&[1, 8])
}

/// Default pair α = (1,3), β = (2,5).
pub fn default_pair() -> (SemiCurvette, SemiCurvette) {
    (alpha(&int(1), &int(3)), alpha(&int(2), &int(5)))
}


/// Q1, Q2, Q3 = f₁, f₂, f₃ as roots in x, y, z.
pub fn root_system() -> RootSystem {
    let roots = fs().iter().map(|f| BinomialRoot::from_poly(f).expect("binomial")).collect();
    RootSystem::new(3, roots).expect("three roots in three variables")
}

/// The pair used for regions: the default pair with tail e = 1.
pub fn region_pair() -> (SemiCurvette, SemiCurvette) {
    (alpha_with_tail(&int(1), &int(3), &int(1)), alpha_with_tail(&int(2), &int(5), &int(1)))
}

/// g₁ = Q1 + 3·Q2, g₂ = Q2 − 2·u1·Q1, g₃ = u1² + 5·Q3 and g₄ = Q3, in
/// standard form at both points.
pub fn standard_forms(sys: &RootSystem, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<Vec<StandardForm>> {
    let (ea, eb) = (sys.evaluate_all(alpha)?, sys.evaluate_all(beta)?);
    let pts = [&ea, &eb];
    let q = GenMonomial::root;
    let u1 = GenMonomial::var(0);
    Ok(vec![
        StandardForm::new(q(0), vec![(int(3), q(1))], &pts)?,
        StandardForm::new(q(1), vec![(int(-2), u1.mul(&q(0)))], &pts)?,
        StandardForm::new(u1.pow(2), vec![(int(5), q(2))], &pts)?,
        StandardForm::new(q(2), vec![], &pts)?,
    ])
}
