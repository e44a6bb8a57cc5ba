//! Witness regions: conjunctions of value, magnitude and sign constraints
//! over generalized monomials, with exact membership on curvettes.
//!
//! Nothing here proves that a region is connected. The checks are
//! membership of α and β, containment between regions on sampled points,
//! and constancy of signs of the g_i on sampled members.

mod build_d;
pub mod sampler;

pub use build_d::{build_d, build_d_any_order, Epsilon};

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::{GroupVec, Rat, Value};
use crate::curvette::SemiCurvette;
use crate::error::{Error, Result};
use crate::roots::{Evaluated, Factor, GenMonomial, RootSystem, StandardForm};

#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    /// Every variable has positive value (the point is centered).
    Centered,
    /// |c₁·m₁| ≥ |c₂·m₂|, or > when strict.
    MagnitudeGE { left: (Rat, GenMonomial), right: (Rat, GenMonomial), strict: bool },
    Sign { target: GenMonomial, sign: i8 },
    ValueLT { left: GenMonomial, right: GenMonomial },
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Centered => write!(f, "centered"),
            Constraint::MagnitudeGE { left, right, strict } => {
                let op = if *strict { ">" } else { ">=" };
                write!(f, "|{}*{}| {op} |{}*{}|", left.0, left.1, right.0, right.1)
            }
            Constraint::Sign { target, sign } => write!(f, "sgn({target}) = {sign}"),
            Constraint::ValueLT { left, right } => write!(f, "v({left}) < v({right})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tagged {
    pub constraint: Constraint,
    /// Which construction emitted it, e.g. "C:ValueLT:i=2,j=1".
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Region {
    pub sys: RootSystem,
    pub constraints: Vec<Tagged>,
    pub provenance: String,
}

impl Region {
    pub fn new(sys: RootSystem, provenance: impl Into<String>) -> Self {
        Region { sys, constraints: vec![], provenance: provenance.into() }
    }

    pub fn push(&mut self, constraint: Constraint, provenance: impl Into<String>) {
        self.constraints.push(Tagged { constraint, provenance: provenance.into() });
    }

    /// The same region without the constraints whose provenance matches.
    pub fn without(&self, provenance: &str) -> Region {
        let mut r = self.clone();
        r.constraints.retain(|t| t.provenance != provenance);
        r
    }

    /// Each constraint's truth value at δ.
    pub fn check(&self, delta: &SemiCurvette) -> Result<Vec<bool>> {
        let ev = self.sys.evaluate_all(delta)?;
        self.constraints.iter().map(|t| holds(&t.constraint, &ev)).collect()
    }

    pub fn member(&self, delta: &SemiCurvette) -> Result<bool> {
        Ok(self.check(delta)?.into_iter().all(|b| b))
    }

    /// Provenance of the first failing constraint, if any.
    pub fn first_failure(&self, delta: &SemiCurvette) -> Result<Option<String>> {
        let checks = self.check(delta)?;
        Ok(checks.iter().position(|b| !b).map(|i| self.constraints[i].provenance.clone()))
    }
}

/// Points where a denominator vanishes are outside every constraint that
/// mentions it.
fn vanishing_is_false(r: Result<bool>) -> Result<bool> {
    match r {
        Err(Error::VanishingEvaluation(_)) => Ok(false),
        other => other,
    }
}

fn holds(c: &Constraint, ev: &Evaluated) -> Result<bool> {
    match c {
        Constraint::Centered => {
            for f in (0..).map(Factor::Var).take_while(|f| ev.series_of(*f).is_ok()) {
                match ev.factor_value(f)? {
                    Value::Finite(v) if v.is_positive() => {}
                    _ => return Ok(false),
                }
            }
            Ok(true)
        }
        Constraint::Sign { target, sign } => vanishing_is_false(ev.sign(target).map(|s| s == *sign)),
        Constraint::ValueLT { left, right } => vanishing_is_false((|| Ok(ev.value(left)? < ev.value(right)?))()),
        Constraint::MagnitudeGE { left, right, strict } => {
            vanishing_is_false(ev.magnitude_ge(&left.0, &left.1, &right.0, &right.1, *strict))
        }
    }
}

fn sign_constraints(region: &mut Region, ev: &Evaluated, factors: &BTreeSet<Factor>, tag: &str) -> Result<()> {
    for f in factors {
        let s = ev.factor_sign(*f)?;
        if s == 0 {
            return Err(Error::VanishingEvaluation(format!("{f} vanishes at alpha")));
        }
        region.push(Constraint::Sign { target: GenMonomial::factor(*f, 1), sign: s }, format!("{tag}:Sign:{f}"));
    }
    Ok(())
}

fn dominant_factors(forms: &[StandardForm]) -> BTreeSet<Factor> {
    forms.iter().flat_map(|f| f.dominant().factors().collect::<Vec<_>>()).collect()
}

/// Value dominance of each dominant monomial over its tail, plus α's signs
/// on every factor of the dominants.
pub fn build_c(forms: &[StandardForm], sys: &RootSystem, alpha: &SemiCurvette) -> Result<Region> {
    let ev = sys.evaluate_all(alpha)?;
    let mut r = Region::new(sys.clone(), "C");
    r.push(Constraint::Centered, "C:Centered");
    for (i, f) in forms.iter().enumerate() {
        for (j, (_, m)) in f.tail().iter().enumerate() {
            r.push(
                Constraint::ValueLT { left: f.dominant().clone(), right: m.clone() },
                format!("C:ValueLT:i={},j={}", i + 1, j + 1),
            );
        }
    }
    sign_constraints(&mut r, &ev, &dominant_factors(forms), "C")?;
    Ok(r)
}

/// |dominant| > N_i·|c_ji·tail_j| for every tail term, plus the signs of
/// [`build_c`]. The coefficient c_ji is kept so that the N_i tail terms
/// together stay below the dominant whatever the size of the c_ji.
pub fn build_cprime(forms: &[StandardForm], sys: &RootSystem, alpha: &SemiCurvette) -> Result<Region> {
    let ev = sys.evaluate_all(alpha)?;
    let mut r = Region::new(sys.clone(), "C'");
    r.push(Constraint::Centered, "C':Centered");
    for (i, f) in forms.iter().enumerate() {
        let n = Rat::from_integer(f.tail().len().into());
        for (j, (c, m)) in f.tail().iter().enumerate() {
            r.push(
                Constraint::MagnitudeGE {
                    left: (Rat::from_integer(1.into()), f.dominant().clone()),
                    right: (&n * c, m.clone()),
                    strict: true,
                },
                format!("C':Magnitude:i={},j={}", i + 1, j + 1),
            );
        }
    }
    sign_constraints(&mut r, &ev, &dominant_factors(forms), "C'")?;
    Ok(r)
}

/// Constant terms of the given auxiliary factors, for [`strengthen_monomial`].
pub fn unit_values_at_origin(sys: &RootSystem, units: &[Factor]) -> Result<Vec<(Factor, Rat)>> {
    units.iter().map(|f| Ok((*f, sys.poly(*f)?.constant_term()))).collect()
}

fn unit_part(m: &GenMonomial, units: &[(Factor, Rat)]) -> Result<(Rat, GenMonomial)> {
    let mut c = Rat::from_integer(1.into());
    let mut rest = m.clone();
    for (f, u0) in units {
        let e = m.exponent(*f);
        if e == 0 {
            continue;
        }
        if u0.is_zero() {
            return Err(Error::NotAUnit(format!("{f} has zero constant term")));
        }
        let p = num_traits::pow(u0.abs(), e.unsigned_abs() as usize);
        c *= if e > 0 { p } else { p.recip() };
        rest = rest.with(*f, -e);
    }
    Ok((c, rest))
}

/// Replaces unit factors by constants with safety margins: a unit U with
/// U(0) = u₀ satisfies |u₀|/2 ≤ |U| ≤ 2|u₀| near the center, so
/// |c·U·m₁| ≥ |d·V·m₂| is implied by |(c·u₀/2)·m₁| ≥ |(2·d·v₀)·m₂|.
pub fn strengthen_monomial(region: &Region, units: &[(Factor, Rat)]) -> Result<Region> {
    for (f, u0) in units {
        if u0.is_zero() {
            return Err(Error::NotAUnit(format!("{f} has zero constant term")));
        }
    }
    let mut out = Region::new(region.sys.clone(), format!("{}+strengthened", region.provenance));
    let two = Rat::from_integer(2.into());
    for t in &region.constraints {
        match &t.constraint {
            Constraint::MagnitudeGE { left, right, strict } => {
                let (u, ml) = unit_part(&left.1, units)?;
                let (v, mr) = unit_part(&right.1, units)?;
                if ml == left.1 && mr == right.1 {
                    out.constraints.push(t.clone());
                    continue;
                }
                out.push(
                    Constraint::MagnitudeGE {
                        left: (&left.0 * &u / &two, ml),
                        right: (&two * &right.0 * &v, mr),
                        strict: *strict,
                    },
                    format!("{}:strengthened", t.provenance),
                );
            }
            _ => out.constraints.push(t.clone()),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleViolation {
    pub sample: usize,
    pub form: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SampleReport {
    pub sampled: usize,
    pub members: usize,
    pub violations: Vec<SampleViolation>,
}

/// On sampled members δ of the region: g_i(δ) ≠ 0, its sign equals the
/// dominant's sign at δ, and equals the sign of g_i at α.
pub fn sign_constancy_sample(
    region: &Region,
    forms: &[StandardForm],
    alpha: &SemiCurvette,
    seed: u64,
    count: usize,
) -> Result<SampleReport> {
    let polys: Vec<_> = forms.iter().map(|f| f.to_poly(&region.sys)).collect::<Result<_>>()?;
    let at_alpha: Vec<i8> = polys.iter().map(|p| alpha.sign(p)).collect::<Result<_>>()?;
    let mut rep = SampleReport { sampled: count, ..Default::default() };
    for (k, delta) in sampler::samples(alpha, seed, count)?.into_iter().enumerate() {
        if !region.member(&delta)? {
            continue;
        }
        rep.members += 1;
        let ev = region.sys.evaluate_all(&delta)?;
        for (i, (f, p)) in forms.iter().zip(&polys).enumerate() {
            let s = delta.sign(p)?;
            let d = ev.sign(f.dominant())?;
            if s == 0 || s != d || s != at_alpha[i] {
                rep.violations.push(SampleViolation {
                    sample: k,
                    form: i + 1,
                    detail: format!("sign(g)={s}, sign(dominant)={d}, sign at alpha={}", at_alpha[i]),
                });
            }
        }
    }
    Ok(rep)
}

/// Sample indices that are members of `inner` but not of `outer`.
pub fn containment_sample(inner: &Region, outer: &Region, alpha: &SemiCurvette, seed: u64, count: usize) -> Result<(usize, Vec<usize>)> {
    let mut members = 0;
    let mut bad = Vec::new();
    for (k, delta) in sampler::samples(alpha, seed, count)?.into_iter().enumerate() {
        if inner.member(&delta)? {
            members += 1;
            if !outer.member(&delta)? {
                bad.push(k);
            }
        }
    }
    Ok((members, bad))
}

/// ν(Q′) at a point, for ordering roots before [`build_d`].
pub fn q_prime_values(sys: &RootSystem, delta: &SemiCurvette) -> Result<Vec<GroupVec>> {
    sys.roots().iter().map(|q| q.q_prime_value(delta)?.expect_finite(&q.to_string())).collect()
}

#[cfg(test)]
mod tests;
