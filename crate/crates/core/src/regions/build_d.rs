//! The region D for three comparable roots.
//!
//! Q₆ is eliminated through the syzygy, Q₆ = −(ω₄/ω₆)·Q₄ − (ω₅/ω₆)·Q₅.
//! Tails are rewritten with that identity. In dominants Q₆ is replaced by
//! ε·(ω₄/ω₆)·Q₄, which is a lower bound for |Q₆| wherever
//! (1 − ε)·|(ω₄/ω₆)·Q₄| > |(ω₅/ω₆)·Q₅|.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use super::{sign_constraints, Constraint, Region};
use crate::algebra::{Rat, Value};
use crate::curvette::SemiCurvette;
use crate::error::{Error, Result};
use crate::roots::{Evaluated, Factor, GenMonomial, RootSystem, StandardForm};
use crate::syzygy::SyzygyCertificate;

#[derive(Clone, Debug, PartialEq)]
pub enum Epsilon {
    Auto,
    Fixed(Rat),
}

/// |in(b)/in(a)| read from leading data: zero when b has strictly larger
/// value, None when b has strictly smaller value.
fn leading_ratio(ev: &Evaluated, a: &GenMonomial, b: &GenMonomial) -> Result<Option<Rat>> {
    let one = Rat::one();
    let (sa, sb) = (ev.series(&one, a)?, ev.series(&one, b)?);
    let (va, vb) = (sa.valuation()?, sb.valuation()?);
    Ok(match va.cmp(&vb) {
        std::cmp::Ordering::Less => Some(Rat::zero()),
        std::cmp::Ordering::Greater => None,
        std::cmp::Ordering::Equal => {
            let ca = sa.leading().expect("finite value").1;
            let cb = sb.leading().expect("finite value").1;
            Some((cb / ca).abs())
        }
    })
}

fn binomial(k: i64, l: i64) -> Rat {
    let mut r = Rat::one();
    for t in 0..l {
        r = r * Rat::from_integer((k - t).into()) / Rat::from_integer((t + 1).into());
    }
    r
}

/// Builds D with `roles` = root indices of (Q₄, Q₅, Q₆) in `sys`. Returns
/// the region and the ε used.
pub fn build_d(
    forms: &[StandardForm],
    sys: &RootSystem,
    syz: &SyzygyCertificate,
    roles: [usize; 3],
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    eps: &Epsilon,
) -> Result<(Region, Rat)> {
    if syz.degenerate {
        return Err(Error::Precondition("degenerate syzygy certificate".into()));
    }
    let mut sys2 = sys.clone();
    let mut w = Vec::new();
    for &r in &roles {
        let q = sys.roots().get(r).ok_or_else(|| Error::Precondition(format!("no root {r}")))?;
        let k = syz
            .roots
            .iter()
            .position(|s| s == q)
            .ok_or_else(|| Error::Precondition(format!("{q} is not in the syzygy")))?;
        w.push(sys2.add_aux(syz.omegas[k].clone())?);
    }
    let (q4, q5, q6) = (Factor::Root(roles[0]), Factor::Root(roles[1]), Factor::Root(roles[2]));
    // ρ = (ω₄/ω₆)·Q₄, σ = (ω₅/ω₆)·Q₅
    let rho = GenMonomial::from_pairs([(w[0], 1), (w[2], -1), (q4, 1)]);
    let sigma = GenMonomial::from_pairs([(w[1], 1), (w[2], -1), (q5, 1)]);
    let (ea, eb) = (sys2.evaluate_all(alpha)?, sys2.evaluate_all(beta)?);

    let eps = match eps {
        Epsilon::Fixed(e) => e.clone(),
        Epsilon::Auto => {
            let a4 = GenMonomial::from_pairs([(w[0], 1), (q4, 1)]);
            let a5 = GenMonomial::from_pairs([(w[1], 1), (q5, 1)]);
            let ra = leading_ratio(&ea, &a4, &a5)?;
            let rb = leading_ratio(&eb, &a4, &a5)?;
            match (ra, rb) {
                (Some(ra), Some(rb)) => {
                    let r = ra.max(rb);
                    if r.is_zero() {
                        Rat::new(1.into(), 2.into())
                    } else {
                        (Rat::one() - r) / Rat::from_integer(2.into())
                    }
                }
                _ => return Err(Error::InvalidEpsilon("|(w5/w6)Q5| dominates |(w4/w6)Q4|".into())),
            }
        }
    };
    if eps <= Rat::zero() || eps >= Rat::one() {
        return Err(Error::InvalidEpsilon(format!("{eps} is not in (0,1)")));
    }
    let one_minus = Rat::one() - &eps;
    let ratio = Constraint::MagnitudeGE { left: (one_minus.clone(), rho.clone()), right: (Rat::one(), sigma.clone()), strict: true };
    for (name, ev) in [("alpha", &ea), ("beta", &eb)] {
        if !super::holds(&ratio, ev)? {
            return Err(Error::InvalidEpsilon(format!("(1-{eps})|(w4/w6)Q4| > |(w5/w6)Q5| fails at {name}")));
        }
    }

    // A tie between ν(Q′₆) and ν(Q′₄) or ν(Q′₅) at only one of the points
    // is the limit case; it is built the same way and flagged.
    let tie = |delta: &SemiCurvette| -> Result<bool> {
        let v: Vec<Value> = roles.iter().map(|&r| sys.roots()[r].q_prime_value(delta)).collect::<Result<_>>()?;
        Ok(v[2] == v[0] || v[2] == v[1])
    };
    let tie_flag = tie(alpha)? != tie(beta)?;
    let mut region = Region::new(
        sys2.clone(),
        format!("D:roles=Q{},Q{},Q{};eps={eps}{}", roles[0] + 1, roles[1] + 1, roles[2] + 1, if tie_flag { ";tie-at-one-point" } else { "" }),
    );
    region.push(Constraint::Centered, "D:Centered");

    let mut dominant_factors = BTreeSet::new();
    for (i, f) in forms.iter().enumerate() {
        let mut tail: BTreeMap<GenMonomial, Rat> = BTreeMap::new();
        for (c, m) in f.tail() {
            let k = m.exponent(q6);
            let base = m.clone().with(q6, -k);
            let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            for l in 0..=k {
                let mono = base.mul(&rho.pow(l)).mul(&sigma.pow(k - l));
                let coeff = c * &sign * binomial(k, l);
                let slot = tail.entry(mono.clone()).or_insert_with(Rat::zero);
                *slot += coeff;
                if slot.is_zero() {
                    tail.remove(&mono);
                }
            }
        }
        let e = f.dominant().exponent(q6);
        let dom = f.dominant().clone().with(q6, -e).mul(&rho.pow(e));
        let dom_c = num_traits::pow(eps.clone(), e as usize);
        dominant_factors.extend(dom.factors());
        let n = Rat::from_integer(tail.len().into());
        for (j, (m, c)) in tail.iter().enumerate() {
            region.push(
                Constraint::MagnitudeGE { left: (dom_c.clone(), dom.clone()), right: (&n * c, m.clone()), strict: true },
                format!("D:Magnitude:i={},j={}", i + 1, j + 1),
            );
        }
    }
    region.push(ratio, "D:Ratio");
    let mut signs: BTreeSet<Factor> = (0..sys.nvars()).map(Factor::Var).collect();
    signs.insert(q4);
    signs.insert(q5);
    signs.extend(dominant_factors);
    sign_constraints(&mut region, &ea, &signs, "D")?;
    Ok((region, eps))
}

/// Tries the six role assignments of the syzygy's roots in lexicographic
/// order and returns the first that builds.
pub fn build_d_any_order(
    forms: &[StandardForm],
    sys: &RootSystem,
    syz: &SyzygyCertificate,
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    eps: &Epsilon,
) -> Result<([usize; 3], Region, Rat)> {
    let idx: Vec<usize> = syz
        .roots
        .iter()
        .map(|q| sys.roots().iter().position(|r| r == q).ok_or_else(|| Error::Precondition(format!("{q} not in the root system"))))
        .collect::<Result<_>>()?;
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut last = Error::Precondition("no role assignment".into());
    for p in perms {
        let roles = p.map(|k| idx[k]);
        match build_d(forms, sys, syz, roles, alpha, beta, eps) {
            Ok((r, e)) => return Ok((roles, r, e)),
            Err(e @ (Error::InvalidEpsilon(_) | Error::VanishingEvaluation(_))) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}
