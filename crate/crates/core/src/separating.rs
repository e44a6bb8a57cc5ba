//! Values of the separating ideal, bounded by explicit sign changers.
//!
//! The ideal itself is never built. An upper bound comes with a certificate
//! (an element that changes sign between α and β); the exhaustive search
//! shows that no sign changer below a given value exists in a declared
//! finite family.

use num_traits::{One, Zero};

use crate::algebra::{GenSeries, GroupVec, Poly, Rat, Value};
use crate::curvette::{changes_sign, signs_change, SemiCurvette};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SignChangerCertificate {
    pub element: Poly,
    pub value_alpha: GroupVec,
    pub value_beta: Value,
    pub signs: (i8, i8),
}

impl SignChangerCertificate {
    pub fn new(element: Poly, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<Self> {
        let (sa, sb) = (alpha.sign(&element)?, beta.sign(&element)?);
        if !signs_change(sa, sb) {
            return Err(Error::Precondition(format!("{element} does not change sign")));
        }
        let value_alpha = alpha.value(&element)?.expect_finite("sign changer")?;
        let value_beta = beta.value(&element)?;
        Ok(SignChangerCertificate { element, value_alpha, value_beta, signs: (sa, sb) })
    }

    /// Re-evaluates the element and compares with the stored data.
    pub fn revalidate(&self, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<bool> {
        Ok(changes_sign(&self.element, alpha, beta)?
            && alpha.value(&self.element)? == Value::Finite(self.value_alpha.clone())
            && beta.value(&self.element)? == self.value_beta
            && (alpha.sign(&self.element)?, beta.sign(&self.element)?) == self.signs)
    }
}

/// The family searched by [`exhaustive_min_search`]: elements m·b and
/// m₁·b_p + s·m₂·b_q with monomials of total degree at most `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchSpace {
    pub basis: Vec<Poly>,
    pub degree: u32,
    pub bound: GroupVec,
}

/// Smallest α-value among the candidates that change sign.
pub fn mu_upper_bound(candidates: &[Poly], alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<(GroupVec, SignChangerCertificate)> {
    let mut best: Option<SignChangerCertificate> = None;
    for f in candidates {
        if !changes_sign(f, alpha, beta)? {
            continue;
        }
        let Value::Finite(v) = alpha.value(f)? else { continue };
        if best.as_ref().is_none_or(|b| v < b.value_alpha) {
            best = Some(SignChangerCertificate::new(f.clone(), alpha, beta)?);
        }
    }
    best.map(|c| (c.value_alpha.clone(), c)).ok_or(Error::NoSignChanger)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    /// Number of products m·b.
    pub generators: usize,
    /// Number of elements whose signs were evaluated.
    pub evaluated: usize,
    /// Pairs skipped because their value could not beat the current best.
    pub pruned_pairs: usize,
    /// The smallest sign changer strictly below the bound, if any.
    pub best: Option<SignChangerCertificate>,
}

impl SearchReport {
    pub fn none_below_bound(&self) -> bool {
        self.best.is_none()
    }
}

/// Exponent vectors of total degree ≤ d in n variables, in graded lex order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    out
}

struct Gen {
    poly: Poly,
    sa: GenSeries,
    sb: GenSeries,
    va: Value,
}

fn leading_ratio(p: &GenSeries, r: &GenSeries) -> Option<Rat> {
    let (gp, cp) = p.leading()?;
    let (gr, cr) = r.leading()?;
    (gp == gr).then(|| -(cp / cr))
}

/// Values of s at which sign or value of P + s·R can change, plus one
/// point inside every open interval between them. Zero is excluded since
/// s = 0 is the single generator P.
fn candidate_scalars(p: &Gen, r: &Gen) -> Vec<Rat> {
    let mut br = vec![Rat::zero()];
    br.extend(leading_ratio(&p.sa, &r.sa));
    br.extend(leading_ratio(&p.sb, &r.sb));
    br.sort();
    br.dedup();
    let two = Rat::from_integer(2.into());
    let mut out = vec![&br[0] - Rat::one(), br.last().unwrap() + Rat::one()];
    for w in br.windows(2) {
        out.push((&w[0] + &w[1]) / &two);
    }
    out.extend(br.iter().cloned());
    out.retain(|s| !s.is_zero());
    out.sort();
    out.dedup();
    out
}

/// Minimum α-value of a sign changer within the family, compared strictly
/// against `space.bound`.
pub fn exhaustive_min_search(space: &SearchSpace, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<SearchReport> {
    let n = alpha.n();
    let (sca, scb) = (alpha.sign_char(), beta.sign_char());
    let mut gens = Vec::new();
    for b in &space.basis {
        for e in monomials_up_to(n, space.degree) {
            let poly = b.try_mul(&Poly::monomial(n, e, Rat::one()))?;
            let (sa, sb) = (alpha.evaluate(&poly)?, beta.evaluate(&poly)?);
            let va = sa.valuation()?;
            gens.push(Gen { poly, sa, sb, va });
        }
    }
    // Smallest values first so the pruning bound tightens early.
    gens.sort_by(|a, b| a.va.cmp(&b.va));
    let mut best_value = Value::Finite(space.bound.clone());
    let mut best: Option<(usize, Option<(usize, Rat)>)> = None;
    let mut evaluated = 0;
    let mut pruned = 0;
    for (i, g) in gens.iter().enumerate() {
        evaluated += 1;
        if g.va < best_value && signs_change(g.sa.sign(sca)?, g.sb.sign(scb)?) {
            best_value = g.va.clone();
            best = Some((i, None));
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (p, r) = (&gens[i], &gens[j]);
            if p.va.clone().min(r.va.clone()) >= best_value {
                pruned += 1;
                continue;
            }
            for s in candidate_scalars(p, r) {
                evaluated += 1;
                let ea = p.sa.try_add(&r.sa.scale(&s))?;
                let va = ea.valuation()?;
                if va >= best_value {
                    continue;
                }
                let eb = p.sb.try_add(&r.sb.scale(&s))?;
                if signs_change(ea.sign(sca)?, eb.sign(scb)?) {
                    best_value = va;
                    best = Some((i, Some((j, s))));
                }
            }
        }
    }
    let best = match best {
        None => None,
        Some((i, extra)) => {
            let mut el = gens[i].poly.clone();
            if let Some((j, s)) = extra {
                el = el.try_add(&gens[j].poly.scale(&s))?;
            }
            Some(SignChangerCertificate::new(el, alpha, beta)?)
        }
    };
    Ok(SearchReport { generators: gens.len(), evaluated, pruned_pairs: pruned, best })
}

/// Whether g lies in the separating ideal localized at 𝔭, read off values:
/// ν_α(g) < μ_α and ν_α(g) − ν_α(𝔭) in the largest isolated subgroup not
/// containing ν_α(𝔭). Zero counts as a member of that subgroup.
pub fn in_localized_separating(g: &Poly, alpha: &SemiCurvette, mu_alpha: &GroupVec, p_value: &GroupVec) -> Result<bool> {
    let Value::Finite(v) = alpha.value(g)? else { return Ok(false) };
    if v >= *mu_alpha {
        return Ok(false);
    }
    v.try_sub(p_value)?.in_isolated_below(p_value)
}

/// For each g: value at most μ at both points and no sign change.
pub fn strong_hypothesis_check(
    gs: &[Poly],
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    mu_alpha: &GroupVec,
    mu_beta: &GroupVec,
) -> Result<Vec<bool>> {
    gs.iter()
        .map(|g| {
            Ok(alpha.value(g)? <= Value::Finite(mu_alpha.clone())
                && beta.value(g)? <= Value::Finite(mu_beta.clone())
                && !changes_sign(g, alpha, beta)?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;

    #[test]
    fn certificate_bound() {
        let (a, b) = demo::default_pair();
        let (mu, cert) = mu_upper_bound(&[demo::certificate_element()], &a, &b).unwrap();
        assert_eq!(mu, demo::mu());
        assert!(cert.revalidate(&a, &b).unwrap());
        assert_eq!(cert.signs, (1, -1));
        let fs = demo::fs();
        assert!(matches!(mu_upper_bound(&fs[..1], &a, &b), Err(Error::NoSignChanger)));
    }

    #[test]
    fn mirrored_coordinate() {
        let (a, _) = demo::default_pair();
        let m = a.with_sign_char(a.sign_char().flipped(1)).unwrap();
        let x = Poly::parse(3, "x").unwrap();
        let (v, _) = mu_upper_bound(&[x], &a, &m).unwrap();
        assert_eq!(v, GroupVec::ints(&[0, 3]));
    }

    #[test]
    fn localization() {
        let (a, b) = demo::default_pair();
        let fs = demo::fs();
        let p = GroupVec::ints(&[1, 4]);
        assert!(in_localized_separating(&fs[0], &a, &demo::mu(), &p).unwrap());
        // ν(x·f₃) = (1,9) ≥ μ
        let g = Poly::parse(3, "x*(x^2*y - z^2)").unwrap();
        assert!(!in_localized_separating(&g, &a, &demo::mu(), &p).unwrap());
        let x = Poly::parse(3, "x").unwrap();
        assert!(!in_localized_separating(&x, &a, &demo::mu(), &p).unwrap());
        let mu = demo::mu();
        assert_eq!(strong_hypothesis_check(&fs, &a, &b, &mu, &mu).unwrap(), [true, true, true]);
        assert_eq!(strong_hypothesis_check(&[demo::certificate_element()], &a, &b, &mu, &mu).unwrap(), [false]);
        assert_eq!(strong_hypothesis_check(&[Poly::one(3)], &a, &b, &mu, &mu).unwrap(), [true]);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(3, 4).len(), 35);
        assert_eq!(monomials_up_to(2, 1), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn empty_basis() {
        let (a, b) = demo::default_pair();
        let space = SearchSpace { basis: vec![], degree: 4, bound: demo::mu() };
        assert!(exhaustive_min_search(&space, &a, &b).unwrap().none_below_bound());
    }
}
