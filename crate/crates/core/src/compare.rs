//! Comparability of approximate roots on a pair of points.
//!
//! Two roots are comparable when their normalized values Q′ are ordered
//! the same way at α and β, or tie at both with the same ratio of initial
//! coefficients.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::algebra::{GroupVec, Rat, Value};
use crate::curvette::SemiCurvette;
use crate::error::{Error, Result};
use crate::roots::{BinomialRoot, Factor, GenMonomial, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ComparableLT,
    ComparableGT,
    ComparableEQ(Rat),
    Incomparable,
    StronglyComparable,
}

impl Verdict {
    pub fn is_comparable(&self) -> bool {
        !matches!(self, Verdict::Incomparable)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::ComparableLT => "ComparableLT",
            Verdict::ComparableGT => "ComparableGT",
            Verdict::ComparableEQ(_) => "ComparableEQ",
            Verdict::Incomparable => "Incomparable",
            Verdict::StronglyComparable => "StronglyComparable",
        }
    }
}

/// A verdict with the data it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// ν(Q′_i), ν(Q′_j) at α.
    pub values_alpha: (GroupVec, GroupVec),
    pub values_beta: (GroupVec, GroupVec),
    /// in Q′_i / in Q′_j at α and at β.
    pub ratio_alpha: Rat,
    pub ratio_beta: Rat,
}

fn q_prime(q: &BinomialRoot, delta: &SemiCurvette) -> Result<(GroupVec, Rat)> {
    let v = q.q_prime_value(delta)?.expect_finite(&format!("{q}"))?;
    Ok((v, q.q_prime_initial(delta)?))
}

fn check_pair(alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<()> {
    if alpha.n() != beta.n() {
        return Err(Error::VarCountMismatch { expected: alpha.n(), found: beta.n() });
    }
    if alpha.rank() != beta.rank() {
        return Err(Error::RankMismatch { expected: alpha.rank(), found: beta.rank() });
    }
    Ok(())
}

pub fn compare_roots(qi: &BinomialRoot, qj: &BinomialRoot, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<Comparison> {
    check_pair(alpha, beta)?;
    let (ai, ci) = q_prime(qi, alpha)?;
    let (aj, cj) = q_prime(qj, alpha)?;
    let (bi, di) = q_prime(qi, beta)?;
    let (bj, dj) = q_prime(qj, beta)?;
    let (ra, rb) = (&ci / &cj, &di / &dj);
    let verdict = match (ai.cmp(&aj), bi.cmp(&bj)) {
        (Ordering::Less, Ordering::Less) => Verdict::ComparableLT,
        (Ordering::Greater, Ordering::Greater) => Verdict::ComparableGT,
        (Ordering::Equal, Ordering::Equal) if ra == rb => Verdict::ComparableEQ(ra.clone()),
        _ => Verdict::Incomparable,
    };
    Ok(Comparison { verdict, values_alpha: (ai, aj), values_beta: (bi, bj), ratio_alpha: ra, ratio_beta: rb })
}

/// ν_δ(Q_i) + ν_δ0(Q_j) < μ_δ, with ν_δ0 the monomial valuation carrying
/// the coordinate values of δ.
fn strong_at(qi: &BinomialRoot, qj: &BinomialRoot, delta: &SemiCurvette, mu: &GroupVec) -> Result<bool> {
    let v = delta.value(&qi.to_poly())?;
    let v0 = delta.weights().monomial_value(&qj.to_poly())?;
    Ok(v.plus(&v0) < Value::Finite(mu.clone()))
}

/// Whether the strict inequality holds at α for some ordering of the pair.
/// An ordering that holds at α must also hold at β; if none does, the data
/// contradicts the standing hypothesis and an error is returned.
pub fn strongly_comparable(
    qi: &BinomialRoot,
    qj: &BinomialRoot,
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    mu_alpha: &GroupVec,
    mu_beta: &GroupVec,
) -> Result<bool> {
    check_pair(alpha, beta)?;
    let mut held = false;
    for (a, b) in [(qi, qj), (qj, qi)] {
        if strong_at(a, b, alpha, mu_alpha)? {
            held = true;
            if strong_at(a, b, beta, mu_beta)? {
                return Ok(true);
            }
        }
    }
    if held {
        return Err(Error::HypothesisInconsistent(format!(
            "{qi} and {qj} satisfy the strong inequality at alpha but not at beta"
        )));
    }
    Ok(false)
}

/// StronglyComparable when the strong inequality holds, else the verdict
/// of [`compare_roots`].
pub fn classify_pair(
    qi: &BinomialRoot,
    qj: &BinomialRoot,
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    mu_alpha: &GroupVec,
    mu_beta: &GroupVec,
) -> Result<Comparison> {
    let mut c = compare_roots(qi, qj, alpha, beta)?;
    if strongly_comparable(qi, qj, alpha, beta, mu_alpha, mu_beta)? {
        c.verdict = Verdict::StronglyComparable;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    AllComparable,
    AllIncomparable,
    /// One or two of the three pairs are comparable.
    Violation { comparable_pairs: Vec<(usize, usize)> },
}

pub fn trichotomy_check(
    q4: &BinomialRoot,
    q5: &BinomialRoot,
    q6: &BinomialRoot,
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
) -> Result<Trichotomy> {
    let qs = [q4, q5, q6];
    let mut comparable = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if compare_roots(qs[i], qs[j], alpha, beta)?.verdict.is_comparable() {
            comparable.push((i, j));
        }
    }
    Ok(match comparable.len() {
        3 => Trichotomy::AllComparable,
        0 => Trichotomy::AllIncomparable,
        _ => Trichotomy::Violation { comparable_pairs: comparable },
    })
}

fn require_incomparable(roots: &[BinomialRoot], alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<()> {
    if roots.len() != 3 {
        return Err(Error::Precondition(format!("expected three roots, got {}", roots.len())));
    }
    match trichotomy_check(&roots[0], &roots[1], &roots[2], alpha, beta)? {
        Trichotomy::AllIncomparable => Ok(()),
        t => Err(Error::Precondition(format!("roots are not pairwise incomparable: {t:?}"))),
    }
}

/// At least two of three pairwise incomparable roots satisfy
/// 2·ν_α(Q) > μ_α.
pub fn half_mu_check(roots: &[BinomialRoot], alpha: &SemiCurvette, beta: &SemiCurvette, mu_alpha: &GroupVec) -> Result<bool> {
    require_incomparable(roots, alpha, beta)?;
    let mut count = 0;
    for q in roots {
        if let Value::Finite(v) = alpha.value(&q.to_poly())? {
            if v.scale_int(2) > *mu_alpha {
                count += 1;
            }
        } else {
            count += 1;
        }
    }
    Ok(count >= 2)
}

/// Root indices (into the input slice) sorted by value at α, so that
/// `order[0]` has the smallest value.
pub fn order_by_value(roots: &[BinomialRoot], alpha: &SemiCurvette) -> Result<Vec<usize>> {
    let mut vals = Vec::new();
    for (i, q) in roots.iter().enumerate() {
        vals.push((alpha.value(&q.to_poly())?, i));
    }
    vals.sort();
    Ok(vals.into_iter().map(|(_, i)| i).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// m is divisible by Q_a·Q_b (indices into the root list) and lies in
    /// the ideal generated by `rewrite`, each of value at least μ.
    InIdeal { divisor: (usize, usize), rewrite: Vec<(Rat, GenMonomial)> },
    NotDetermined,
}

/// Membership of a generalized monomial in the separating ideal through
/// divisibility by Q5², Q6², Q4Q5, Q4Q6 or Q5Q6, where the roots are
/// relabelled Q4, Q5, Q6 in increasing order of value at α. `Root(i)` in
/// `m` refers to `roots[i]`.
pub fn monomial_in_separating(
    m: &GenMonomial,
    roots: &[BinomialRoot],
    alpha: &SemiCurvette,
    beta: &SemiCurvette,
    mu_alpha: &GroupVec,
    mu_beta: &GroupVec,
) -> Result<Membership> {
    require_incomparable(roots, alpha, beta)?;
    let n = alpha.n();
    let sys = RootSystem::new(n, roots.to_vec())?;
    let (ea, eb) = (sys.evaluate_all(alpha)?, sys.evaluate_all(beta)?);
    let ord = order_by_value(roots, alpha)?;
    let (q4, q5, q6) = (ord[0], ord[1], ord[2]);
    let divisors = [(q5, q5), (q6, q6), (q4, q5), (q4, q6), (q5, q6)];
    let big_enough = |g: &GenMonomial| -> Result<bool> {
        Ok(ea.value(g)? >= Value::Finite(mu_alpha.clone()) && eb.value(g)? >= Value::Finite(mu_beta.clone()))
    };
    for (a, b) in divisors {
        let need = |i: usize| if a == b { 2 } else { 1 } * i64::from(i == a || i == b);
        if [a, b].iter().any(|&i| m.exponent(Factor::Root(i)) < need(i)) {
            continue;
        }
        let rest = m.mul(&GenMonomial::root(a).inv()).mul(&GenMonomial::root(b).inv());
        let choices = if a == b { vec![(a, b)] } else { vec![(a, b), (b, a)] };
        for (expand, keep) in choices {
            let q = &roots[expand];
            let base = rest.mul(&GenMonomial::root(keep));
            let mono = |e: &[u32]| {
                GenMonomial::from_pairs(e.iter().enumerate().map(|(v, k)| (Factor::Var(v), i64::from(*k))))
            };
            let rewrite = vec![(Rat::from_integer(1.into()), base.mul(&mono(q.plus()))), (q.lambda().clone(), base.mul(&mono(q.minus())))];
            let mut ok = true;
            for (c, g) in &rewrite {
                debug_assert!(!c.is_zero());
                ok &= big_enough(g)?;
            }
            if ok {
                return Ok(Membership::InIdeal { divisor: (a, b), rewrite });
            }
        }
    }
    Ok(Membership::NotDetermined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::demo;

    fn demo_roots() -> Vec<BinomialRoot> {
        demo::fs().iter().map(|f| BinomialRoot::from_poly(f).unwrap()).collect()
    }

    #[test]
    fn demo_pair_incomparable() {
        let (a, b) = demo::default_pair();
        let r = demo_roots();
        let c = compare_roots(&r[0], &r[1], &a, &b).unwrap();
        assert_eq!(c.verdict, Verdict::Incomparable);
        assert_eq!(c.values_alpha, (GroupVec::ints(&[1, -4]), GroupVec::ints(&[1, -4])));
        assert_eq!((c.ratio_alpha, c.ratio_beta), (rat(-1, 4), rat(-1, 7)));
        assert_eq!(compare_roots(&r[0], &r[0], &a, &b).unwrap().verdict, Verdict::ComparableEQ(int(1)));
        assert_eq!(trichotomy_check(&r[0], &r[1], &r[2], &a, &b).unwrap(), Trichotomy::AllIncomparable);
        assert_eq!(trichotomy_check(&r[0], &r[1], &r[2], &a, &a).unwrap(), Trichotomy::AllComparable);
    }

    #[test]
    fn strong_comparability() {
        let (a, b) = demo::default_pair();
        let r = demo_roots();
        let mu = demo::mu();
        assert!(!strongly_comparable(&r[0], &r[1], &a, &b, &mu, &mu).unwrap());
        // ν(f1) + ν0(f2) = (1,4) + (0,9) < (2,0)
        assert!(strongly_comparable(&r[0], &r[1], &a, &b, &GroupVec::ints(&[2, 0]), &GroupVec::ints(&[2, 0])).unwrap());
        let err = strongly_comparable(&r[0], &r[1], &a, &b, &GroupVec::ints(&[2, 0]), &mu);
        assert!(matches!(err, Err(Error::HypothesisInconsistent(_))));
    }

    #[test]
    fn half_mu() {
        let (a, b) = demo::default_pair();
        let r = demo_roots();
        assert!(half_mu_check(&r, &a, &b, &demo::mu()).unwrap());
        assert!(!half_mu_check(&r, &a, &b, &GroupVec::ints(&[3, 0])).unwrap());
        assert!(half_mu_check(&r[..2], &a, &b, &demo::mu()).is_err());
    }

    #[test]
    fn separating_membership() {
        let (a, b) = demo::default_pair();
        let r = demo_roots();
        let mu = demo::mu();
        let m = GenMonomial::root(1).with(Factor::Root(1), 1).with(Factor::Var(0), 1);
        let Membership::InIdeal { divisor, rewrite } = monomial_in_separating(&m, &r, &a, &b, &mu, &mu).unwrap() else {
            panic!("expected membership")
        };
        assert_eq!(divisor, (1, 1));
        let expect = [
            GenMonomial::root(1).with(Factor::Var(0), 4),
            GenMonomial::root(1).with(Factor::Var(0), 1).with(Factor::Var(1), 1).with(Factor::Var(2), 1),
        ];
        assert_eq!(rewrite.iter().map(|x| x.1.clone()).collect::<Vec<_>>(), expect);
        let single = GenMonomial::root(0).with(Factor::Var(0), 5);
        assert_eq!(monomial_in_separating(&single, &r, &a, &b, &mu, &mu).unwrap(), Membership::NotDetermined);
        let m46 = GenMonomial::root(0).with(Factor::Root(2), 1);
        assert!(matches!(monomial_in_separating(&m46, &r, &a, &b, &mu, &mu).unwrap(), Membership::InIdeal { divisor: (0, 2), .. }));
    }
}
