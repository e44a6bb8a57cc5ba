//! Semi-curvettes: points of the real spectrum given by substituting
//! generalized power series for the variables.

use crate::algebra::{ExpVec, GenSeries, GroupVec, Poly, Rat, SignChar, Value};
use crate::error::{Error, Result};

/// A tuple of exact series with positive leading exponents, together with
/// the sign character fixing the ordering of t-powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemiCurvette {
    entries: Vec<GenSeries>,
    sc: SignChar,
}

impl SemiCurvette {
    pub fn new(entries: Vec<GenSeries>, sc: SignChar) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidCurvette("no entries".into()));
        }
        for (q, e) in entries.iter().enumerate() {
            if e.rank() != sc.rank() {
                return Err(Error::RankMismatch { expected: sc.rank(), found: e.rank() });
            }
            if !e.is_exact() {
                return Err(Error::InvalidCurvette(format!("entry {q} is truncated")));
            }
            match e.leading() {
                None => return Err(Error::InvalidCurvette(format!("entry {q} is zero"))),
                Some((g, _)) if !g.is_positive() => {
                    return Err(Error::InvalidCurvette(format!(
                        "entry {q} has non-positive leading exponent {g}"
                    )))
                }
                _ => {}
            }
            // Make sure every exponent has a defined sign.
            for g in e.terms().keys() {
                sc.sigma(g)?;
            }
        }
        Ok(SemiCurvette { entries, sc })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn rank(&self) -> usize {
        self.sc.rank()
    }

    pub fn entries(&self) -> &[GenSeries] {
        &self.entries
    }

    pub fn sign_char(&self) -> &SignChar {
        &self.sc
    }

    /// The same series with a different sign character.
    pub fn with_sign_char(&self, sc: SignChar) -> Result<Self> {
        Self::new(self.entries.clone(), sc)
    }

    /// Values of the coordinates, i.e. the weights of the monomial
    /// valuation attached to this point.
    pub fn weights(&self) -> Weights {
        Weights(
            self.entries
                .iter()
                .map(|e| e.leading().expect("nonzero entry").0.clone())
                .collect(),
        )
    }

    fn check_vars(&self, n: usize) -> Result<()> {
        if n != self.n() {
            return Err(Error::VarCountMismatch { expected: self.n(), found: n });
        }
        Ok(())
    }

    /// Exact substitution of the entries into `f`.
    pub fn evaluate(&self, f: &Poly) -> Result<GenSeries> {
        self.check_vars(f.nvars())?;
        let mut powers: Vec<Vec<GenSeries>> =
            self.entries.iter().map(|_| vec![GenSeries::one(self.rank())]).collect();
        let mut acc = GenSeries::zero(self.rank());
        for (e, c) in f.terms() {
            let mut m = GenSeries::constant(self.rank(), c.clone());
            for (q, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let table = &mut powers[q];
                while table.len() <= k as usize {
                    let next = table.last().unwrap().try_mul(&self.entries[q])?;
                    table.push(next);
                }
                m = m.try_mul(&table[k as usize])?;
            }
            acc = acc.try_add(&m)?;
        }
        Ok(acc)
    }

    /// Substitution into Σ c·u^e with possibly negative exponents. Each
    /// Laurent monomial is computed by truncated division, so `order` is
    /// mandatory when any exponent is negative.
    pub fn evaluate_laurent(&self, terms: &[(Rat, ExpVec)], order: Option<&GroupVec>) -> Result<GenSeries> {
        let mut acc = GenSeries::zero(self.rank());
        for (c, e) in terms {
            self.check_vars(e.len())?;
            let (pos, neg) = e.split();
            let num = self.evaluate(&Poly::monomial(self.n(), pos, c.clone()))?;
            let term = if neg.iter().all(|&k| k == 0) {
                num
            } else {
                let order = order.ok_or_else(|| {
                    Error::Precondition("a truncation order is required for Laurent input".into())
                })?;
                let den = self.evaluate(&Poly::monomial(self.n(), neg, Rat::from_integer(1.into())))?;
                num.div_truncated(&den, order)?
            };
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// ν_α(f), with ∞ when f vanishes on the curvette.
    pub fn value(&self, f: &Poly) -> Result<Value> {
        self.evaluate(f)?.valuation()
    }

    /// Sign of f at this point.
    pub fn sign(&self, f: &Poly) -> Result<i8> {
        self.evaluate(f)?.sign(&self.sc)
    }

    /// Leading coefficient of the evaluation.
    pub fn initial_coeff(&self, f: &Poly) -> Result<Rat> {
        let s = self.evaluate(f)?;
        s.leading()
            .map(|(_, c)| c.clone())
            .ok_or_else(|| Error::VanishingEvaluation(f.to_string()))
    }

    /// Whether f = 0 is tangent to the curvette: its value exceeds the
    /// smallest coordinate value.
    pub fn is_tangent(&self, f: &Poly) -> Result<bool> {
        let min = self.weights().0.into_iter().min().expect("nonempty");
        Ok(self.value(f)? > Value::Finite(min))
    }
}

/// true iff f is ≥ 0 at one point and ≤ 0 at the other.
pub fn changes_sign(f: &Poly, alpha: &SemiCurvette, beta: &SemiCurvette) -> Result<bool> {
    if alpha.rank() != beta.rank() {
        return Err(Error::RankMismatch { expected: alpha.rank(), found: beta.rank() });
    }
    let sa = alpha.sign(f)?;
    let sb = beta.sign(f)?;
    Ok(signs_change(sa, sb))
}

/// The sign-change relation on a pair of evaluated signs.
pub fn signs_change(sa: i8, sb: i8) -> bool {
    (sa >= 0 && sb <= 0) || (sa <= 0 && sb >= 0)
}

/// Weights of a monomial valuation: one positive value per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights(pub Vec<GroupVec>);

impl Weights {
    pub fn new(w: Vec<GroupVec>) -> Result<Self> {
        let Some(first) = w.first() else {
            return Err(Error::Precondition("no weights".into()));
        };
        for g in &w {
            if g.rank() != first.rank() {
                return Err(Error::RankMismatch { expected: first.rank(), found: g.rank() });
            }
            if !g.is_positive() {
                return Err(Error::NonPositiveWeight);
            }
        }
        Ok(Weights(w))
    }

    /// Rank-1 weights given as integers, embedded in the last coordinate of
    /// ℚ^rank (so `(3,4,5)` in rank 2 reads ((0,3),(0,4),(0,5))).
    pub fn ints(ws: &[i64], rank: usize) -> Result<Self> {
        Self::new(
            ws.iter()
                .map(|&w| {
                    let mut v = vec![0; rank];
                    v[rank - 1] = w;
                    GroupVec::ints(&v)
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn rank(&self) -> usize {
        self.0[0].rank()
    }

    pub fn get(&self, q: usize) -> &GroupVec {
        &self.0[q]
    }

    /// Σ e_q·w_q for a signed exponent vector.
    pub fn degree(&self, e: &[i64]) -> GroupVec {
        let mut acc = GroupVec::zero(self.rank());
        for (k, w) in e.iter().zip(&self.0) {
            if *k != 0 {
                acc = &acc + &w.scale_int(*k);
            }
        }
        acc
    }

    pub fn degree_u(&self, e: &[u32]) -> GroupVec {
        let signed: Vec<i64> = e.iter().map(|&k| k as i64).collect();
        self.degree(&signed)
    }

    /// ν₀(f) = min over the support of the weighted degree; ∞ for zero.
    pub fn monomial_value(&self, f: &Poly) -> Result<Value> {
        if f.nvars() != self.n() {
            return Err(Error::VarCountMismatch { expected: self.n(), found: f.nvars() });
        }
        Ok(f.terms()
            .keys()
            .map(|e| self.degree_u(e))
            .min()
            .map(Value::Finite)
            .unwrap_or(Value::Infinite))
    }

    /// Whether every term of f has the same weighted degree.
    pub fn is_quasi_homogeneous(&self, f: &Poly) -> bool {
        let mut degs = f.terms().keys().map(|e| self.degree_u(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The image of f under u_q ↦ t^(w_q).
    pub fn substitute(&self, f: &Poly) -> GenSeries {
        let mut s = GenSeries::zero(self.rank());
        for (e, c) in f.terms() {
            s = s.try_add(&GenSeries::monomial(c.clone(), self.degree_u(e))).expect("same rank");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::demo;

    #[test]
    fn demo_evaluations() {
        let a = demo::alpha(&int(1), &int(3));
        let [f1, f2, f3] = demo::fs();
        assert_eq!(
            a.evaluate(&f1).unwrap(),
            GenSeries::from_int_terms(2, &[(int(1), &[1, 4]), (int(-1), &[2, 0])])
        );
        assert_eq!(
            a.evaluate(&f2).unwrap(),
            GenSeries::from_int_terms(2, &[(int(-4), &[1, 5]), (int(-3), &[2, 1])])
        );
        assert_eq!(
            a.evaluate(&f3).unwrap(),
            GenSeries::from_int_terms(2, &[(int(-5), &[1, 6]), (int(-9), &[2, 2])])
        );
    }

    #[test]
    fn values_and_coefficients() {
        let a = demo::alpha(&int(1), &int(3));
        let b = demo::alpha(&int(2), &int(5));
        let [f1, f2, _] = demo::fs();
        assert_eq!(a.value(&f1).unwrap(), Value::Finite(GroupVec::ints(&[1, 4])));
        assert_eq!(a.value(&Poly::zero(3)).unwrap(), Value::Infinite);
        assert_eq!(a.value(&Poly::var(3, 0)).unwrap(), Value::Finite(GroupVec::ints(&[0, 3])));
        assert_eq!(a.initial_coeff(&f1).unwrap(), int(1));
        assert_eq!(b.initial_coeff(&f2).unwrap(), int(-7));
        assert_eq!(a.initial_coeff(&Poly::var(3, 0)).unwrap(), int(1));
        assert!(a.initial_coeff(&Poly::zero(3)).is_err());
    }

    #[test]
    fn monomial_values() {
        let w = Weights::ints(&[3, 4, 5], 2).unwrap();
        let [f1, _, _] = demo::fs();
        assert_eq!(w.monomial_value(&f1).unwrap(), Value::Finite(GroupVec::ints(&[0, 8])));
        let m = Poly::parse(3, "x^2*y").unwrap();
        assert_eq!(w.monomial_value(&m).unwrap(), Value::Finite(GroupVec::ints(&[0, 10])));
        assert_eq!(w.monomial_value(&Poly::zero(3)).unwrap(), Value::Infinite);
        assert!(Weights::ints(&[3, 0, 5], 2).is_err());
    }

    #[test]
    fn sign_changes() {
        let a = demo::alpha(&int(1), &int(3));
        let b = demo::alpha(&int(2), &int(5));
        let [f1, _, _] = demo::fs();
        let g = demo::certificate_element();
        assert!(changes_sign(&g, &a, &b).unwrap());
        assert_eq!(a.evaluate(&g).unwrap().leading().unwrap().1, &rat(1, 5));
        assert_eq!(b.evaluate(&g).unwrap().leading().unwrap().1, &rat(-2, 5));
        assert!(!changes_sign(&f1, &a, &b).unwrap());
        assert!(!changes_sign(&f1, &a, &a).unwrap());
    }

    #[test]
    fn tangency() {
        let x = GenSeries::from_int_terms(1, &[(int(1), &[1])]);
        let y = GenSeries::from_int_terms(1, &[(int(1), &[2])]);
        let c = SemiCurvette::new(vec![x, y], SignChar::positive(1)).unwrap();
        assert!(c.is_tangent(&Poly::parse(2, "y").unwrap()).unwrap());
        assert!(!c.is_tangent(&Poly::parse(2, "x").unwrap()).unwrap());
        assert!(!c.is_tangent(&Poly::parse(2, "x + y").unwrap()).unwrap());
    }

    #[test]
    fn laurent_needs_order() {
        let a = demo::alpha(&int(1), &int(3));
        let q = [(int(1), ExpVec(vec![1, -2, 1])), (int(-1), ExpVec(vec![0, 0, 0]))];
        assert!(a.evaluate_laurent(&q, None).is_err());
        let s = a.evaluate_laurent(&q, Some(&GroupVec::ints(&[2, 0]))).unwrap();
        assert_eq!(s.valuation().unwrap(), Value::Finite(GroupVec::ints(&[1, -4])));
    }

    #[test]
    fn rejects_bad_entries() {
        let zero_lead = GenSeries::from_int_terms(2, &[(int(1), &[0, 0])]);
        assert!(SemiCurvette::new(vec![zero_lead], SignChar::positive(2)).is_err());
        assert!(SemiCurvette::new(vec![GenSeries::zero(2)], SignChar::positive(2)).is_err());
    }
}
