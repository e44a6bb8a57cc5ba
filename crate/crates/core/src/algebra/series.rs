//! Finite-support generalized power series Σ c_γ t^γ with γ ∈ ℚ^k.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::group::{GroupVec, SignChar, Value};
use super::rat::{int, sign_of, Rat};
use crate::error::{Error, Result};

/// Step cap for long division and exponentials. Lex-ordered groups of rank
/// above one admit expansions that never reach a given order, so these loops
/// need an explicit bound.
pub const MAX_SERIES_STEPS: usize = 20_000;

/// A generalized power series with finitely many terms.
///
/// `trunc = None` means the series is exact. `Some(τ)` means the true series
/// agrees with the stored terms below t^τ and is unknown from τ on; every
/// stored exponent is strictly below τ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenSeries {
    rank: usize,
    terms: BTreeMap<GroupVec, Rat>,
    trunc: Option<GroupVec>,
}

impl GenSeries {
    pub fn zero(rank: usize) -> Self {
        GenSeries { rank, terms: BTreeMap::new(), trunc: None }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Rat::one(), GroupVec::zero(rank))
    }

    pub fn constant(rank: usize, c: Rat) -> Self {
        Self::monomial(c, GroupVec::zero(rank))
    }

    /// c · t^g.
    pub fn monomial(c: Rat, g: GroupVec) -> Self {
        let mut s = Self::zero(g.rank());
        if !c.is_zero() {
            s.terms.insert(g, c);
        }
        s
    }

    /// Builds a series from `(coefficient, exponent)` pairs, summing repeats.
    /// Exponents at or above the truncation are rejected.
    pub fn from_terms<I>(rank: usize, terms: I, trunc: Option<GroupVec>) -> Result<Self>
    where
        I: IntoIterator<Item = (Rat, GroupVec)>,
    {
        if let Some(t) = &trunc {
            check_rank(rank, t)?;
        }
        let mut s = GenSeries { rank, terms: BTreeMap::new(), trunc: None };
        for (c, g) in terms {
            check_rank(rank, &g)?;
            if let Some(t) = &trunc {
                if &g >= t {
                    return Err(Error::InvalidSeries(format!(
                        "exponent {g} is not below the truncation {t}"
                    )));
                }
            }
            s.add_term(g, c);
        }
        s.trunc = trunc;
        Ok(s)
    }

    /// Shorthand for tests and examples: integer exponents, exact.
    pub fn from_int_terms(rank: usize, terms: &[(Rat, &[i64])]) -> Self {
        Self::from_terms(rank, terms.iter().map(|(c, g)| (c.clone(), GroupVec::ints(g))), None)
            .expect("well-formed literal series")
    }

    fn add_term(&mut self, g: GroupVec, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<GroupVec, Rat> {
        &self.terms
    }

    pub fn truncation(&self) -> Option<&GroupVec> {
        self.trunc.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    /// True only for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.trunc.is_none()
    }

    /// The known leading term, if any term is stored.
    pub fn leading(&self) -> Option<(&GroupVec, &Rat)> {
        self.terms.iter().next()
    }

    /// Coefficient of t^g (zero when absent).
    pub fn coeff(&self, g: &GroupVec) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    /// ν(s): the leading exponent, ∞ for the exact zero series, and an error
    /// when nothing is known below the truncation.
    pub fn valuation(&self) -> Result<Value> {
        match self.leading() {
            Some((g, _)) => Ok(Value::Finite(g.clone())),
            None if self.trunc.is_none() => Ok(Value::Infinite),
            None => Err(Error::Undecidable(format!(
                "series is O(t^{}) with no known terms",
                self.trunc.as_ref().unwrap()
            ))),
        }
    }

    /// A lower bound for the valuation used when propagating truncations:
    /// the leading exponent, or the truncation if nothing is known. `None`
    /// for the exact zero series.
    fn order_bound(&self) -> Option<GroupVec> {
        self.leading().map(|(g, _)| g.clone()).or_else(|| self.trunc.clone())
    }

    fn check(&self, o: &GenSeries) -> Result<()> {
        if self.rank != o.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: o.rank });
        }
        Ok(())
    }

    /// Drops every term at or above `order` and lowers the truncation to it.
    pub fn truncate_at(&self, order: &GroupVec) -> GenSeries {
        let t = match &self.trunc {
            Some(t) if t <= order => t.clone(),
            _ => order.clone(),
        };
        GenSeries {
            rank: self.rank,
            terms: self.terms.range(..t.clone()).map(|(g, c)| (g.clone(), c.clone())).collect(),
            trunc: Some(t),
        }
    }

    /// Treats the stored terms as the whole series.
    pub fn forget_truncation(&self) -> GenSeries {
        GenSeries { rank: self.rank, terms: self.terms.clone(), trunc: None }
    }

    fn with_trunc(mut self, t: Option<GroupVec>) -> GenSeries {
        if let Some(t) = &t {
            self.terms = self.terms.range(..t.clone()).map(|(g, c)| (g.clone(), c.clone())).collect();
        }
        self.trunc = t;
        self
    }

    pub fn try_add(&self, o: &GenSeries) -> Result<GenSeries> {
        self.check(o)?;
        let mut s = GenSeries { rank: self.rank, terms: self.terms.clone(), trunc: None };
        for (g, c) in &o.terms {
            s.add_term(g.clone(), c.clone());
        }
        Ok(s.with_trunc(min_opt(self.trunc.clone(), o.trunc.clone())))
    }

    pub fn try_sub(&self, o: &GenSeries) -> Result<GenSeries> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> GenSeries {
        self.scale(&int(-1))
    }

    pub fn scale(&self, r: &Rat) -> GenSeries {
        if r.is_zero() {
            return GenSeries::zero(self.rank);
        }
        GenSeries {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * r)).collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Multiply by c · t^g.
    pub fn mul_monomial(&self, c: &Rat, g: &GroupVec) -> GenSeries {
        if c.is_zero() {
            return GenSeries::zero(self.rank);
        }
        GenSeries {
            rank: self.rank,
            terms: self.terms.iter().map(|(h, d)| (h + g, d * c)).collect(),
            trunc: self.trunc.as_ref().map(|t| t + g),
        }
    }

    /// Convolution product. The truncation of the result is
    /// min(τ₁ + ν(s₂), τ₂ + ν(s₁)) over the finite candidates.
    pub fn try_mul(&self, o: &GenSeries) -> Result<GenSeries> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(GenSeries::zero(self.rank));
        }
        let mut trunc = None;
        if let (Some(t1), Some(v2)) = (&self.trunc, o.order_bound()) {
            trunc = min_opt(trunc, Some(t1 + &v2));
        }
        if let (Some(t2), Some(v1)) = (&o.trunc, self.order_bound()) {
            trunc = min_opt(trunc, Some(t2 + &v1));
        }
        let mut s = GenSeries::zero(self.rank);
        for (g1, c1) in &self.terms {
            for (g2, c2) in &o.terms {
                let g = g1 + g2;
                if trunc.as_ref().is_some_and(|t| &g >= t) {
                    continue;
                }
                s.add_term(g, c1 * c2);
            }
        }
        Ok(s.with_trunc(trunc))
    }

    pub fn pow(&self, k: u32) -> GenSeries {
        let mut acc = GenSeries::one(self.rank);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base).expect("same rank");
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base).expect("same rank");
            }
        }
        acc
    }

    /// Sign under the sign character: 0 iff exactly zero, otherwise the sign
    /// of the leading coefficient times σ(leading exponent).
    pub fn sign(&self, sc: &SignChar) -> Result<i8> {
        match self.leading() {
            Some((g, c)) => Ok(sign_of(c) * sc.sigma(g)?),
            None if self.trunc.is_none() => Ok(0),
            None => Err(Error::Undecidable("sign of a series with no known terms".into())),
        }
    }

    /// |s| = s · sign(s).
    pub fn abs(&self, sc: &SignChar) -> Result<GenSeries> {
        Ok(self.scale(&int(self.sign(sc)? as i64)))
    }

    /// |self| ≥ |other| in the ordering induced by the sign character.
    pub fn abs_ge(&self, other: &GenSeries, sc: &SignChar) -> Result<bool> {
        let d = self.abs(sc)?.try_sub(&other.abs(sc)?)?;
        Ok(d.sign(sc)? >= 0)
    }

    /// Long division: returns r with self/d = r + O(t^order), truncated at
    /// `order` unless the division is exact. Input truncations lower the
    /// result's truncation accordingly.
    pub fn div_truncated(&self, d: &GenSeries, order: &GroupVec) -> Result<GenSeries> {
        self.check(d)?;
        check_rank(self.rank, order)?;
        let (v2, lc2) = match d.leading() {
            Some((g, c)) => (g.clone(), c.clone()),
            None if d.trunc.is_none() => return Err(Error::DivisionByZero),
            None => return Err(Error::Undecidable("divisor has no known terms".into())),
        };
        if self.is_zero() {
            return Ok(GenSeries::zero(self.rank));
        }
        let mut bound = order.clone();
        let mut inexact = false;
        if let Some(t1) = &self.trunc {
            let b = t1 - &v2;
            if b <= bound {
                bound = b;
                inexact = true;
            }
        }
        if let Some(t2) = &d.trunc {
            let v1 = self.order_bound().expect("nonzero");
            let b = &(t2 + &v1) - &(&v2 + &v2);
            if b <= bound {
                bound = b;
                inexact = true;
            }
        }
        let rem_cut = &bound + &v2;
        let mut rem: BTreeMap<GroupVec, Rat> =
            self.terms.range(..rem_cut.clone()).map(|(g, c)| (g.clone(), c.clone())).collect();
        // Any term discarded beyond the cut means the quotient is not exact.
        let mut dropped = rem.len() < self.terms.len();
        let mut q = GenSeries::zero(self.rank);
        let mut steps = 0;
        while let Some((g, c)) = rem.iter().next().map(|(g, c)| (g.clone(), c.clone())) {
            let e = &g - &v2;
            if e >= bound {
                break;
            }
            steps += 1;
            if steps > MAX_SERIES_STEPS {
                return Err(Error::DivisionDidNotTerminate(MAX_SERIES_STEPS));
            }
            let qc = &c / &lc2;
            q.add_term(e.clone(), qc.clone());
            for (h, dc) in &d.terms {
                let k = h + &e;
                if k >= rem_cut {
                    dropped = true;
                    continue;
                }
                let slot = rem.entry(k.clone()).or_insert_with(Rat::zero);
                *slot -= &qc * dc;
                if slot.is_zero() {
                    rem.remove(&k);
                }
            }
        }
        if rem.is_empty() && !inexact && !dropped {
            Ok(q)
        } else {
            Ok(q.with_trunc(Some(bound)))
        }
    }

    /// exp(self) truncated at `order`; requires positive valuation.
    pub fn exp_truncated(&self, order: &GroupVec) -> Result<GenSeries> {
        check_rank(self.rank, order)?;
        if self.is_zero() {
            return Ok(GenSeries::one(self.rank));
        }
        match self.order_bound() {
            Some(v) if v.is_positive() => {}
            _ => return Err(Error::InvalidSeries("exp needs positive valuation".into())),
        }
        let x = self.truncate_at(order);
        let mut acc = GenSeries::one(self.rank).truncate_at(order);
        let mut power = GenSeries::one(self.rank);
        let mut k: i64 = 0;
        loop {
            k += 1;
            if k as usize > MAX_SERIES_STEPS {
                return Err(Error::DivisionDidNotTerminate(MAX_SERIES_STEPS));
            }
            power = power.try_mul(&x)?.scale(&Rat::new(1.into(), k.into())).truncate_at(order);
            if power.terms.is_empty() {
                break;
            }
            acc = acc.try_add(&power)?;
        }
        Ok(acc)
    }

    /// Coefficient of t^0, provided it is known.
    pub fn constant_term(&self) -> Result<Rat> {
        let z = GroupVec::zero(self.rank);
        if self.trunc.as_ref().is_some_and(|t| t <= &z) {
            return Err(Error::Undecidable("constant term lies beyond the truncation".into()));
        }
        Ok(self.coeff(&z))
    }

    /// Compares two series as elements of the ordered field with t > 0
    /// infinitesimal under `sc`.
    pub fn cmp_signed(&self, o: &GenSeries, sc: &SignChar) -> Result<Ordering> {
        Ok(self.try_sub(o)?.sign(sc)?.cmp(&0))
    }
}

fn check_rank(rank: usize, g: &GroupVec) -> Result<()> {
    if g.rank() != rank {
        return Err(Error::RankMismatch { expected: rank, found: g.rank() });
    }
    Ok(())
}

fn min_opt(a: Option<GroupVec>, b: Option<GroupVec>) -> Option<GroupVec> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

impl fmt::Display for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in &self.terms {
            let neg = c < &Rat::zero();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = if neg { -c.clone() } else { c.clone() };
            if g.is_zero() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "t^{g}")?;
            } else {
                write!(f, "{a}*t^{g}")?;
            }
        }
        match (&self.trunc, first) {
            (Some(t), true) => write!(f, "O(t^{t})"),
            (Some(t), false) => write!(f, " + O(t^{t})"),
            (None, true) => write!(f, "0"),
            (None, false) => Ok(()),
        }
    }
}

impl fmt::Debug for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn s(terms: &[(i64, &[i64])]) -> GenSeries {
        let rank = terms.first().map(|t| t.1.len()).unwrap_or(2);
        GenSeries::from_terms(rank, terms.iter().map(|(c, g)| (int(*c), GroupVec::ints(g))), None)
            .unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let a = s(&[(1, &[0, 4]), (1, &[1, 0])]);
        let sq = a.try_mul(&a).unwrap();
        assert_eq!(sq, s(&[(1, &[0, 8]), (2, &[1, 4]), (1, &[2, 0])]));
        assert_eq!(a.try_mul(&GenSeries::one(2)).unwrap(), a);
        assert!(a.try_mul(&GenSeries::zero(2)).unwrap().is_zero());
        assert!(a.try_mul(&GenSeries::one(1)).is_err());
    }

    #[test]
    fn signs() {
        let pos = SignChar::positive(2);
        assert_eq!(s(&[(-2, &[1, 1])]).sign(&pos).unwrap(), -1);
        let flip = SignChar::new(vec![1, -1], 1).unwrap();
        assert_eq!(s(&[(3, &[0, 1])]).sign(&flip).unwrap(), -1);
        assert_eq!(GenSeries::zero(2).sign(&pos).unwrap(), 0);
        let unknown = GenSeries::from_terms(2, [], Some(GroupVec::ints(&[1, 0]))).unwrap();
        assert!(unknown.sign(&pos).is_err());
    }

    #[test]
    fn magnitudes() {
        let pos = SignChar::positive(2);
        assert!(s(&[(2, &[1, 0])]).abs_ge(&s(&[(1, &[2, 0])]), &pos).unwrap());
        let p1 = SignChar::positive(1);
        let t = s(&[(1, &[1])]);
        let t_minus = s(&[(1, &[1]), (-1, &[2])]);
        assert!(t.abs_ge(&t_minus, &p1).unwrap());
        assert!(!GenSeries::zero(1).abs_ge(&t, &p1).unwrap());
    }

    #[test]
    fn division() {
        let q = s(&[(1, &[0, 8])]).div_truncated(&s(&[(1, &[0, 3])]), &GroupVec::ints(&[5, 0])).unwrap();
        assert_eq!(q, s(&[(1, &[0, 5])]));
        assert!(q.is_exact());

        let one_plus_t = s(&[(1, &[0]), (1, &[1])]);
        let inv = GenSeries::one(1).div_truncated(&one_plus_t, &GroupVec::ints(&[3])).unwrap();
        let expect = GenSeries::from_terms(
            1,
            [(int(1), GroupVec::ints(&[0])), (int(-1), GroupVec::ints(&[1])), (int(1), GroupVec::ints(&[2]))],
            Some(GroupVec::ints(&[3])),
        )
        .unwrap();
        assert_eq!(inv, expect);

        let q = s(&[(1, &[1]), (1, &[2])]).div_truncated(&s(&[(1, &[1])]), &GroupVec::ints(&[5])).unwrap();
        assert_eq!(q, s(&[(1, &[0]), (1, &[1])]));
        assert!(q.is_exact());

        assert_eq!(
            GenSeries::one(1).div_truncated(&GenSeries::zero(1), &GroupVec::ints(&[3])),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn runaway_division_is_reported() {
        // 1/(1 − t^(0,1)) never reaches (1,0).
        let d = s(&[(1, &[0, 0]), (-1, &[0, 1])]);
        let r = GenSeries::one(2).div_truncated(&d, &GroupVec::ints(&[1, 0]));
        assert!(matches!(r, Err(Error::DivisionDidNotTerminate(_))));
    }

    #[test]
    fn exponential() {
        let t = s(&[(1, &[1])]);
        let e = t.exp_truncated(&GroupVec::ints(&[4])).unwrap();
        assert_eq!(e.coeff(&GroupVec::ints(&[3])), rat(1, 6));
        assert_eq!(e.truncation(), Some(&GroupVec::ints(&[4])));
    }

    #[test]
    fn truncation_propagates_through_products() {
        let a = GenSeries::from_terms(1, [(int(1), GroupVec::ints(&[1]))], Some(GroupVec::ints(&[3]))).unwrap();
        let b = s(&[(1, &[2])]);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.truncation(), Some(&GroupVec::ints(&[5])));
        assert_eq!(p.leading().unwrap().0, &GroupVec::ints(&[3]));
    }
}
