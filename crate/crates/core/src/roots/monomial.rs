//! Generalized monomials: products of variables, roots and auxiliary
//! polynomials with integer exponents, plus exact comparisons on a point.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::BinomialRoot;
use crate::algebra::{GenSeries, GroupVec, Poly, Rat, SignChar, Value};
use crate::curvette::SemiCurvette;
use crate::error::{Error, Result};

/// A base of a generalized monomial. Variables are roots of complexity
/// zero; `Aux` holds extra polynomials such as syzygy coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Var(usize),
    Root(usize),
    Aux(usize),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Var(i) => write!(f, "u{}", i + 1),
            Factor::Root(i) => write!(f, "Q{}", i + 1),
            Factor::Aux(i) => write!(f, "W{}", i + 1),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenMonomial(BTreeMap<Factor, i64>);

impl GenMonomial {
    pub fn one() -> Self {
        GenMonomial(BTreeMap::new())
    }

    pub fn factor(f: Factor, e: i64) -> Self {
        Self::one().with(f, e)
    }

    pub fn var(i: usize) -> Self {
        Self::factor(Factor::Var(i), 1)
    }

    pub fn root(i: usize) -> Self {
        Self::factor(Factor::Root(i), 1)
    }

    pub fn aux(i: usize) -> Self {
        Self::factor(Factor::Aux(i), 1)
    }

    pub fn from_pairs<I: IntoIterator<Item = (Factor, i64)>>(it: I) -> Self {
        it.into_iter().fold(Self::one(), |m, (f, e)| m.with(f, e))
    }

    /// Multiplies in f^e.
    pub fn with(mut self, f: Factor, e: i64) -> Self {
        let slot = self.0.entry(f).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&f);
        }
        self
    }

    pub fn exponents(&self) -> &BTreeMap<Factor, i64> {
        &self.0
    }

    pub fn exponent(&self, f: Factor) -> i64 {
        self.0.get(&f).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.values().all(|&e| e > 0)
    }

    pub fn mul(&self, o: &GenMonomial) -> GenMonomial {
        o.0.iter().fold(self.clone(), |m, (f, e)| m.with(*f, *e))
    }

    pub fn pow(&self, k: i64) -> GenMonomial {
        if k == 0 {
            return Self::one();
        }
        GenMonomial(self.0.iter().map(|(f, e)| (*f, e * k)).collect())
    }

    pub fn inv(&self) -> GenMonomial {
        self.pow(-1)
    }

    /// (numerator, denominator) with non-negative exponents.
    pub fn split(&self) -> (GenMonomial, GenMonomial) {
        let pos = self.0.iter().filter(|(_, e)| **e > 0).map(|(f, e)| (*f, *e));
        let neg = self.0.iter().filter(|(_, e)| **e < 0).map(|(f, e)| (*f, -*e));
        (Self::from_pairs(pos), Self::from_pairs(neg))
    }

    /// Factors that occur, with any exponent.
    pub fn factors(&self) -> impl Iterator<Item = Factor> + '_ {
        self.0.keys().copied()
    }
}

impl fmt::Display for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(b, e)| if *e == 1 { b.to_string() } else { format!("{b}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenMonomial({self})")
    }
}

/// The polynomials that generalized monomials refer to.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    nvars: usize,
    roots: Vec<BinomialRoot>,
    aux: Vec<Poly>,
}

impl RootSystem {
    pub fn new(nvars: usize, roots: Vec<BinomialRoot>) -> Result<Self> {
        for r in &roots {
            if r.nvars() != nvars {
                return Err(Error::VarCountMismatch { expected: nvars, found: r.nvars() });
            }
        }
        Ok(RootSystem { nvars, roots, aux: Vec::new() })
    }

    /// Registers an auxiliary polynomial and returns its factor.
    pub fn add_aux(&mut self, p: Poly) -> Result<Factor> {
        if p.nvars() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: p.nvars() });
        }
        self.aux.push(p);
        Ok(Factor::Aux(self.aux.len() - 1))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn roots(&self) -> &[BinomialRoot] {
        &self.roots
    }

    pub fn aux(&self) -> &[Poly] {
        &self.aux
    }

    pub fn poly(&self, f: Factor) -> Result<Poly> {
        match f {
            Factor::Var(i) if i < self.nvars => Ok(Poly::var(self.nvars, i)),
            Factor::Root(i) if i < self.roots.len() => Ok(self.roots[i].to_poly()),
            Factor::Aux(i) if i < self.aux.len() => Ok(self.aux[i].clone()),
            _ => Err(Error::Precondition(format!("unknown factor {f}"))),
        }
    }

    /// The polynomial of a monomial with non-negative exponents.
    pub fn monomial_poly(&self, m: &GenMonomial) -> Result<Poly> {
        let mut acc = Poly::one(self.nvars);
        for (f, e) in m.exponents() {
            if *e < 0 {
                return Err(Error::Precondition(format!("{m} has a negative exponent")));
            }
            acc = acc.try_mul(&self.poly(*f)?.pow(*e as u32))?;
        }
        Ok(acc)
    }

    /// Every factor evaluated once on δ.
    pub fn evaluate_all(&self, delta: &SemiCurvette) -> Result<Evaluated> {
        if delta.n() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: delta.n() });
        }
        let mut series = BTreeMap::new();
        let all = (0..self.nvars)
            .map(Factor::Var)
            .chain((0..self.roots.len()).map(Factor::Root))
            .chain((0..self.aux.len()).map(Factor::Aux));
        for f in all {
            let s = match f {
                Factor::Var(i) => delta.entries()[i].clone(),
                _ => delta.evaluate(&self.poly(f)?)?,
            };
            series.insert(f, s);
        }
        Ok(Evaluated { rank: delta.rank(), sc: delta.sign_char().clone(), series })
    }
}

/// Factor evaluations on one point.
#[derive(Clone, Debug)]
pub struct Evaluated {
    rank: usize,
    sc: SignChar,
    series: BTreeMap<Factor, GenSeries>,
}

impl Evaluated {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sign_char(&self) -> &SignChar {
        &self.sc
    }

    pub fn series_of(&self, f: Factor) -> Result<&GenSeries> {
        self.series.get(&f).ok_or_else(|| Error::Precondition(format!("unknown factor {f}")))
    }

    pub fn factor_value(&self, f: Factor) -> Result<Value> {
        self.series_of(f)?.valuation()
    }

    pub fn factor_sign(&self, f: Factor) -> Result<i8> {
        self.series_of(f)?.sign(&self.sc)
    }

    /// ν of a monomial. A vanishing factor with negative exponent is an error.
    pub fn value(&self, m: &GenMonomial) -> Result<Value> {
        let mut acc = GroupVec::zero(self.rank);
        let mut infinite = false;
        for (f, e) in m.exponents() {
            match self.factor_value(*f)? {
                Value::Finite(g) => acc = &acc + &g.scale_int(*e),
                Value::Infinite if *e > 0 => infinite = true,
                Value::Infinite => return Err(Error::VanishingEvaluation(format!("{f} in {m}"))),
            }
        }
        Ok(if infinite { Value::Infinite } else { Value::Finite(acc) })
    }

    pub fn sign(&self, m: &GenMonomial) -> Result<i8> {
        let mut s = 1i8;
        for (f, e) in m.exponents() {
            let sf = self.factor_sign(*f)?;
            if sf == 0 {
                if *e < 0 {
                    return Err(Error::VanishingEvaluation(format!("{f} in {m}")));
                }
                return Ok(0);
            }
            if e.unsigned_abs() % 2 == 1 {
                s *= sf;
            }
        }
        Ok(s)
    }

    /// c times the product of the factors with non-negative exponents.
    pub fn series(&self, c: &Rat, m: &GenMonomial) -> Result<GenSeries> {
        let mut acc = GenSeries::constant(self.rank, c.clone());
        for (f, e) in m.exponents() {
            if *e < 0 {
                return Err(Error::Precondition(format!("{m} has a negative exponent")));
            }
            acc = acc.try_mul(&self.series_of(*f)?.pow(*e as u32))?;
        }
        Ok(acc)
    }

    /// |c1·m1| ≥ |c2·m2| (or > when `strict`), decided without division by
    /// moving denominators across.
    pub fn magnitude_ge(&self, c1: &Rat, m1: &GenMonomial, c2: &Rat, m2: &GenMonomial, strict: bool) -> Result<bool> {
        let (p1, n1) = m1.split();
        let (p2, n2) = m2.split();
        let lhs = self.series(c1, &p1.mul(&n2))?;
        let rhs = self.series(c2, &p2.mul(&n1))?;
        if strict {
            Ok(!rhs.abs_ge(&lhs, &self.sc)?)
        } else {
            lhs.abs_ge(&rhs, &self.sc)
        }
    }
}

fn exponent_tuple_cmp(a: &GenMonomial, b: &GenMonomial) -> Ordering {
    let keys: std::collections::BTreeSet<Factor> = a.factors().chain(b.factors()).collect();
    for k in keys {
        match a.exponent(k).cmp(&b.exponent(k)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Lexicographic comparison of (ν_δ(m), exponent tuple).
pub fn genmon_compare(m1: &GenMonomial, m2: &GenMonomial, ev: &Evaluated) -> Result<Ordering> {
    let (v1, v2) = (ev.value(m1)?, ev.value(m2)?);
    Ok(v1.cmp(&v2).then_with(|| exponent_tuple_cmp(m1, m2)))
}

/// g = dominant + Σ c·tail, with the dominant strictly smallest in value
/// at every point it was checked against.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardForm {
    dominant: GenMonomial,
    tail: Vec<(Rat, GenMonomial)>,
}

impl StandardForm {
    /// Validates the dominance inequality at each of `points`.
    pub fn new(dominant: GenMonomial, tail: Vec<(Rat, GenMonomial)>, points: &[&Evaluated]) -> Result<Self> {
        if tail.iter().any(|(c, _)| c.is_zero()) {
            return Err(Error::Precondition("zero tail coefficient".into()));
        }
        let f = StandardForm { dominant, tail };
        for ev in points {
            f.check(ev)?;
        }
        Ok(f)
    }

    pub fn check(&self, ev: &Evaluated) -> Result<()> {
        let d = ev.value(&self.dominant)?;
        for (_, m) in &self.tail {
            if ev.value(m)? <= d {
                return Err(Error::Precondition(format!(
                    "tail term {m} does not exceed the dominant {} in value",
                    self.dominant
                )));
            }
        }
        Ok(())
    }

    pub fn dominant(&self) -> &GenMonomial {
        &self.dominant
    }

    pub fn tail(&self) -> &[(Rat, GenMonomial)] {
        &self.tail
    }

    /// The element as a polynomial.
    pub fn to_poly(&self, sys: &RootSystem) -> Result<Poly> {
        let mut acc = sys.monomial_poly(&self.dominant)?;
        for (c, m) in &self.tail {
            acc = acc.try_add(&sys.monomial_poly(m)?.scale(c))?;
        }
        Ok(acc)
    }

    /// Largest |c| in the tail, at least one.
    pub fn max_abs_coeff(&self) -> Rat {
        self.tail.iter().map(|(c, _)| c.abs()).fold(Rat::one(), |a, b| if b > a { b } else { a })
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dominant)?;
        for (c, m) in &self.tail {
            write!(f, " + ({c})*{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::demo;

    fn system() -> RootSystem {
        let roots = demo::fs().iter().map(|f| BinomialRoot::from_poly(f).unwrap()).collect();
        RootSystem::new(3, roots).unwrap()
    }

    #[test]
    fn compare_examples() {
        let (a, _) = demo::default_pair();
        let ev = system().evaluate_all(&a).unwrap();
        let u1sq = GenMonomial::factor(Factor::Var(0), 2);
        assert_eq!(genmon_compare(&u1sq, &GenMonomial::var(1), &ev).unwrap(), Ordering::Greater);
        assert_eq!(genmon_compare(&u1sq, &u1sq, &ev).unwrap(), Ordering::Equal);
        let u1u2 = GenMonomial::var(0).mul(&GenMonomial::var(1));
        assert_eq!(genmon_compare(&GenMonomial::root(0), &u1u2, &ev).unwrap(), Ordering::Greater);
        assert_eq!(ev.value(&GenMonomial::root(0)).unwrap(), Value::Finite(GroupVec::ints(&[1, 4])));
    }

    #[test]
    fn negative_exponents() {
        let (a, _) = demo::default_pair();
        let ev = system().evaluate_all(&a).unwrap();
        let m = GenMonomial::root(0).mul(&GenMonomial::var(1).inv());
        assert_eq!(ev.value(&m).unwrap(), Value::Finite(GroupVec::ints(&[1, 0])));
        // |Q1/u2| vs |u1|: (1,0) > (0,3) so the monomial is smaller.
        assert!(ev.magnitude_ge(&int(1), &GenMonomial::var(0), &int(1), &m, true).unwrap());
        assert!(!ev.magnitude_ge(&int(1), &m, &int(1), &GenMonomial::var(0), false).unwrap());
        assert_eq!(m.split().1, GenMonomial::var(1));
        assert_eq!(m.to_string(), "u2^-1*Q1");
    }

    #[test]
    fn standard_form_checks_dominance() {
        let (a, b) = demo::default_pair();
        let sys = system();
        let (ea, eb) = (sys.evaluate_all(&a).unwrap(), sys.evaluate_all(&b).unwrap());
        let ok = StandardForm::new(GenMonomial::var(0), vec![(int(3), GenMonomial::var(1))], &[&ea, &eb]);
        assert!(ok.is_ok());
        let bad = StandardForm::new(GenMonomial::var(1), vec![(int(3), GenMonomial::var(0))], &[&ea, &eb]);
        assert!(bad.is_err());
        assert_eq!(ok.unwrap().to_poly(&sys).unwrap(), Poly::parse(3, "x + 3*y").unwrap());
    }
}
