//! Binomial approximate roots of complexity at most one.
//!
//! A root is Q = u^plus − λ·u^minus with disjoint supports. For three
//! variables with weights w, the complexity-one roots are the minimal
//! binomials in the relation lattice {m ∈ ℤ³ : w·m = 0} of three shapes:
//!
//! * `u2^b u3^c − u1^a` ([`Shape::MixedOverFirst`], b, c ≥ 1),
//! * `u2^b − u1^a u3^c` ([`Shape::SecondOverRest`], a ≥ 1),
//! * `u3^c − u1^a u2^b` ([`Shape::ThirdOverRest`]).
//!
//! Every output is oriented so that `plus` is the lexicographically smaller
//! exponent vector, which is what makes the three shapes disjoint.

pub mod lattice;
mod monomial;

pub use monomial::{genmon_compare, Evaluated, Factor, GenMonomial, RootSystem, StandardForm};

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{ExpVec, GenSeries, GroupVec, Poly, Rat, Value};
use crate::curvette::{SemiCurvette, Weights};
use crate::error::{Error, Result};

/// Default bound on the leading exponent searched per shape.
pub const DEFAULT_EXPONENT_BOUND: u32 = 50;

/// Q = u^plus − λ·u^minus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinomialRoot {
    plus: Vec<u32>,
    minus: Vec<u32>,
    lambda: Rat,
}

impl BinomialRoot {
    pub fn new(plus: Vec<u32>, minus: Vec<u32>, lambda: Rat) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::VarCountMismatch { expected: plus.len(), found: minus.len() });
        }
        if plus == minus {
            return Err(Error::InvalidRoot("both monomials coincide".into()));
        }
        if plus.iter().zip(&minus).any(|(a, b)| *a > 0 && *b > 0) {
            return Err(Error::InvalidRoot("monomials share a variable".into()));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidRoot("lambda must be nonzero".into()));
        }
        Ok(BinomialRoot { plus, minus, lambda })
    }

    /// u^plus − u^minus.
    pub fn unit(plus: Vec<u32>, minus: Vec<u32>) -> Result<Self> {
        Self::new(plus, minus, Rat::one())
    }

    /// Reads a two-term polynomial. The term with positive coefficient
    /// becomes `plus` when the signs differ, otherwise the lexicographically
    /// smaller exponent does; coefficients are then scaled so `plus` has
    /// coefficient one.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        let terms: Vec<_> = f.terms().iter().collect();
        if terms.len() != 2 {
            return Err(Error::InvalidRoot(format!("{f} is not a binomial")));
        }
        let (a, b) = (terms[0], terms[1]);
        let a_pos = a.1 > &Rat::zero();
        let b_pos = b.1 > &Rat::zero();
        let (p, m) = if a_pos != b_pos {
            if a_pos { (a, b) } else { (b, a) }
        } else {
            (a, b) // BTreeMap order: a is lex-smaller
        };
        Self::new(p.0.clone(), m.0.clone(), -(m.1 / p.1))
    }

    /// Parses a binomial such as `"x*z - y^2"`.
    pub fn parse(nvars: usize, src: &str) -> Result<Self> {
        Self::from_poly(&Poly::parse(nvars, src)?)
    }

    pub fn plus(&self) -> &[u32] {
        &self.plus
    }

    pub fn minus(&self) -> &[u32] {
        &self.minus
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// plus − minus.
    pub fn diff(&self) -> ExpVec {
        ExpVec(self.plus.iter().zip(&self.minus).map(|(a, b)| *a as i64 - *b as i64).collect())
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.nvars();
        Poly::monomial(n, self.plus.clone(), Rat::one())
            .try_sub(&Poly::monomial(n, self.minus.clone(), self.lambda.clone()))
            .expect("same ring")
    }

    /// Q′ = u^(plus − minus) − λ as a Laurent exponent and a constant.
    pub fn normalize(&self) -> (ExpVec, Rat) {
        (self.diff(), self.lambda.clone())
    }

    /// Equal up to the orientation u^a − λu^b ↔ u^b − λ⁻¹u^a, i.e. the two
    /// binomials differ by a nonzero constant factor.
    pub fn same_up_to_orientation(&self, o: &BinomialRoot) -> bool {
        self == o || (self.plus == o.minus && self.minus == o.plus && &self.lambda * &o.lambda == Rat::one())
    }

    pub fn is_quasi_homogeneous(&self, w: &Weights) -> bool {
        w.degree_u(&self.plus) == w.degree_u(&self.minus)
    }

    /// ν_δ(Q′) = ν_δ(Q) − ν_δ(u^minus).
    pub fn q_prime_value(&self, delta: &SemiCurvette) -> Result<Value> {
        let v = delta.value(&self.to_poly())?;
        let m = delta.value(&Poly::monomial(self.nvars(), self.minus.clone(), Rat::one()))?;
        Ok(match (v, m) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(&a - &b),
            (Value::Infinite, _) => Value::Infinite,
            (_, Value::Infinite) => unreachable!("monomials do not vanish on curvettes"),
        })
    }

    /// Leading coefficient of Q′ at δ: in(Q) / in(u^minus).
    pub fn q_prime_initial(&self, delta: &SemiCurvette) -> Result<Rat> {
        let q = delta.initial_coeff(&self.to_poly())?;
        let m = delta.initial_coeff(&Poly::monomial(self.nvars(), self.minus.clone(), Rat::one()))?;
        Ok(q / m)
    }

    /// Q′ evaluated as a series, using truncated division at `order`.
    pub fn q_prime_series(&self, delta: &SemiCurvette, order: &GroupVec) -> Result<GenSeries> {
        let (e, l) = self.normalize();
        let n = self.nvars();
        delta.evaluate_laurent(&[(Rat::one(), e), (-l, ExpVec::zero(n))], Some(order))
    }
}

impl fmt::Display for BinomialRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for BinomialRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({})", self.to_poly())
    }
}

/// The three binomial shapes in three variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// u2^b u3^c − u1^a
    MixedOverFirst,
    /// u2^b − u1^a u3^c
    SecondOverRest,
    /// u3^c − u1^a u2^b
    ThirdOverRest,
}

#[derive(Clone, Copy)]
enum Bound {
    AtMostMinusOne,
    AtMostZero,
    AtLeastOne,
}

impl Bound {
    fn holds(self, x: i128) -> bool {
        match self {
            Bound::AtMostMinusOne => x <= -1,
            Bound::AtMostZero => x <= 0,
            Bound::AtLeastOne => x >= 1,
        }
    }
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::MixedOverFirst => "u2^b*u3^c - u1^a",
            Shape::SecondOverRest => "u2^b - u1^a*u3^c",
            Shape::ThirdOverRest => "u3^c - u1^a*u2^b",
        }
    }

    /// The pure-power side of a root of this shape, which is its initial
    /// monomial: u1^a, u2^b or u3^c.
    pub fn initial_monomial(self, r: &BinomialRoot) -> Vec<u32> {
        let (lead, _, _) = self.pattern();
        if r.plus[lead] > 0 { r.plus.clone() } else { r.minus.clone() }
    }

    /// Lead coordinate, its sign in m = plus − minus, and the constraints
    /// on the other two coordinates.
    fn pattern(self) -> (usize, i128, [(usize, Bound); 2]) {
        match self {
            Shape::MixedOverFirst => (0, -1, [(1, Bound::AtLeastOne), (2, Bound::AtLeastOne)]),
            Shape::SecondOverRest => (1, 1, [(0, Bound::AtMostMinusOne), (2, Bound::AtMostZero)]),
            Shape::ThirdOverRest => (2, 1, [(0, Bound::AtMostZero), (1, Bound::AtMostZero)]),
        }
    }
}

/// Integer rows spanning the same ℚ-row space as the weight matrix
/// (one row per group coordinate, denominators cleared).
fn weight_rows(w: &Weights) -> Result<Vec<Vec<i128>>> {
    let mut rows = Vec::new();
    for j in 0..w.rank() {
        let col: Vec<&Rat> = w.0.iter().map(|g| &g.coords()[j]).collect();
        let l = col.iter().fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let row: Result<Vec<i128>> = col
            .iter()
            .map(|r| {
                let v = r.numer() * (&l / r.denom());
                i128::try_from(v).map_err(|_| Error::Overflow)
            })
            .collect();
        rows.push(row?);
    }
    Ok(rows)
}

fn to_root(m: &[i128]) -> BinomialRoot {
    let plus = m.iter().map(|&x| x.max(0) as u32).collect();
    let minus = m.iter().map(|&x| (-x).max(0) as u32).collect();
    BinomialRoot::unit(plus, minus).expect("nonzero lattice vector")
}

/// Tie-break key: u1-side (minus) exponents first, then plus.
fn tie_key(m: &[i128]) -> (Vec<i128>, Vec<i128>) {
    (m.iter().map(|&x| (-x).max(0)).collect(), m.iter().map(|&x| x.max(0)).collect())
}

/// Lattice vectors with m[lead] = target satisfying the shape's bounds.
fn solutions(basis: &[Vec<i128>], lead: usize, target: i128, cons: &[(usize, Bound); 2]) -> Result<Vec<Vec<i128>>> {
    let ok = |m: &[i128]| m[lead] == target && cons.iter().all(|(j, b)| b.holds(m[*j]));
    match basis.len() {
        0 => Ok(vec![]),
        1 => {
            let b = &basis[0];
            if b[lead] == 0 || target % b[lead] != 0 {
                return Ok(vec![]);
            }
            let a = target / b[lead];
            let m: Vec<i128> = b.iter().map(|x| a * x).collect();
            Ok(if ok(&m) { vec![m] } else { vec![] })
        }
        2 => {
            let (b1, b2) = (&basis[0], &basis[1]);
            let (g, x, y) = lattice::ext_gcd(b1[lead], b2[lead]);
            if g == 0 || target % g != 0 {
                return Ok(vec![]);
            }
            let k = target / g;
            let m0: Vec<i128> = (0..3).map(|i| k * x * b1[i] + k * y * b2[i]).collect();
            let d: Vec<i128> = (0..3).map(|i| (b2[lead] / g) * b1[i] - (b1[lead] / g) * b2[i]).collect();
            // Intersect the integer intervals for t from each bound.
            let (mut lo, mut hi) = (i128::MIN, i128::MAX);
            for (j, bnd) in cons {
                let (c, s) = (m0[*j], d[*j]);
                // constraint: c + t·s ≤ ub  or  c + t·s ≥ lb
                let (is_upper, limit) = match bnd {
                    Bound::AtMostMinusOne => (true, -1),
                    Bound::AtMostZero => (true, 0),
                    Bound::AtLeastOne => (false, 1),
                };
                if s == 0 {
                    if !bnd.holds(c) {
                        return Ok(vec![]);
                    }
                    continue;
                }
                let r = limit - c;
                // t·s ≤ r (upper) or t·s ≥ r (lower)
                let (tl, th) = match (is_upper, s > 0) {
                    (true, true) => (i128::MIN, r.div_euclid(s)),
                    (true, false) => (ceil_div(r, s), i128::MAX),
                    (false, true) => (ceil_div(r, s), i128::MAX),
                    (false, false) => (i128::MIN, r.div_euclid(s)),
                };
                lo = lo.max(tl);
                hi = hi.min(th);
            }
            if lo > hi {
                return Ok(vec![]);
            }
            if lo == i128::MIN || hi == i128::MAX || hi - lo > 100_000 {
                return Err(Error::Precondition("relation lattice is not rank-1 positive".into()));
            }
            Ok((lo..=hi)
                .map(|t| (0..3).map(|i| m0[i] + t * d[i]).collect::<Vec<_>>())
                .filter(|m| ok(m))
                .collect())
        }
        _ => Err(Error::Precondition("relation lattice of unexpected rank".into())),
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

/// The minimal binomial of the given shape, if the lattice has one.
pub fn minimal_of_shape(w: &Weights, shape: Shape, bound: u32) -> Result<Option<BinomialRoot>> {
    if w.n() != 3 {
        return Err(Error::Precondition("shape classification needs three variables".into()));
    }
    let basis = lattice::integer_kernel(&weight_rows(w)?, 3)?;
    let (lead, sign, cons) = shape.pattern();
    if basis.len() == 1 {
        // Only ±b: the shape exists iff the right multiple matches, and its
        // lead exponent is |b[lead]|.
        let b = &basis[0];
        if b[lead] == 0 {
            return Ok(None);
        }
        let target = sign * b[lead].abs();
        let sols = solutions(&basis, lead, target, &cons)?;
        if sols.is_empty() {
            return Ok(None);
        }
        if b[lead].unsigned_abs() > bound as u128 {
            return Err(Error::BoundExceeded { shape: shape.name(), bound });
        }
        return Ok(Some(to_root(&sols[0])));
    }
    for e in 1..=bound as i128 {
        let sols = solutions(&basis, lead, sign * e, &cons)?;
        if let Some(best) = sols.into_iter().min_by_key(|m| tie_key(m)) {
            return Ok(Some(to_root(&best)));
        }
    }
    if basis.is_empty() {
        Ok(None)
    } else {
        Err(Error::BoundExceeded { shape: shape.name(), bound })
    }
}

/// All complexity-one roots for three weights, each tagged with its shape,
/// sorted by the weighted degree of `plus`.
pub fn classify_roots_with_shapes(w: &Weights, bound: u32) -> Result<Vec<(Shape, BinomialRoot)>> {
    let mut out = Vec::new();
    for shape in [Shape::MixedOverFirst, Shape::SecondOverRest, Shape::ThirdOverRest] {
        if let Some(r) = minimal_of_shape(w, shape, bound)? {
            if !out.iter().any(|(_, q): &(Shape, BinomialRoot)| q == &r) {
                out.push((shape, r));
            }
        }
    }
    out.sort_by(|a, b| (w.degree_u(&a.1.plus), &a.1.plus).cmp(&(w.degree_u(&b.1.plus), &b.1.plus)));
    Ok(out)
}

/// The complexity-one binomial roots for weights on three variables, with
/// λ = 1 and the default exponent bound.
pub fn classify_roots(w: &Weights) -> Result<Vec<BinomialRoot>> {
    Ok(classify_roots_with_shapes(w, DEFAULT_EXPONENT_BOUND)?.into_iter().map(|x| x.1).collect())
}

/// A variable or a binomial root, for relevance tests.
#[derive(Clone, Debug)]
pub enum RootOrVar<'a> {
    Var(usize),
    Root(&'a BinomialRoot),
}

/// Variables are always relevant; a root is relevant when its monomial
/// value lies below μ_α.
pub fn is_relevant(q: &RootOrVar<'_>, mu_alpha: &GroupVec, w: &Weights) -> Result<bool> {
    match q {
        RootOrVar::Var(_) => Ok(true),
        RootOrVar::Root(r) => Ok(w.monomial_value(&r.to_poly())? < Value::Finite(mu_alpha.clone())),
    }
}

/// 1 if some complexity-one root is relevant, else 0.
pub fn pair_complexity(roots: &[BinomialRoot], mu_alpha: &GroupVec, w: &Weights) -> Result<u8> {
    for r in roots {
        if is_relevant(&RootOrVar::Root(r), mu_alpha, w)? {
            return Ok(1);
        }
    }
    Ok(0)
}

/// Convenience: a root from integer exponent slices.
pub fn root(plus: &[u32], minus: &[u32]) -> BinomialRoot {
    BinomialRoot::unit(plus.to_vec(), minus.to_vec()).expect("valid binomial")
}
