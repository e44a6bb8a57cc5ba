//! The lex-ordered value group ℚ^k, values with ∞, and sign characters.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rat::{int, Rat};
use crate::error::{Error, Result};

/// An element of ℚ^k with the lexicographic order.
///
/// The derived `Ord` is lexicographic on coordinates, which is the group
/// order whenever both sides have the same rank. Use [`GroupVec::lex_compare`]
/// when ranks are not known to agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupVec(Vec<Rat>);

impl GroupVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        assert!(!coords.is_empty(), "GroupVec rank must be positive");
        GroupVec(coords)
    }

    /// Integer coordinates, e.g. `GroupVec::ints(&[1, 8])` for (1,8).
    pub fn ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rat::zero(); rank])
    }

    /// The unit vector with a 1 in coordinate `j`.
    pub fn unit(rank: usize, j: usize) -> Self {
        let mut v = vec![Rat::zero(); rank];
        v[j] = int(1);
        Self::new(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(())
    }

    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        self.check_rank(other)?;
        Ok(self.0.cmp(&other.0))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(GroupVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(GroupVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GroupVec(self.0.iter().map(|c| c * r).collect())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&int(n))
    }

    /// 1-based index of the first nonzero coordinate.
    ///
    /// The largest convex subgroup of ℚ^k not containing `self` is the set of
    /// vectors whose level is strictly greater, together with 0.
    pub fn isolated_level(&self) -> Result<usize> {
        self.0.iter().position(|c| !c.is_zero()).map(|i| i + 1).ok_or(Error::ZeroVector)
    }

    /// Whether `self` lies in the greatest isolated subgroup avoiding `p`.
    /// The zero vector counts as a member.
    pub fn in_isolated_below(&self, p: &Self) -> Result<bool> {
        self.check_rank(p)?;
        let lp = p.isolated_level()?;
        match self.isolated_level() {
            Err(_) => Ok(true),
            Ok(l) => Ok(l > lp),
        }
    }

    /// If every vector in `vs` is a rational multiple of one nonzero vector,
    /// returns that generator (the first nonzero entry) and the multipliers.
    pub fn common_line(vs: &[GroupVec]) -> Result<(GroupVec, Vec<Rat>)> {
        let g = vs
            .iter()
            .find(|v| !v.is_zero())
            .cloned()
            .ok_or(Error::ZeroVector)?;
        let j = g.isolated_level()? - 1;
        let mut out = Vec::with_capacity(vs.len());
        for v in vs {
            g.check_rank(v)?;
            let r = &v.0[j] / &g.0[j];
            if &g.scale(&r) != v {
                return Err(Error::Precondition(format!("{v} is not a multiple of {g}")));
            }
            out.push(r);
        }
        Ok((g, out))
    }
}

impl fmt::Display for GroupVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GroupVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms assume equal ranks and panic otherwise; library code only
// uses them on values drawn from a single curvette or session.
impl Add for &GroupVec {
    type Output = GroupVec;
    fn add(self, rhs: &GroupVec) -> GroupVec {
        self.try_add(rhs).expect("GroupVec rank mismatch")
    }
}

impl Sub for &GroupVec {
    type Output = GroupVec;
    fn sub(self, rhs: &GroupVec) -> GroupVec {
        self.try_sub(rhs).expect("GroupVec rank mismatch")
    }
}

impl Neg for &GroupVec {
    type Output = GroupVec;
    fn neg(self) -> GroupVec {
        GroupVec(self.0.iter().map(|c| -c).collect())
    }
}

/// A value in Γ ∪ {∞}. `Infinite` is the value of zero and sorts last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(GroupVec),
    Infinite,
}

impl Value {
    pub fn finite(&self) -> Option<&GroupVec> {
        match self {
            Value::Finite(g) => Some(g),
            Value::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Value::Infinite)
    }

    /// Sum, with ∞ absorbing.
    pub fn plus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinite,
        }
    }

    /// Finite value or an error naming what vanished.
    pub fn expect_finite(self, what: &str) -> Result<GroupVec> {
        match self {
            Value::Finite(g) => Ok(g),
            Value::Infinite => Err(Error::VanishingEvaluation(what.to_string())),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(g) => write!(f, "{g}"),
            Value::Infinite => write!(f, "inf"),
        }
    }
}

/// Signs of the basis powers t^(e_j / D).
///
/// The sign of t^γ is the product of `signs[j]` over the coordinates where
/// D·γ_j is odd. Coordinates whose basis sign is +1 never affect the result,
/// so they may be arbitrary rationals; a coordinate with basis sign −1 must
/// scale to an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignChar {
    signs: Vec<i8>,
    denom: i64,
}

impl SignChar {
    pub fn new(signs: Vec<i8>, denom: i64) -> Result<Self> {
        if signs.is_empty() || signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parse("sign character entries must be +1 or -1".into()));
        }
        if denom <= 0 {
            return Err(Error::Parse("common denominator must be positive".into()));
        }
        Ok(SignChar { signs, denom })
    }

    /// All basis powers positive.
    pub fn positive(rank: usize) -> Self {
        SignChar { signs: vec![1; rank], denom: 1 }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn rank(&self) -> usize {
        self.signs.len()
    }

    /// The same character with basis sign `j` flipped.
    pub fn flipped(&self, j: usize) -> Self {
        let mut s = self.clone();
        s.signs[j] = -s.signs[j];
        s
    }

    /// σ(γ) ∈ {−1, +1}.
    pub fn sigma(&self, g: &GroupVec) -> Result<i8> {
        if g.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: g.rank() });
        }
        let mut s = 1i8;
        for (c, &b) in g.coords().iter().zip(&self.signs) {
            if b == 1 {
                continue;
            }
            let scaled = c * int(self.denom);
            if !scaled.is_integer() {
                return Err(Error::SignUndefined(g.to_string()));
            }
            if scaled.to_integer().is_odd() {
                s = -s;
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn g(c: &[i64]) -> GroupVec {
        GroupVec::ints(c)
    }

    #[test]
    fn lex_examples() {
        assert_eq!(g(&[1, 4]).lex_compare(&g(&[0, 8])).unwrap(), Ordering::Greater);
        assert_eq!(g(&[0, 0]).lex_compare(&g(&[0, 0])).unwrap(), Ordering::Equal);
        assert_eq!(g(&[1, 5]).lex_compare(&g(&[1, 8])).unwrap(), Ordering::Less);
        assert!(g(&[1]).lex_compare(&g(&[1, 0])).is_err());
    }

    #[test]
    fn isolated_levels() {
        assert_eq!(g(&[1, 4]).isolated_level().unwrap(), 1);
        assert_eq!(g(&[0, 3]).isolated_level().unwrap(), 2);
        assert_eq!(g(&[0, 0]).isolated_level(), Err(Error::ZeroVector));
    }

    #[test]
    fn sign_character() {
        let sc = SignChar::new(vec![1, -1], 1).unwrap();
        assert_eq!(sc.sigma(&g(&[0, 1])).unwrap(), -1);
        assert_eq!(sc.sigma(&g(&[5, 2])).unwrap(), 1);
        let half = GroupVec::new(vec![rat(1, 2), rat(1, 2)]);
        assert!(sc.sigma(&half).is_err());
        let sc2 = SignChar::new(vec![1, -1], 2).unwrap();
        assert_eq!(sc2.sigma(&half).unwrap(), -1);
        assert_eq!(SignChar::positive(2).sigma(&half).unwrap(), 1);
    }

    #[test]
    fn common_line() {
        let (gen, rs) =
            GroupVec::common_line(&[g(&[0, 3]), g(&[0, 4]), g(&[0, 5])]).unwrap();
        assert_eq!(gen, g(&[0, 3]));
        assert_eq!(rs, vec![int(1), rat(4, 3), rat(5, 3)]);
        assert!(GroupVec::common_line(&[g(&[1, 0]), g(&[0, 1])]).is_err());
    }
}
