//! Sparse multivariate polynomials over ℚ, plus a Laurent variant used when
//! clearing denominators in syzygy certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rat::{int, Rat};
use crate::error::{Error, Result};

/// An integer exponent vector; negative entries denote Laurent monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(pub Vec<i64>);

impl ExpVec {
    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn add(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Positive and negative parts: `self = pos − neg`, both non-negative.
    pub fn split(&self) -> (Vec<u32>, Vec<u32>) {
        let pos = self.0.iter().map(|&e| e.max(0) as u32).collect();
        let neg = self.0.iter().map(|&e| (-e).max(0) as u32).collect();
        (pos, neg)
    }
}

/// A polynomial in `nvars` variables with rational coefficients.
///
/// Zero coefficients are never stored, so the empty map is the zero
/// polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The variable `u_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent length must equal the variable count");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, it: I) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            if e.len() != nvars {
                return Err(Error::VarCountMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term (coefficient of the zero exponent).
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(Rat::zero)
    }

    /// Single term `(exponent, coefficient)` when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&Vec<u32>, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn check(&self, o: &Poly) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: o.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly> {
        self.check(o)?;
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly> {
        self.check(o)?;
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        Ok(p)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&int(-1))
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        let mut p = Poly::zero(self.nvars);
        if r.is_zero() {
            return p;
        }
        for (e, c) in &self.terms {
            p.terms.insert(e.clone(), c * r);
        }
        p
    }

    /// Multiply by the monomial u^e.
    pub fn shift(&self, e: &[u32]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (f, c) in &self.terms {
            p.terms.insert(f.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone());
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base).expect("same ring");
            }
            base = base.try_mul(&base).expect("same ring");
            k >>= 1;
        }
        acc
    }

    /// Substitute rationals for the variables.
    pub fn eval_rat(&self, point: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            s += m;
        }
        s
    }

    /// Parses expressions such as `x*z - y^2` or `3/2*u1^2*u3 + (x - y)^2`.
    ///
    /// Variables are `u1..un`; for `n ≤ 3` the names `x, y, z` are also
    /// accepted. Juxtaposition is not multiplication: write `x*z`.
    pub fn parse(nvars: usize, src: &str) -> Result<Poly> {
        Parser::new(nvars, src).parse_all()
    }

    /// Display with the default variable names.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("u{}", i + 1)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest exponents first reads more naturally.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(var_name(self.nvars, i)),
                    _ => factors.push(format!("{}^{}", var_name(self.nvars, i), p)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Sym(char),
}

struct Parser {
    nvars: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    err: Option<Error>,
}

impl Parser {
    fn new(nvars: usize, src: &str) -> Self {
        let mut toks = Vec::new();
        let mut err = None;
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let mut text: String = chars[start..i].iter().collect();
                // "3/4" directly after a numeral is a rational literal.
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let s2 = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    text.push('/');
                    text.extend(&chars[s2..i]);
                }
                match super::rat::parse_rat(&text) {
                    Ok(r) => toks.push((start, Tok::Num(r))),
                    Err(e) => {
                        err.get_or_insert(e);
                    }
                }
            } else if ch.is_ascii_alphabetic() || ch == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(chars[start..i].iter().collect())));
            } else if "+-*^()".contains(ch) {
                toks.push((i, Tok::Sym(ch)));
                i += 1;
            } else {
                err.get_or_insert(Error::Parse(format!("unexpected character {ch:?} at column {}", i + 1)));
                i += 1;
            }
        }
        Parser { nvars, toks, pos: 0, err }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        let col = self.toks.get(self.pos).map(|t| t.0 + 1).unwrap_or(0);
        Err(Error::Parse(format!("{msg} at column {col}")))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn parse_all(mut self) -> Result<Poly> {
        if let Some(e) = self.err.take() {
            return Err(e);
        }
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return self.fail("trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars);
        let mut sign = int(1);
        if let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
            if *c == '-' {
                sign = int(-1);
            }
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = acc.try_add(&t.scale(&sign))?;
            match self.peek() {
                Some(Tok::Sym('+')) => sign = int(1),
                Some(Tok::Sym('-')) => sign = int(-1),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Sym('*')) = self.peek() {
            self.pos += 1;
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(r)) if r.is_integer() && r >= Rat::zero() => {
                    self.pos += 1;
                    let k: u32 = r
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(k));
                }
                _ => return self.fail("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Poly::constant(self.nvars, r))
            }
            Some(Tok::Ident(name)) => {
                let idx = self.resolve(&name);
                match idx {
                    Some(i) => {
                        self.pos += 1;
                        Ok(Poly::var(self.nvars, i))
                    }
                    None => self.fail(&format!("unknown variable {name:?}")),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                Ok(p)
            }
            _ => self.fail("expected a number, variable or '('"),
        }
    }

    fn resolve(&self, name: &str) -> Option<usize> {
        if self.nvars <= 3 {
            if let Some(i) = ["x", "y", "z"].iter().position(|v| *v == name) {
                if i < self.nvars {
                    return Some(i);
                }
            }
        }
        let i: usize = name.strip_prefix('u')?.parse().ok()?;
        (1..=self.nvars).contains(&i).then(|| i - 1)
    }
}

/// A Laurent polynomial: exponents may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(e: &ExpVec, c: Rat) -> Self {
        let mut p = Self::zero(e.len());
        if !c.is_zero() {
            p.terms.insert(e.0.clone(), c);
        }
        p
    }

    pub fn from_poly(p: &Poly) -> Self {
        let mut l = Self::zero(p.nvars());
        for (e, c) in p.terms() {
            l.terms.insert(e.iter().map(|&x| x as i64).collect(), c.clone());
        }
        l
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rat) {
        let slot = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        p
    }

    pub fn scale(&self, r: &Rat) -> LaurentPoly {
        let mut p = Self::zero(self.nvars);
        if !r.is_zero() {
            for (e, c) in &self.terms {
                p.terms.insert(e.clone(), c * r);
            }
        }
        p
    }

    pub fn shift(&self, e: &ExpVec) -> LaurentPoly {
        let mut p = Self::zero(self.nvars);
        for (f, c) in &self.terms {
            p.terms.insert(f.iter().zip(&e.0).map(|(a, b)| a + b).collect(), c.clone());
        }
        p
    }

    /// Componentwise minimum exponent over all terms (zero vector if empty).
    pub fn min_exponents(&self) -> ExpVec {
        let mut m: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        ExpVec(m.unwrap_or_else(|| vec![0; self.nvars]))
    }

    /// Converts to an ordinary polynomial when no exponent is negative.
    pub fn to_poly(&self) -> Option<Poly> {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            p.terms.insert(e.iter().map(|&x| x as u32).collect(), c.clone());
        }
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn parse_roundtrip() {
        let f1 = Poly::parse(3, "x*z - y^2").unwrap();
        assert_eq!(f1.to_string(), "x*z - y^2");
        let g = Poly::parse(3, "y*(x*z - y^2) + 1/5*x*(x^3 - y*z)").unwrap();
        assert_eq!(Poly::parse(3, &g.to_string()).unwrap(), g);
        assert_eq!(Poly::parse(4, "u4 - 2*u1").unwrap().len(), 2);
        assert!(Poly::parse(3, "x z").is_err());
        assert!(Poly::parse(3, "w").is_err());
        assert!(Poly::parse(2, "z").is_err());
    }

    #[test]
    fn ring_ops() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = x.try_add(&y).unwrap();
        let sq = s.pow(2);
        assert_eq!(sq, Poly::parse(2, "x^2 + 2*x*y + y^2").unwrap());
        assert!(s.try_sub(&s).unwrap().is_zero());
        assert_eq!(sq.eval_rat(&[rat(1, 2), rat(1, 2)]), rat(1, 1));
    }
}
