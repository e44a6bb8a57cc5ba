//! The dimension-two pipeline: blowups of plane curvettes, slopes and
//! directions, Weierstrass-style coefficient expansions with their
//! lexicographic order, and sampled checks of the inclusions that make
//! {g′₁ > 0, g′ₛ < 0} a quadrant.
//!
//! Slopes live in ℚ here. Irrational or transcendental slopes would need a
//! larger residue field and are not modelled.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GenSeries, GroupVec, Poly, Rat, SignChar};
use crate::error::{Error, Result};

pub const MAX_BLOWUPS: usize = 64;

/// A point given by substituting two series for (x, y). Entries produced by
/// a non-terminating division carry a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvette2 {
    pub x: GenSeries,
    pub y: GenSeries,
    pub sc: SignChar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// Coordinates (x, y/x); the exceptional divisor is x.
    YOverX,
    /// Coordinates (x/y, y); the exceptional divisor is y.
    XOverY,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Infinity,
    Finite(Rat),
}

impl Curvette2 {
    pub fn new(x: GenSeries, y: GenSeries, sc: SignChar) -> Result<Self> {
        for (name, e) in [("x", &x), ("y", &y)] {
            if e.rank() != sc.rank() {
                return Err(Error::RankMismatch { expected: sc.rank(), found: e.rank() });
            }
            if e.leading().is_none() {
                return Err(Error::InvalidCurvette(format!("{name} is zero")));
            }
            for g in e.terms().keys() {
                sc.sigma(g)?;
            }
        }
        Ok(Curvette2 { x, y, sc })
    }

    /// Rank-one curvette from integer-exponent terms.
    pub fn from_ints(x: &[(Rat, i64)], y: &[(Rat, i64)]) -> Result<Self> {
        let s = |ts: &[(Rat, i64)]| GenSeries::from_terms(1, ts.iter().map(|(c, e)| (c.clone(), GroupVec::ints(&[*e]))), None);
        Curvette2::new(s(x)?, s(y)?, SignChar::positive(1))
    }

    fn lead(e: &GenSeries) -> (GroupVec, Rat) {
        let (g, c) = e.leading().expect("nonzero entries");
        (g.clone(), c.clone())
    }

    pub fn is_centered(&self) -> bool {
        Self::lead(&self.x).0.is_positive() && Self::lead(&self.y).0.is_positive()
    }

    pub fn sign_x(&self) -> Result<i8> {
        self.x.sign(&self.sc)
    }

    pub fn sign_y(&self) -> Result<i8> {
        self.y.sign(&self.sc)
    }

    /// f(x(t), y(t)) for f in two variables.
    pub fn evaluate(&self, f: &Poly) -> Result<GenSeries> {
        if f.nvars() != 2 {
            return Err(Error::VarCountMismatch { expected: 2, found: f.nvars() });
        }
        let mut acc = GenSeries::zero(self.sc.rank());
        for (e, c) in f.terms() {
            let m = self.x.pow(e[0]).try_mul(&self.y.pow(e[1]))?.scale(c);
            acc = acc.try_add(&m)?;
        }
        Ok(acc)
    }

    pub fn sign_of(&self, f: &Poly) -> Result<i8> {
        self.evaluate(f)?.sign(&self.sc)
    }

    /// f = 0 is tangent when ν(f) exceeds min(ν(x), ν(y)).
    pub fn is_tangent(&self, f: &Poly) -> Result<bool> {
        let m = Self::lead(&self.x).0.min(Self::lead(&self.y).0);
        let v = self.evaluate(f)?.valuation()?;
        Ok(match v.finite() {
            None => true,
            Some(g) => *g > m,
        })
    }

    fn max_exponent(&self) -> GroupVec {
        self.x.terms().keys().chain(self.y.terms().keys()).max().cloned().expect("nonzero entries")
    }
}

/// The strict transform in the chart selected by comparing values. The
/// quotient is truncated at twice the largest input exponent unless the
/// division terminates.
pub fn blowup(a: &Curvette2) -> Result<(Chart, Curvette2)> {
    if !a.is_centered() {
        return Err(Error::Precondition("blowup needs a centered curvette".into()));
    }
    let order = a.max_exponent().scale_int(2);
    let (vx, vy) = (Curvette2::lead(&a.x).0, Curvette2::lead(&a.y).0);
    if vy >= vx {
        let q = a.y.div_truncated(&a.x, &order)?;
        Ok((Chart::YOverX, Curvette2::new(a.x.clone(), q, a.sc.clone())?))
    } else {
        let q = a.x.div_truncated(&a.y, &order)?;
        Ok((Chart::XOverY, Curvette2::new(q, a.y.clone(), a.sc.clone())?))
    }
}

pub fn slope(a: &Curvette2) -> Slope {
    let ((vx, cx), (vy, cy)) = (Curvette2::lead(&a.x), Curvette2::lead(&a.y));
    match vx.cmp(&vy) {
        Ordering::Greater => Slope::Infinity,
        Ordering::Equal => Slope::Finite(cy / cx),
        Ordering::Less => Slope::Finite(Rat::zero()),
    }
}

pub fn same_direction(a: &Curvette2, b: &Curvette2) -> Result<bool> {
    let s = slope(a);
    if s != slope(b) {
        return Err(Error::Precondition("direction is only defined at equal slopes".into()));
    }
    Ok(match s {
        Slope::Infinity => a.sign_y()? == b.sign_y()?,
        Slope::Finite(_) => a.sign_x()? == b.sign_x()?,
    })
}

/// Blowup followed by the translation that recenters the point: in chart
/// y/x the new coordinates are (x, y/x − slope), in chart x/y they are
/// (y, x/y), so x′ is always the last exceptional divisor.
pub fn blowup_centered(a: &Curvette2) -> Result<Curvette2> {
    let s = slope(a);
    let (chart, b) = blowup(a)?;
    match (chart, s) {
        (Chart::YOverX, Slope::Finite(c)) => {
            let shift = GenSeries::constant(a.sc.rank(), c);
            Curvette2::new(b.x, b.y.try_sub(&shift)?, b.sc)
        }
        (Chart::XOverY, _) => Curvette2::new(b.y, b.x, b.sc),
        (Chart::YOverX, Slope::Infinity) => unreachable!("chart y/x has a finite slope"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separated {
    pub alpha: Curvette2,
    pub beta: Curvette2,
    pub blowups: usize,
    /// Set when the points share a slope but point in different
    /// directions, where no blowup is needed.
    pub opposite_directions: bool,
}

/// Blow both points up in lockstep until their slopes differ. With zero
/// blowups x′ is the caller's coordinate; otherwise it is the last
/// exceptional divisor, negated if needed so that x′ > 0 at both points.
pub fn separate_slopes(a: &Curvette2, b: &Curvette2, max_iter: usize) -> Result<Separated> {
    let (mut a, mut b) = (a.clone(), b.clone());
    for k in 0..=max_iter {
        if slope(&a) != slope(&b) {
            if k > 0 {
                let (sa, sb) = (a.sign_x()?, b.sign_x()?);
                if sa != sb {
                    return Err(Error::Violation("x′ changes sign after separating blowups".into()));
                }
                if sa < 0 {
                    a = Curvette2::new(a.x.neg(), a.y, a.sc)?;
                    b = Curvette2::new(b.x.neg(), b.y, b.sc)?;
                }
            }
            return Ok(Separated { alpha: a, beta: b, blowups: k, opposite_directions: false });
        }
        if !same_direction(&a, &b)? {
            return Ok(Separated { alpha: a, beta: b, blowups: k, opposite_directions: true });
        }
        if k == max_iter {
            break;
        }
        a = blowup_centered(&a)?;
        b = blowup_centered(&b)?;
    }
    Err(Error::Precondition(format!("slopes still agree after {max_iter} blowups")))
}

/// g′ = y′ + Σ cᵢ x′^i up to x′^N.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffExpansion {
    pub coeffs: Vec<Rat>,
}

impl CoeffExpansion {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        CoeffExpansion { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// The polynomial y′ + Σ cᵢ x′^i in (x′, y′).
    pub fn to_poly(&self) -> Poly {
        let mut terms = vec![(vec![0, 1], Rat::one())];
        for (i, c) in self.coeffs.iter().enumerate() {
            terms.push((vec![i as u32 + 1, 0], c.clone()));
        }
        Poly::from_terms(2, terms).expect("two variables")
    }
}

type Uni = Vec<Rat>;

fn uni_mul(a: &Uni, b: &Uni, cap: Option<usize>) -> Uni {
    let len = match cap {
        Some(c) => (a.len() + b.len()).saturating_sub(1).min(c),
        None => (a.len() + b.len()).saturating_sub(1),
    };
    let mut out = vec![Rat::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// g(x, p(x)), optionally only the coefficients below x^cap.
fn substitute(g: &Poly, p: &Uni, cap: Option<usize>) -> Uni {
    let mut out: Uni = Vec::new();
    for (e, c) in g.terms() {
        let mut m: Uni = vec![Rat::zero(); e[0] as usize];
        m.push(c.clone());
        for _ in 0..e[1] {
            m = uni_mul(&m, p, cap);
        }
        if let Some(cap) = cap {
            m.truncate(cap);
        }
        if out.len() < m.len() {
            out.resize(m.len(), Rat::zero());
        }
        for (i, x) in m.into_iter().enumerate() {
            out[i] += x;
        }
    }
    out
}

/// The series root y′ = −Σ cᵢ x′^i of g up to order N, coefficient by
/// coefficient: with y_{k−1} known, the x′^k coefficient of g(x′, y_{k−1})
/// fixes the next one through ∂g/∂y′(0,0).
pub fn newton_expand(g: &Poly, n: usize) -> Result<CoeffExpansion> {
    if g.nvars() != 2 {
        return Err(Error::VarCountMismatch { expected: 2, found: g.nvars() });
    }
    if !g.constant_term().is_zero() {
        return Err(Error::Precondition("g must vanish at the origin".into()));
    }
    let gy = g.terms().get(&vec![0, 1]).cloned().unwrap_or_else(Rat::zero);
    if gy.is_zero() {
        return Err(Error::Precondition("g is singular or tangent to y′ = 0 at the origin".into()));
    }
    let mut root: Uni = vec![Rat::zero()];
    for k in 1..=n {
        let r = substitute(g, &root, Some(k + 1));
        let ek = r.get(k).cloned().unwrap_or_else(Rat::zero);
        root.push(-ek / &gy);
    }
    Ok(CoeffExpansion::new(root[1..].iter().map(|r| -r).collect()))
}

/// Lowest power of x′ in g(x′, −Σ cᵢ x′^i), or None when it vanishes.
pub fn residual_order(g: &Poly, e: &CoeffExpansion) -> Option<usize> {
    let mut p: Uni = vec![Rat::zero()];
    p.extend(e.coeffs.iter().map(|c| -c));
    substitute(g, &p, None).iter().position(|c| !c.is_zero())
}

/// j ≺ ℓ when the first differing coefficient of j is smaller.
pub fn prec_compare(e1: &CoeffExpansion, e2: &CoeffExpansion) -> Result<Ordering> {
    let n = e1.truncation().min(e2.truncation());
    for i in 0..n {
        match e1.coeffs[i].cmp(&e2.coeffs[i]) {
            Ordering::Equal => continue,
            o => return Ok(o),
        }
    }
    Err(Error::ExtendTruncation(n))
}

/// Seeded sample points in (x′, y′) for the inclusion checks. Each point
/// has x′ = ±a·t^p(1 + b·t) and y′ either near the curve of one reference
/// expansion (its root plus a monomial perturbation at a random depth) or
/// an unrelated monomial, so that signs are decided at many depths.
pub fn sample_points(refs: &[CoeffExpansion], seed: u64, count: usize) -> Result<Vec<Curvette2>> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let small = |rng: &mut ChaCha8Rng| loop {
            let r = Rat::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into());
            if !r.is_zero() {
                return r;
            }
        };
        let p: i64 = rng.gen_range(1..=2);
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = Rat::from_integer((sign * rng.gen_range(1i64..=3)).into());
        let b = small(&mut rng);
        let x = GenSeries::from_int_terms(1, &[(a.clone(), &[p]), (a * &b, &[p + 1])]);
        let y = if refs.is_empty() || rng.gen_bool(0.2) {
            let q: i64 = rng.gen_range(1..=4);
            GenSeries::from_int_terms(1, &[(small(&mut rng), &[q])])
        } else {
            let e = &refs[rng.gen_range(0..refs.len())];
            let mut y = GenSeries::zero(1);
            let mut xp = GenSeries::one(1);
            for c in &e.coeffs {
                xp = xp.try_mul(&x)?;
                y = y.try_sub(&xp.scale(c))?;
            }
            let depth: i64 = rng.gen_range(1..=p * (e.truncation() as i64 + 1) + 1);
            y.try_add(&GenSeries::from_int_terms(1, &[(small(&mut rng), &[depth])]))?
        };
        if y.is_zero() {
            continue;
        }
        out.push(Curvette2::new(x, y, SignChar::positive(1))?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    /// prec_compare(e_j, e_q); None when the expansions agree to their
    /// common truncation and the check was skipped.
    pub order: Option<Ordering>,
    pub sampled: usize,
    /// Points with x′ > 0 where g′_j > 0 or g′_q < 0.
    pub relevant: usize,
    pub violations: Vec<usize>,
}

/// For a claimed j ≺ q: {g′_j > 0, x′ > 0} ⊆ {g′_q > 0} and, on the
/// negative side, {g′_q < 0, x′ > 0} ⊆ {g′_j < 0}. g′ is rebuilt as the
/// polynomial of each expansion. The claimed order is checked against
/// prec_compare but not enforced, so a mislabelled pair shows up as
/// violations.
pub fn inclusion_check(e_j: &CoeffExpansion, e_q: &CoeffExpansion, samples: &[Curvette2]) -> Result<InclusionReport> {
    let order = match prec_compare(e_j, e_q) {
        Ok(o) => o,
        Err(Error::ExtendTruncation(_)) => {
            return Ok(InclusionReport { order: None, sampled: 0, relevant: 0, violations: vec![] })
        }
        Err(e) => return Err(e),
    };
    let (gj, gq) = (e_j.to_poly(), e_q.to_poly());
    let mut rep = InclusionReport { order: Some(order), sampled: samples.len(), relevant: 0, violations: vec![] };
    for (i, d) in samples.iter().enumerate() {
        if d.sign_x()? <= 0 {
            continue;
        }
        let (sj, sq) = (d.sign_of(&gj)?, d.sign_of(&gq)?);
        if sj > 0 || sq < 0 {
            rep.relevant += 1;
            if (sj > 0 && sq <= 0) || (sq < 0 && sj >= 0) {
                rep.violations.push(i);
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingCoefficientReport {
    pub c_first: Rat,
    pub c_last: Rat,
    /// c₁ of the first expansion exceeds c₁ of the last.
    pub holds: bool,
    pub violations: Vec<String>,
}

/// The leading-coefficient inequality between the first and last forms,
/// given g′₁ > 0 and g′ₛ < 0 at both points. Failed sign hypotheses and a
/// failed inequality are reported as violations; equal slopes are an error.
pub fn leading_coefficient_check(first: &CoeffExpansion, last: &CoeffExpansion, a: &Curvette2, b: &Curvette2) -> Result<LeadingCoefficientReport> {
    let (c1, cs) = match (first.coeffs.first(), last.coeffs.first()) {
        (Some(x), Some(y)) => (x.clone(), y.clone()),
        _ => return Err(Error::Precondition("expansions need at least one coefficient".into())),
    };
    let (sa, sb) = (slope(a), slope(b));
    if sa == sb {
        let forced = sa == Slope::Finite(-c1.clone());
        let why = if forced { ": b = −c₁₁ at both points" } else { "" };
        return Err(Error::Precondition(format!("points share the slope{why}")));
    }
    let (g1, gs) = (first.to_poly(), last.to_poly());
    let mut violations = Vec::new();
    for (name, p) in [("alpha", a), ("beta", b)] {
        if p.sign_of(&g1)? <= 0 {
            violations.push(format!("g′₁ is not positive at {name}"));
        }
        if p.sign_of(&gs)? >= 0 {
            violations.push(format!("g′ₛ is not negative at {name}"));
        }
    }
    let holds = c1 > cs;
    if !holds {
        violations.push(format!("c₁₁ = {c1} does not exceed c₁ₛ = {cs}"));
    }
    Ok(LeadingCoefficientReport { c_first: c1, c_last: cs, holds, violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrantReport {
    pub sampled: usize,
    pub members: usize,
    /// Members of {g′₁ > 0, g′ₛ < 0} with x′ ≤ 0.
    pub violations: Vec<usize>,
}

pub fn quadrant_check(first: &CoeffExpansion, last: &CoeffExpansion, samples: &[Curvette2]) -> Result<QuadrantReport> {
    let (g1, gs) = (first.to_poly(), last.to_poly());
    let mut rep = QuadrantReport { sampled: samples.len(), members: 0, violations: vec![] };
    for (i, d) in samples.iter().enumerate() {
        if d.sign_of(&g1)? > 0 && d.sign_of(&gs)? < 0 {
            rep.members += 1;
            if d.sign_x()? <= 0 {
                rep.violations.push(i);
            }
        }
    }
    Ok(rep)
}
