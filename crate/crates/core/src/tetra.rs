//! Barycentric feasibility on the segment from I = (1/3,1/3,1/3,0) to
//! S = (0,0,0,1), the value map φ = (ν(u₁), ν(Q′₄), ν(Q′₅), ν(Q′₆)) and
//! its image, and segment/hyperplane intersections in φ-coordinates.
//!
//! A note on the witness point. The classical argument places the feasible
//! point at B′ = PB ∩ IS. B′ satisfies every constraint on v or w and every
//! upper bound on u, but a lower bound u − k·t ≥ 0 can fail there, since
//! P lies on its positive side. A′ = RA ∩ IS has the symmetric property, so
//! λ = max(λ_A′, λ_B′) is always feasible. Both are reported.

use num_traits::{One, Signed, Zero};

use crate::algebra::{GenSeries, GroupVec, Rat, SignChar, Value};
use crate::curvette::{SemiCurvette, Weights};
use crate::error::{Error, Result};
use crate::roots::lattice::integer_kernel;
use crate::roots::{BinomialRoot, Factor, GenMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaryPoint {
    pub u: Rat,
    pub v: Rat,
    pub w: Rat,
    pub t: Rat,
}

impl BaryPoint {
    pub fn new(u: Rat, v: Rat, w: Rat, t: Rat) -> Result<Self> {
        let p = BaryPoint { u, v, w, t };
        if &p.u + &p.v + &p.w + &p.t != Rat::one() {
            return Err(Error::Precondition("barycentric coordinates must sum to 1".into()));
        }
        Ok(p)
    }

    /// (λ/3, λ/3, λ/3, 1 − λ) on the segment IS.
    pub fn on_axis(lambda: &Rat) -> Self {
        let third = lambda / Rat::from_integer(3.into());
        BaryPoint { u: third.clone(), v: third.clone(), w: third, t: Rat::one() - lambda }
    }

    fn all_positive(&self) -> bool {
        [&self.u, &self.v, &self.w, &self.t].iter().all(|x| x.is_positive())
    }

    pub fn coord(&self, axis: Axis) -> &Rat {
        match axis {
            Axis::U => &self.u,
            Axis::V => &self.v,
            Axis::W => &self.w,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    U,
    V,
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Ge,
    Le,
}

/// ±(axis − k·t) ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisConstraint {
    pub axis: Axis,
    pub k: Rat,
    pub sense: Sense,
}

impl AxisConstraint {
    pub fn new(axis: Axis, k: Rat, sense: Sense) -> Result<Self> {
        if k.is_negative() {
            return Err(Error::Precondition("k must be non-negative".into()));
        }
        Ok(AxisConstraint { axis, k, sense })
    }

    pub fn eval(&self, p: &BaryPoint) -> Rat {
        let g = p.coord(self.axis) - &self.k * &p.t;
        match self.sense {
            Sense::Ge => g,
            Sense::Le => -g,
        }
    }

    pub fn holds(&self, p: &BaryPoint) -> bool {
        !self.eval(p).is_negative()
    }

    /// The λ threshold 3k/(1 + 3k) where the plane meets IS.
    fn threshold(&self) -> Rat {
        let three_k = Rat::from_integer(3.into()) * &self.k;
        &three_k / (Rat::one() + &three_k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetraSolution {
    pub lo: Rat,
    pub hi: Rat,
    /// The point at the interval midpoint.
    pub d: BaryPoint,
    pub lambda_a_prime: Rat,
    pub lambda_b_prime: Rat,
    /// Whether B′ = PB ∩ IS satisfies every constraint.
    pub b_prime_feasible: bool,
    /// max(λ_A′, λ_B′), which always satisfies every constraint.
    pub lambda_witness: Rat,
    pub witness_feasible: bool,
}

/// λ of PB ∩ IS, with P the u-vertex.
pub fn lambda_b_prime(b: &BaryPoint) -> Rat {
    Rat::from_integer(3.into()) * &b.v / (Rat::one() - &b.u + &b.v)
}

/// λ of RA ∩ IS, with R the w-vertex.
pub fn lambda_a_prime(a: &BaryPoint) -> Rat {
    Rat::from_integer(3.into()) * &a.u / (Rat::one() - &a.w + &a.u)
}

fn check_inputs(a: &BaryPoint, b: &BaryPoint, cs: &[AxisConstraint]) -> Result<()> {
    if !a.all_positive() || !b.all_positive() {
        return Err(Error::Precondition("A and B need positive coordinates".into()));
    }
    if !(a.u == a.v && a.v <= a.w) {
        return Err(Error::Precondition("A must satisfy u = v <= w".into()));
    }
    if !(b.v == b.w && b.w <= b.u) {
        return Err(Error::Precondition("B must satisfy v = w <= u".into()));
    }
    for (i, c) in cs.iter().enumerate() {
        if !c.holds(a) || !c.holds(b) {
            return Err(Error::Precondition(format!("constraint {} fails at A or B", i + 1)));
        }
    }
    Ok(())
}

/// The exact feasible λ-interval on IS and the point at its midpoint.
pub fn tetra_solve(a: &BaryPoint, b: &BaryPoint, cs: &[AxisConstraint]) -> Result<TetraSolution> {
    check_inputs(a, b, cs)?;
    let (mut lo, mut hi) = (Rat::zero(), Rat::one());
    for c in cs {
        let th = c.threshold();
        match c.sense {
            Sense::Ge => lo = lo.max(th),
            Sense::Le => hi = hi.min(th),
        }
    }
    if lo > hi {
        return Err(Error::Violation(format!("empty feasible interval [{lo}, {hi}]")));
    }
    let mid = (&lo + &hi) / Rat::from_integer(2.into());
    let d = BaryPoint::on_axis(&mid);
    debug_assert!(cs.iter().all(|c| c.holds(&d)));
    let (la, lb) = (lambda_a_prime(a), lambda_b_prime(b));
    let feasible = |l: &Rat| cs.iter().all(|c| c.holds(&BaryPoint::on_axis(l)));
    let witness = la.clone().max(lb.clone());
    Ok(TetraSolution {
        b_prime_feasible: feasible(&lb),
        witness_feasible: feasible(&witness),
        lo,
        hi,
        d,
        lambda_a_prime: la,
        lambda_b_prime: lb,
        lambda_witness: witness,
    })
}

/// Grid values λ = i·resolution in [0,1] whose point satisfies every
/// constraint, by direct evaluation.
pub fn grid_oracle(cs: &[AxisConstraint], resolution: &Rat) -> Result<Vec<Rat>> {
    if !resolution.is_positive() {
        return Err(Error::Precondition("resolution must be positive".into()));
    }
    let mut out = Vec::new();
    let mut l = Rat::zero();
    while l <= Rat::one() {
        let p = BaryPoint::on_axis(&l);
        if cs.iter().all(|c| c.holds(&p)) {
            out.push(l.clone());
        }
        l += resolution;
    }
    Ok(out)
}

/// (a₁, a₂, a₃, a₄) = (ν(u₁), ν(Q′₄), ν(Q′₅), ν(Q′₆)) as rationals.
pub type PhiPoint = [Rat; 4];

fn check_positive(p: &PhiPoint) -> Result<()> {
    if p.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition("phi coordinates must be positive".into()));
    }
    Ok(())
}

/// Whether the two smallest of a₂, a₃, a₄ coincide.
pub fn phi_image_check(p: &PhiPoint) -> Result<bool> {
    check_positive(p)?;
    let [_, a2, a3, a4] = p;
    Ok((a2 == a3 && a3 <= a4) || (a2 == a4 && a4 <= a3) || (a3 == a4 && a4 <= a2))
}

/// φ(δ) for a curvette whose values all lie on the line through
/// `generator`.
pub fn phi_measure(delta: &SemiCurvette, roots: &[BinomialRoot; 3], generator: &GroupVec) -> Result<PhiPoint> {
    let mut vals = vec![delta.entries()[0].valuation()?.expect_finite("u1")?];
    for q in roots {
        vals.push(q.q_prime_value(delta)?.expect_finite(&q.to_string())?);
    }
    let mut out = Vec::with_capacity(4);
    for v in vals {
        let mut all = vec![generator.clone()];
        all.push(v);
        let (_, r) = GroupVec::common_line(&all).map_err(|_| Error::Precondition("value off the phi line".into()))?;
        out.push(r[1].clone());
    }
    Ok(out.try_into().expect("four values"))
}

fn dot(a: &[i128], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| Rat::from_integer((*x).into()) * y).sum()
}

fn as_rats(v: &[i128]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer((*x).into())).collect()
}

/// A curvette δ with φ(δ) = p, for roots with λ = 1.
///
/// u_q = t^(a₁·w_q/w₁)·E_q with E_q the polynomial truncation at order
/// T > max aᵢ of exp(L_q), L = A·t^a + B·t^b. Then u^v − 1 agrees with
/// exp(v·L) − 1 below T, so ν(Q′) is the order of v·L. A is chosen
/// orthogonal to the diff of the root with the larger value.
pub fn phi_witness(p: &PhiPoint, w: &Weights, roots: &[BinomialRoot; 3]) -> Result<SemiCurvette> {
    if !phi_image_check(p)? {
        return Err(Error::Precondition("point is not in the image of phi".into()));
    }
    if roots.iter().any(|q| !q.lambda().is_one()) {
        return Err(Error::Precondition("phi_witness needs roots with lambda = 1".into()));
    }
    let n = w.n();
    let (_, mult) = GroupVec::common_line(&w.0)?;
    let diffs: Vec<Vec<i128>> = roots.iter().map(|q| q.diff().0.iter().map(|&x| x as i128).collect()).collect();
    let [_, a2, a3, a4] = p;
    let vals = [a2, a3, a4];
    let low = vals.iter().min().copied().unwrap().clone();
    let high = vals.iter().max().copied().unwrap().clone();
    // Index of the strictly larger value, if any.
    let larger = (0..3).find(|&i| *vals[i] > low);
    let (coef_a, coef_b): (Vec<Rat>, Option<Vec<Rat>>) = match larger {
        None => {
            // Any A with v_i·A ≠ 0 for every root.
            let a = (0..)
                .map(|k: i64| (0..n).map(|q| Rat::from_integer((1 + k * q as i64 + (q as i64) * (q as i64)).into())).collect::<Vec<_>>())
                .take(64)
                .find(|a| diffs.iter().all(|d| !dot(d, a).is_zero()))
                .ok_or_else(|| Error::Precondition("no generic direction found".into()))?;
            (a, None)
        }
        Some(m) => {
            let comp = integer_kernel(&[diffs[m].clone()], n)?;
            let others: Vec<usize> = (0..3).filter(|&i| i != m).collect();
            let mut found = None;
            'search: for j in 0..16i128 {
                for pair in [(1i128, j), (j, 1)] {
                    let a: Vec<i128> = (0..n).map(|q| pair.0 * comp[0][q] + pair.1 * comp.get(1).map_or(0, |c| c[q])).collect();
                    let ar = as_rats(&a);
                    if others.iter().all(|&i| !dot(&diffs[i], &ar).is_zero()) {
                        found = Some(ar);
                        break 'search;
                    }
                }
            }
            let a = found.ok_or_else(|| Error::Precondition("no direction orthogonal to the larger root".into()))?;
            (a, Some(as_rats(&diffs[m])))
        }
    };
    let order = GroupVec::new(vec![&high + Rat::one()]);
    let one_line = |r: &Rat| GroupVec::new(vec![r.clone()]);
    let mut entries = Vec::with_capacity(n);
    for q in 0..n {
        let mut terms = vec![(coef_a[q].clone(), one_line(&low))];
        if let Some(b) = &coef_b {
            terms.push((b[q].clone(), one_line(&high)));
        }
        let l = GenSeries::from_terms(1, terms, None)?;
        let e = l.exp_truncated(&order)?.forget_truncation();
        let lead = &p[0] * &mult[q] / &mult[0];
        entries.push(e.mul_monomial(&Rat::one(), &one_line(&lead)));
    }
    let delta = SemiCurvette::new(entries, SignChar::positive(1))?;
    let got = phi_measure(&delta, roots, &GroupVec::ints(&[1]))?;
    if &got != p {
        return Err(Error::Violation(format!("witness measures {got:?}, expected {p:?}")));
    }
    Ok(delta)
}

/// h(x) = c·x + c₀ on φ-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: [Rat; 4],
    pub constant: Rat,
}

impl LinearForm {
    pub fn eval(&self, x: &PhiPoint) -> Rat {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum::<Rat>() + &self.constant
    }

    pub fn sub(&self, o: &LinearForm) -> LinearForm {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] - &o.coeffs[i]);
        LinearForm { coeffs, constant: &self.constant - &o.constant }
    }
}

/// ν(m) as a linear form in φ-coordinates, for rank-one weights:
/// ν(u_q) = a₁·w_q/w₁ and ν(Q_i) = ν(Q′_i) + ν(u^minus_i).
pub fn value_form(m: &GenMonomial, w: &Weights, roots: &[BinomialRoot; 3]) -> Result<LinearForm> {
    let (_, mult) = GroupVec::common_line(&w.0)?;
    let var = |q: usize| &mult[q] / &mult[0];
    let mut coeffs: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
    for (f, e) in m.exponents() {
        let e = Rat::from_integer((*e).into());
        match *f {
            Factor::Var(q) if q < w.n() => coeffs[0] += &e * var(q),
            Factor::Root(i) if i < 3 => {
                coeffs[i + 1] += &e;
                let minus_deg: Rat = roots[i].minus().iter().enumerate().map(|(q, k)| Rat::from_integer((*k).into()) * var(q)).sum();
                coeffs[0] += &e * minus_deg;
            }
            _ => return Err(Error::Precondition(format!("{f} has no phi value form"))),
        }
    }
    Ok(LinearForm { coeffs, constant: Rat::zero() })
}

/// The point of [e1, e2] where h vanishes, if the segment crosses it.
pub fn segment_hyperplane(e1: &PhiPoint, e2: &PhiPoint, h: &LinearForm) -> Result<Option<PhiPoint>> {
    let (h1, h2) = (h.eval(e1), h.eval(e2));
    if h1.is_zero() && h2.is_zero() {
        return Err(Error::DegenerateSegment);
    }
    if h1 == h2 {
        return Ok(None);
    }
    let s = &h1 / (&h1 - &h2);
    if s.is_negative() || s > Rat::one() {
        return Ok(None);
    }
    Ok(Some(std::array::from_fn(|i| &e1[i] + &s * (&e2[i] - &e1[i]))))
}

/// One step of the relation-peeling reduction: cut the segments from φ(α)
/// and φ(β) to a diagonal point φ(ε) with the hyperplane of the last
/// relation, and realize both cut points by curvettes.
pub fn peel_relation(
    phi_alpha: &PhiPoint,
    phi_beta: &PhiPoint,
    phi_eps: &PhiPoint,
    h: &LinearForm,
    w: &Weights,
    roots: &[BinomialRoot; 3],
) -> Result<[(PhiPoint, SemiCurvette); 2]> {
    let mut out = Vec::new();
    for start in [phi_alpha, phi_beta] {
        let p = segment_hyperplane(start, phi_eps, h)?
            .ok_or_else(|| Error::Precondition("segment does not cross the relation".into()))?;
        let delta = phi_witness(&p, w, roots)?;
        out.push((p, delta));
    }
    Ok(out.try_into().map_err(|_| Error::Precondition("two segments".into()))?)
}

/// Values of a rank-one curvette's coordinate, for reports.
pub fn rank_one_value(v: &Value) -> Option<Rat> {
    v.finite().filter(|g| g.rank() == 1).map(|g| g.coords()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::roots::classify_roots;

    fn bp(u: Rat, v: Rat, w: Rat, t: Rat) -> BaryPoint {
        BaryPoint::new(u, v, w, t).unwrap()
    }

    #[test]
    fn worked_instance() {
        let a = bp(rat(1, 5), rat(1, 5), rat(3, 10), rat(3, 10));
        let b = bp(rat(2, 5), rat(1, 5), rat(1, 5), rat(1, 5));
        let cs = [AxisConstraint::new(Axis::U, rat(1, 2), Sense::Ge).unwrap()];
        let s = tetra_solve(&a, &b, &cs).unwrap();
        assert_eq!((s.lo.clone(), s.hi.clone()), (rat(3, 5), int(1)));
        assert_eq!(s.d, bp(rat(4, 15), rat(4, 15), rat(4, 15), rat(1, 5)));
        let grid = grid_oracle(&cs, &rat(1, 100)).unwrap();
        assert_eq!(grid.first(), Some(&rat(60, 100)));
        assert_eq!(grid.len(), 41);
        let free = tetra_solve(&a, &b, &[]).unwrap();
        assert_eq!(free.d, BaryPoint::on_axis(&rat(1, 2)));
        let bad = [AxisConstraint::new(Axis::U, int(1), Sense::Ge).unwrap()];
        assert!(tetra_solve(&a, &b, &bad).is_err());
    }

    #[test]
    fn b_prime_can_fail() {
        let a = bp(rat(3, 10), rat(3, 10), rat(7, 20), rat(1, 20));
        let b = bp(rat(7, 10), rat(1, 10), rat(1, 10), rat(1, 10));
        let cs = [AxisConstraint::new(Axis::U, int(6), Sense::Ge).unwrap()];
        let s = tetra_solve(&a, &b, &cs).unwrap();
        assert_eq!(s.lambda_b_prime, rat(3, 4));
        assert_eq!(s.lo, rat(18, 19));
        assert!(!s.b_prime_feasible);
        assert!(s.witness_feasible);
    }

    #[test]
    fn phi_checks() {
        assert!(phi_image_check(&[int(1), int(2), int(2), int(3)]).unwrap());
        assert!(!phi_image_check(&[int(1), int(2), int(3), int(4)]).unwrap());
        assert!(phi_image_check(&[int(1), int(5), int(3), int(3)]).unwrap());
        assert!(phi_image_check(&[int(0), int(1), int(1), int(1)]).is_err());
    }

    #[test]
    fn witnesses_round_trip() {
        let w = Weights::ints(&[3, 4, 5], 1).unwrap();
        let rs: [BinomialRoot; 3] = classify_roots(&w).unwrap().try_into().unwrap();
        for p in [
            [int(1), int(2), int(2), int(3)],
            [int(1), int(2), int(2), int(2)],
            [rat(1, 2), int(5), rat(3, 2), rat(3, 2)],
            [int(2), rat(7, 3), int(4), rat(7, 3)],
        ] {
            let d = phi_witness(&p, &w, &rs).unwrap();
            assert_eq!(phi_measure(&d, &rs, &GroupVec::ints(&[1])).unwrap(), p);
        }
        assert!(phi_witness(&[int(1), int(2), int(3), int(4)], &w, &rs).is_err());
    }

    #[test]
    fn segments() {
        let h = LinearForm { coeffs: [int(1), int(0), int(0), int(0)], constant: int(-1) };
        let z = [int(0), int(0), int(0), int(0)];
        let two = [int(2), int(2), int(2), int(2)];
        assert_eq!(segment_hyperplane(&z, &two, &h).unwrap(), Some([int(1), int(1), int(1), int(1)]));
        let shifted = [int(0), int(1), int(0), int(0)];
        assert_eq!(segment_hyperplane(&z, &shifted, &h).unwrap(), None);
        let flat = LinearForm { coeffs: [int(0), int(0), int(0), int(0)], constant: int(0) };
        assert!(matches!(segment_hyperplane(&z, &two, &flat), Err(Error::DegenerateSegment)));
    }
}
