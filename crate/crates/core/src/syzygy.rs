//! Syzygies ω_i·Q_i + ω_j·Q_j + ω_k·Q_k = 0 among three binomial roots.
//!
//! With A = u^plus and B = λ·u^minus, a relation Σ μ·(plus − minus) = 0
//! with Π λ^μ = 1 gives A_i^μi·A_j^μj·A_k^μk = B_i^μi·B_j^μj·B_k^μk, which
//! telescopes into
//!
//! ```text
//! (A_i^μi − B_i^μi)·A_j^μj·A_k^μk
//!   + (A_j^μj − B_j^μj)·B_i^μi·A_k^μk
//!   + (A_k^μk − B_k^μk)·B_i^μi·B_j^μj = 0.
//! ```
//!
//! Each bracket is Q times a geometric sum, so the cofactors are Laurent
//! polynomials; one monomial multiplier turns them into polynomials.

use num_integer::Integer;
use num_traits::One;

use crate::algebra::{ExpVec, LaurentPoly, Poly, Rat};
use crate::curvette::Weights;
use crate::error::{Error, Result};
use crate::roots::lattice::integer_kernel;
use crate::roots::BinomialRoot;

#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyCertificate {
    pub mu: [i64; 3],
    pub omegas: [Poly; 3],
    pub roots: [BinomialRoot; 3],
    /// The monomial the Laurent cofactors were multiplied by.
    pub clearing: ExpVec,
    /// Number of terms in each geometric sum, |μ|.
    pub depths: [u64; 3],
    /// Some μ vanished, so its cofactor is zero.
    pub degenerate: bool,
}

impl SyzygyCertificate {
    /// Σ ω·Q, which must be the zero polynomial.
    pub fn expansion(&self) -> Result<Poly> {
        let mut acc = Poly::zero(self.roots[0].nvars());
        for (w, q) in self.omegas.iter().zip(&self.roots) {
            acc = acc.try_add(&w.try_mul(&q.to_poly())?)?;
        }
        Ok(acc)
    }

    /// A stable text rendering of the inputs, for hashing.
    pub fn canonical_input(&self) -> String {
        canonical_input(&self.roots)
    }
}

pub fn canonical_input(roots: &[BinomialRoot]) -> String {
    roots
        .iter()
        .map(|r| {
            let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            format!("[{}]-{}*[{}]", join(r.plus()), r.lambda(), join(r.minus()))
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// The primitive integer relation among three exponent differences, with
/// its first nonzero entry positive.
///
/// A zero entry is only accepted when the other two vectors are equal up
/// to sign; any other collinear pair is rejected.
pub fn find_mu(vi: &ExpVec, vj: &ExpVec, vk: &ExpVec) -> Result<[i64; 3]> {
    let n = vi.len();
    if vj.len() != n || vk.len() != n {
        return Err(Error::VarCountMismatch { expected: n, found: vj.len().max(vk.len()) });
    }
    let rows: Vec<Vec<i128>> = (0..n).map(|q| vec![vi.0[q] as i128, vj.0[q] as i128, vk.0[q] as i128]).collect();
    let ker = integer_kernel(&rows, 3)?;
    let m = match ker.len() {
        0 => return Err(Error::NotCoplanar),
        1 => &ker[0],
        _ => return Err(Error::Collinear("the three differences span a line".into())),
    };
    let g = m.iter().fold(0i128, |a, b| a.gcd(b));
    let mut mu = [0i64; 3];
    for (slot, x) in mu.iter_mut().zip(m) {
        *slot = i64::try_from(x / g).map_err(|_| Error::Overflow)?;
    }
    if mu.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        mu.iter_mut().for_each(|x| *x = -*x);
    }
    let vs = [vi, vj, vk];
    if let Some(z) = mu.iter().position(|x| *x == 0) {
        let others: Vec<&ExpVec> = (0..3).filter(|&i| i != z).map(|i| vs[i]).collect();
        let duplicate = others[0] == others[1] || others[0].0 == others[1].scale(-1).0;
        if !duplicate {
            return Err(Error::Collinear(format!("differences {} and {} are collinear", fmt_exp(others[0]), fmt_exp(others[1]))));
        }
    }
    Ok(mu)
}

fn fmt_exp(e: &ExpVec) -> String {
    format!("({})", e.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn rat_pow(r: &Rat, k: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= r;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn plus_of(q: &BinomialRoot) -> ExpVec {
    ExpVec(q.plus().iter().map(|&x| x as i64).collect())
}

fn minus_of(q: &BinomialRoot) -> ExpVec {
    ExpVec(q.minus().iter().map(|&x| x as i64).collect())
}

/// A^k as a Laurent monomial.
fn a_pow(q: &BinomialRoot, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(&plus_of(q).scale(k), Rat::one())
}

/// B^k = λ^k·u^(k·minus).
fn b_pow(q: &BinomialRoot, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(&minus_of(q).scale(k), rat_pow(q.lambda(), k))
}

/// F with A^m − B^m = Q·F.
fn bracket_cofactor(q: &BinomialRoot, m: i64) -> LaurentPoly {
    let n = q.nvars();
    let k = m.abs();
    let mut phi = LaurentPoly::zero(n);
    for l in 0..k {
        phi = phi.add(&a_pow(q, k - 1 - l).mul(&b_pow(q, l)));
    }
    if m >= 0 {
        phi
    } else {
        // A^-k − B^-k = −(A^k − B^k)/(A^k·B^k)
        phi.mul(&a_pow(q, -k)).mul(&b_pow(q, -k)).scale(&-Rat::one())
    }
}

/// Builds the certificate from the telescoping identity.
pub fn build_syzygy(qi: &BinomialRoot, qj: &BinomialRoot, qk: &BinomialRoot, w: &Weights) -> Result<SyzygyCertificate> {
    let roots = [qi.clone(), qj.clone(), qk.clone()];
    let n = qi.nvars();
    for q in &roots {
        if q.nvars() != n || w.n() != n {
            return Err(Error::VarCountMismatch { expected: n, found: q.nvars() });
        }
        if !q.is_quasi_homogeneous(w) {
            return Err(Error::Precondition(format!("{q} is not quasi-homogeneous")));
        }
    }
    let mu = find_mu(&qi.diff(), &qj.diff(), &qk.diff())?;
    let lam = (0..3).fold(Rat::one(), |acc, i| acc * rat_pow(roots[i].lambda(), mu[i]));
    if !lam.is_one() {
        return Err(Error::Precondition(format!("product of lambda powers is {lam}, not 1")));
    }
    let [ri, rj, rk] = &roots;
    let laurent = [
        bracket_cofactor(ri, mu[0]).mul(&a_pow(rj, mu[1])).mul(&a_pow(rk, mu[2])),
        bracket_cofactor(rj, mu[1]).mul(&b_pow(ri, mu[0])).mul(&a_pow(rk, mu[2])),
        bracket_cofactor(rk, mu[2]).mul(&b_pow(ri, mu[0])).mul(&b_pow(rj, mu[1])),
    ];
    let mut low: Option<ExpVec> = None;
    for l in laurent.iter().filter(|l| !l.is_zero()) {
        let m = l.min_exponents();
        low = Some(match low {
            None => m,
            Some(c) => ExpVec(c.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect()),
        });
    }
    let clearing = low.unwrap_or_else(|| ExpVec::zero(n)).scale(-1);
    let omegas: Vec<Poly> = laurent
        .iter()
        .map(|l| l.shift(&clearing).to_poly().expect("cleared exponents are non-negative"))
        .collect();
    let cert = SyzygyCertificate {
        mu,
        omegas: omegas.try_into().expect("three cofactors"),
        roots,
        clearing,
        depths: mu.map(|m| m.unsigned_abs()),
        degenerate: mu.contains(&0),
    };
    if !cert.expansion()?.is_zero() {
        return Err(Error::Violation("syzygy expansion is not zero".into()));
    }
    Ok(cert)
}

/// Zero expansion, quasi-homogeneous cofactors, and σ(ω) ≠ 0 where σ
/// substitutes u_q ↦ t^(w_q).
pub fn verify_certificate(c: &SyzygyCertificate, w: &Weights) -> bool {
    let zero = matches!(c.expansion(), Ok(p) if p.is_zero());
    zero && c.omegas.iter().all(|o| o.nvars() == w.n() && w.is_quasi_homogeneous(o) && !w.substitute(o).is_zero())
}
