//! JSON wire formats. Rationals travel as "p/q" strings so every value
//! round-trips exactly; exponent vectors of group elements are arrays of
//! such strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::rat::{parse_rat, rat_text};
use crate::algebra::{GenSeries, GroupVec, Poly, Rat, SignChar};
use crate::curvette::SemiCurvette;
use crate::error::{Error, Result};
use crate::regions::Region;
use crate::roots::{BinomialRoot, Evaluated, Factor, GenMonomial, StandardForm};
use crate::surface2d::{CoeffExpansion, Curvette2};
use crate::syzygy::SyzygyCertificate;
use crate::tetra::{Axis, AxisConstraint, BaryPoint, Sense};

pub fn sha256_hex(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

pub fn rat_from(s: &str) -> Result<Rat> {
    parse_rat(s)
}

pub fn rats_from(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

pub fn rats_to(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_text).collect()
}

pub fn group_to(g: &GroupVec) -> Vec<String> {
    rats_to(g.coords())
}

pub fn group_from(v: &[String]) -> Result<GroupVec> {
    Ok(GroupVec::new(rats_from(v)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermW {
    pub c: String,
    pub e: Vec<u32>,
}

pub fn poly_to(p: &Poly) -> Vec<TermW> {
    p.terms().iter().map(|(e, c)| TermW { c: rat_text(c), e: e.clone() }).collect()
}

pub fn poly_from(n: usize, ts: &[TermW]) -> Result<Poly> {
    let terms = ts
        .iter()
        .map(|t| {
            if t.e.len() != n {
                return Err(Error::VarCountMismatch { expected: n, found: t.e.len() });
            }
            Ok((t.e.clone(), parse_rat(&t.c)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Poly::from_terms(n, terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermW {
    pub c: String,
    pub g: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesW {
    pub terms: Vec<SeriesTermW>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<Vec<String>>,
}

pub fn series_to(s: &GenSeries) -> SeriesW {
    SeriesW {
        terms: s.terms().iter().map(|(g, c)| SeriesTermW { c: rat_text(c), g: group_to(g) }).collect(),
        truncation: s.truncation().map(group_to),
    }
}

pub fn series_from(rank: usize, s: &SeriesW) -> Result<GenSeries> {
    let terms = s.terms.iter().map(|t| Ok((parse_rat(&t.c)?, group_from(&t.g)?))).collect::<Result<Vec<_>>>()?;
    let trunc = s.truncation.as_deref().map(group_from).transpose()?;
    GenSeries::from_terms(rank, terms, trunc)
}

fn one() -> i64 {
    1
}

/// { n, k, sign_char, denom, entries }. `denom` is the common denominator
/// for sign parities and defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvetteW {
    pub n: usize,
    pub k: usize,
    pub sign_char: Vec<i8>,
    #[serde(default = "one")]
    pub denom: i64,
    pub entries: Vec<SeriesW>,
}

pub fn curvette_to(c: &SemiCurvette) -> CurvetteW {
    CurvetteW {
        n: c.n(),
        k: c.rank(),
        sign_char: c.sign_char().signs().to_vec(),
        denom: c.sign_char().denom(),
        entries: c.entries().iter().map(series_to).collect(),
    }
}

pub fn curvette_from(w: &CurvetteW) -> Result<SemiCurvette> {
    if w.entries.len() != w.n {
        return Err(Error::VarCountMismatch { expected: w.n, found: w.entries.len() });
    }
    let sc = SignChar::new(w.sign_char.clone(), w.denom)?;
    if sc.rank() != w.k {
        return Err(Error::RankMismatch { expected: w.k, found: sc.rank() });
    }
    let entries = w.entries.iter().map(|e| series_from(w.k, e)).collect::<Result<Vec<_>>>()?;
    SemiCurvette::new(entries, sc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootW {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
    pub lambda: String,
}

pub fn root_to(q: &BinomialRoot) -> RootW {
    RootW { plus: q.plus().to_vec(), minus: q.minus().to_vec(), lambda: rat_text(q.lambda()) }
}

pub fn root_from(w: &RootW) -> Result<BinomialRoot> {
    BinomialRoot::new(w.plus.clone(), w.minus.clone(), parse_rat(&w.lambda)?)
}

pub fn factor_from(s: &str) -> Result<Factor> {
    let bad = || Error::Parse(format!("unknown factor {s:?}"));
    let (head, idx) = s.split_at(1.min(s.len()));
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(bad());
    }
    match head {
        "u" => Ok(Factor::Var(i - 1)),
        "Q" => Ok(Factor::Root(i - 1)),
        "W" => Ok(Factor::Aux(i - 1)),
        _ => Err(bad()),
    }
}

/// Factor names (u1, Q1, W1) mapped to exponents.
pub fn monomial_to(m: &GenMonomial) -> BTreeMap<String, i64> {
    m.exponents().iter().map(|(f, e)| (f.to_string(), *e)).collect()
}

pub fn monomial_from(m: &BTreeMap<String, i64>) -> Result<GenMonomial> {
    Ok(GenMonomial::from_pairs(m.iter().map(|(f, e)| Ok((factor_from(f)?, *e))).collect::<Result<Vec<_>>>()?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailTermW {
    pub c: String,
    pub m: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardFormW {
    pub dominant: BTreeMap<String, i64>,
    pub tail: Vec<TailTermW>,
}

pub fn form_to(f: &StandardForm) -> StandardFormW {
    StandardFormW {
        dominant: monomial_to(f.dominant()),
        tail: f.tail().iter().map(|(c, m)| TailTermW { c: rat_text(c), m: monomial_to(m) }).collect(),
    }
}

pub fn form_from(w: &StandardFormW, points: &[&Evaluated]) -> Result<StandardForm> {
    let tail = w.tail.iter().map(|t| Ok((parse_rat(&t.c)?, monomial_from(&t.m)?))).collect::<Result<Vec<_>>>()?;
    StandardForm::new(monomial_from(&w.dominant)?, tail, points)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateW {
    pub mu: [i64; 3],
    pub omegas: Vec<Vec<TermW>>,
    pub roots: Vec<RootW>,
    pub clearing: Vec<i64>,
    pub depths: [u64; 3],
    pub degenerate: bool,
    pub input_sha256: String,
}

pub fn certificate_to(c: &SyzygyCertificate) -> CertificateW {
    CertificateW {
        mu: c.mu,
        omegas: c.omegas.iter().map(poly_to).collect(),
        roots: c.roots.iter().map(root_to).collect(),
        clearing: c.clearing.0.clone(),
        depths: c.depths,
        degenerate: c.degenerate,
        input_sha256: sha256_hex(&c.canonical_input()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintW {
    pub axis: String,
    pub k: String,
    pub sense: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetraInstanceW {
    #[serde(rename = "A")]
    pub a: [String; 4],
    #[serde(rename = "B")]
    pub b: [String; 4],
    pub constraints: Vec<ConstraintW>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<String>,
}

pub fn bary_to(p: &BaryPoint) -> [String; 4] {
    [rat_text(&p.u), rat_text(&p.v), rat_text(&p.w), rat_text(&p.t)]
}

pub fn bary_from(p: &[String; 4]) -> Result<BaryPoint> {
    BaryPoint::new(parse_rat(&p[0])?, parse_rat(&p[1])?, parse_rat(&p[2])?, parse_rat(&p[3])?)
}

pub fn axis_constraint_to(c: &AxisConstraint) -> ConstraintW {
    let axis = match c.axis {
        Axis::U => "u",
        Axis::V => "v",
        Axis::W => "w",
    };
    let sense = match c.sense {
        Sense::Ge => "ge",
        Sense::Le => "le",
    };
    ConstraintW { axis: axis.into(), k: rat_text(&c.k), sense: sense.into() }
}

pub fn axis_constraint_from(c: &ConstraintW) -> Result<AxisConstraint> {
    let axis = match c.axis.as_str() {
        "u" => Axis::U,
        "v" => Axis::V,
        "w" => Axis::W,
        other => return Err(Error::Parse(format!("axis must be one of u, v, w, got {other:?}"))),
    };
    let sense = match c.sense.as_str() {
        "ge" => Sense::Ge,
        "le" => Sense::Le,
        other => return Err(Error::Parse(format!("sense must be ge or le, got {other:?}"))),
    };
    AxisConstraint::new(axis, parse_rat(&c.k)?, sense)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curvette2W {
    pub k: usize,
    pub sign_char: Vec<i8>,
    #[serde(default = "one")]
    pub denom: i64,
    pub x: SeriesW,
    pub y: SeriesW,
}

pub fn curvette2_to(c: &Curvette2) -> Curvette2W {
    Curvette2W {
        k: c.sc.rank(),
        sign_char: c.sc.signs().to_vec(),
        denom: c.sc.denom(),
        x: series_to(&c.x),
        y: series_to(&c.y),
    }
}

pub fn curvette2_from(w: &Curvette2W) -> Result<Curvette2> {
    let sc = SignChar::new(w.sign_char.clone(), w.denom)?;
    Curvette2::new(series_from(w.k, &w.x)?, series_from(w.k, &w.y)?, sc)
}

pub fn expansion_from(v: &[String]) -> Result<CoeffExpansion> {
    Ok(CoeffExpansion::new(rats_from(v)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedW {
    pub provenance: String,
    pub constraint: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionW {
    pub provenance: String,
    pub constraints: Vec<TaggedW>,
}

pub fn region_to(r: &Region) -> RegionW {
    RegionW {
        provenance: r.provenance.clone(),
        constraints: r
            .constraints
            .iter()
            .map(|t| TaggedW { provenance: t.provenance.clone(), constraint: t.constraint.to_string() })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;

    #[test]
    fn curvette_round_trip() {
        let a = demo::alpha(&crate::int(1), &crate::int(3));
        let w = curvette_to(&a);
        let text = serde_json::to_string(&w).unwrap();
        let back: CurvetteW = serde_json::from_str(&text).unwrap();
        assert_eq!(curvette_from(&back).unwrap(), a);
    }

    #[test]
    fn factor_names() {
        for f in [Factor::Var(0), Factor::Root(2), Factor::Aux(10)] {
            assert_eq!(factor_from(&f.to_string()).unwrap(), f);
        }
        for bad in ["", "x1", "u0", "Q", "u-1"] {
            assert!(factor_from(bad).is_err());
        }
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
