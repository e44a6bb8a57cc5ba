//! The acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in KNOWN_FAILURES are expected to fail for reasons
//! documented next to them. They are still run and reported. The process
//! exits non-zero when any other criterion fails, or on any failure at
//! all when ACCEPTANCE_STRICT is set.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realspec::compare::{compare_roots, half_mu_check, trichotomy_check, Trichotomy, Verdict};
use realspec::regions::{build_c, build_cprime, containment_sample, sign_constancy_sample};
use realspec::roots::{classify_roots, BinomialRoot};
use realspec::separating::{exhaustive_min_search, mu_upper_bound, SearchSpace};
use realspec::surface2d::{self as s2, CoeffExpansion, Curvette2};
use realspec::syzygy::{build_syzygy, verify_certificate};
use realspec::tetra::{self, grid_oracle, phi_image_check, phi_witness, tetra_solve, Axis, AxisConstraint, BaryPoint, Sense};
use realspec::{changes_sign, demo, int, rat, GenSeries, GroupVec, Poly, Rat, SemiCurvette, SignChar, Weights};

/// Criterion 7 asks that B′ = PB ∩ IS satisfy every constraint. It does
/// not when a lower bound u − k·t ≥ 0 is steep enough: the plane through
/// P, B and the segment can cross the constraint on the wrong side. The
/// corrected witness max(λ_A′, λ_B′) is always feasible and is reported
/// alongside.
const KNOWN_FAILURES: &[u8] = &[7];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Check = fn() -> Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(t: Duration, limit_s: u64) -> bool {
    t < Duration::from_secs(limit_s)
}

// 1 ------------------------------------------------------------------------

/// Leading and tail terms written out by hand from the parametrization.
fn closed_form(b: i64, c: i64) -> [Vec<(Rat, [i64; 2])>; 3] {
    [
        vec![(int(c - 2 * b), [1, 4]), (int(-b * b), [2, 0])],
        vec![(int(-(c + b)), [1, 5]), (int(-b * c), [2, 1])],
        vec![(int(b - 2 * c), [1, 6]), (int(-c * c), [2, 2])],
    ]
}

fn c1() -> Result<Outcome, String> {
    let start = Instant::now();
    let mut checked = 0;
    for (b, c) in [(1, 3), (2, 5)] {
        let a = demo::alpha(&int(b), &int(c));
        for (f, want) in demo::fs().iter().zip(closed_form(b, c)) {
            let got = a.evaluate(f).map_err(err)?;
            let terms: Vec<(Rat, [i64; 2])> = got
                .terms()
                .iter()
                .map(|(g, c)| (c.clone(), [g.coords()[0].to_integer().try_into().unwrap(), g.coords()[1].to_integer().try_into().unwrap()]))
                .collect();
            let mut want = want;
            want.sort_by(|x, y| x.1.cmp(&y.1));
            if terms != want || !got.is_exact() {
                return Ok(outcome(false, format!("({b},{c}): got {got}")));
            }
            checked += 1;
        }
    }
    let t = start.elapsed();
    Ok(outcome(within(t, 1), format!("{checked} evaluations exact in {t:?}")))
}

// 2 ------------------------------------------------------------------------

fn c2() -> Result<Outcome, String> {
    let start = Instant::now();
    let (a, b) = demo::default_pair();
    for (i, f) in demo::fs().iter().enumerate() {
        if changes_sign(f, &a, &b).map_err(err)? {
            return Ok(outcome(false, format!("f{} changes sign", i + 1)));
        }
    }
    let (mu, _) = mu_upper_bound(&[demo::certificate_element()], &a, &b).map_err(err)?;
    if mu != demo::mu() {
        return Ok(outcome(false, format!("upper bound {mu}")));
    }
    let mut basis = vec![Poly::one(3)];
    basis.extend(demo::fs());
    let space = SearchSpace { basis, degree: 4, bound: demo::mu() };
    let r = exhaustive_min_search(&space, &a, &b).map_err(err)?;
    let t = start.elapsed();
    Ok(outcome(
        r.none_below_bound() && within(t, 30),
        format!("bound (1,8); {} generators, {} evaluated, none below (1,8) = {} in {t:?}", r.generators, r.evaluated, r.none_below_bound()),
    ))
}

// 3 ------------------------------------------------------------------------

fn same_set(got: &[BinomialRoot], want: &[&str]) -> bool {
    let want: Vec<BinomialRoot> = want.iter().map(|s| BinomialRoot::parse(3, s).unwrap()).collect();
    got.len() == want.len() && want.iter().all(|w| got.iter().any(|g| g.same_up_to_orientation(w)))
}

fn c3() -> Result<Outcome, String> {
    let mut ok = true;
    let mut lines = Vec::new();
    for (ws, want) in [
        ([3, 4, 5], ["y^2 - x*z", "y*z - x^3", "z^2 - x^2*y"]),
        ([2, 3, 7], ["y^2 - x^3", "z - x^2*y", "y*z - x^5"]),
    ] {
        let start = Instant::now();
        let got = classify_roots(&Weights::ints(&ws, 1).map_err(err)?).map_err(err)?;
        let t = start.elapsed();
        let good = same_set(&got, &want) && within(t, 1);
        ok &= good;
        lines.push(format!("{ws:?}: {} ({t:?})", got.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")));
    }
    Ok(outcome(ok, lines.join("; ")))
}

// 4 ------------------------------------------------------------------------

fn c4() -> Result<Outcome, String> {
    let start = Instant::now();
    let fs = demo::fs();
    let roots: Vec<BinomialRoot> = fs.iter().map(|f| BinomialRoot::from_poly(f).unwrap()).collect();
    let w = demo::weights();
    let cert = build_syzygy(&roots[0], &roots[1], &roots[2], &w).map_err(err)?;
    let zero = cert.expansion().map_err(err)?.is_zero();
    let verified = verify_certificate(&cert, &w);
    // z·f1 − y·f2 + x·f3 up to a common nonzero scalar.
    let expect = ["z", "-y", "x"].map(|s| Poly::parse(3, s).unwrap());
    let scale = cert.omegas[0].terms().values().next().cloned().unwrap_or_else(Rat::zero)
        / expect[0].terms().values().next().cloned().unwrap();
    let proportional = !scale.is_zero() && cert.omegas.iter().zip(&expect).all(|(o, e)| *o == e.scale(&scale));
    // σ-images of the cofactors at the monomial point.
    let sigma_ok = cert.omegas.iter().all(|o| !o.is_zero() && !w.substitute(o).is_zero());
    let t = start.elapsed();
    Ok(outcome(
        zero && verified && proportional && sigma_ok && !cert.degenerate && within(t, 1),
        format!("omegas = ({}, {}, {}), expansion zero = {zero}, verified = {verified} in {t:?}", cert.omegas[0], cert.omegas[1], cert.omegas[2]),
    ))
}

// 5 ------------------------------------------------------------------------

fn c5() -> Result<Outcome, String> {
    let (a, b) = demo::default_pair();
    let roots: Vec<BinomialRoot> = demo::fs().iter().map(|f| BinomialRoot::from_poly(f).unwrap()).collect();
    let mut all_incomparable = true;
    let mut ratios = None;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = compare_roots(&roots[i], &roots[j], &a, &b).map_err(err)?;
        all_incomparable &= c.verdict == Verdict::Incomparable;
        if (i, j) == (0, 1) {
            ratios = Some((c.ratio_alpha, c.ratio_beta));
        }
    }
    let ratios = ratios.unwrap();
    let tri = trichotomy_check(&roots[0], &roots[1], &roots[2], &a, &b).map_err(err)?;
    let half = half_mu_check(&roots, &a, &b, &demo::mu()).map_err(err)?;
    let mu = demo::mu();
    let doubled = [GroupVec::ints(&[2, 10]), GroupVec::ints(&[2, 12])].iter().all(|g| *g > mu);
    let ok = all_incomparable && ratios == (rat(-1, 4), rat(-1, 7)) && tri == Trichotomy::AllIncomparable && half && doubled;
    Ok(outcome(ok, format!("ratios {} vs {}, {tri:?}, half_mu = {half}", ratios.0, ratios.1)))
}

// 6 ------------------------------------------------------------------------

fn small(rng: &mut ChaCha8Rng, nonzero: bool) -> Rat {
    loop {
        let r = Rat::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into());
        if !nonzero || !r.is_zero() {
            return r;
        }
    }
}

/// x = λ³t^(0,3) + a·t^(1,−1), y = λ⁴t^(0,4) + b·t^(1,0),
/// z = λ⁵t^(0,5) + c·t^(1,1) + e·t^(1,2): the weights stay (3,4,5) and
/// every Q′ keeps positive value.
fn family(lambda: &Rat, abc: &[Rat; 3], e: &Rat) -> SemiCurvette {
    let g = |a: i64, b: i64| GroupVec::ints(&[a, b]);
    let l = |k: i32| num_traits::pow(lambda.clone(), k as usize);
    let s = |ts: Vec<(Rat, GroupVec)>| GenSeries::from_terms(2, ts, None).unwrap();
    let x = s(vec![(l(3), g(0, 3)), (abc[0].clone(), g(1, -1))]);
    let y = s(vec![(l(4), g(0, 4)), (abc[1].clone(), g(1, 0))]);
    let z = s(vec![(l(5), g(0, 5)), (abc[2].clone(), g(1, 1)), (e.clone(), g(1, 2))]);
    SemiCurvette::new(vec![x, y, z], SignChar::positive(2)).unwrap()
}

fn random_pair(seed: u64) -> (SemiCurvette, SemiCurvette, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let abc = [small(rng, false), small(rng, false), small(rng, false)];
        if abc.iter().any(|x| !x.is_zero()) {
            return abc;
        }
    };
    let lambda = small(&mut rng, true);
    let abc = draw(&mut rng);
    let alpha = family(&lambda, &abc, &small(&mut rng, false));
    if rng.gen_bool(0.25) {
        let k = small(&mut rng, true);
        let scaled = abc.clone().map(|x| x * &k);
        (alpha, family(&lambda, &scaled, &small(&mut rng, false)), true)
    } else {
        let l2 = if rng.gen_bool(0.5) { lambda } else { small(&mut rng, true) };
        (alpha, family(&l2, &draw(&mut rng), &small(&mut rng, false)), false)
    }
}

/// Smallest sign changer in growing search spaces, as an upper bound on
/// the separating value.
fn mu_estimate(a: &SemiCurvette, b: &SemiCurvette) -> Result<Option<GroupVec>, String> {
    let mut basis = vec![Poly::one(3)];
    basis.extend(demo::fs());
    for degree in 1..=3 {
        let space = SearchSpace { basis: basis.clone(), degree, bound: GroupVec::ints(&[3, 0]) };
        if let Some(c) = exhaustive_min_search(&space, a, b).map_err(err)?.best {
            return Ok(Some(c.value_alpha));
        }
    }
    Ok(None)
}

fn c6() -> Result<Outcome, String> {
    let start = Instant::now();
    let roots: Vec<BinomialRoot> = classify_roots(&demo::weights()).map_err(err)?;
    let (mut comparable, mut incomparable, mut violations, mut half_fail, mut no_mu) = (0, 0, Vec::new(), Vec::new(), 0);
    for seed in 0..100u64 {
        let (a, b, _) = random_pair(seed);
        match trichotomy_check(&roots[0], &roots[1], &roots[2], &a, &b).map_err(err)? {
            Trichotomy::AllComparable => comparable += 1,
            Trichotomy::Violation { comparable_pairs } => violations.push((seed, comparable_pairs)),
            Trichotomy::AllIncomparable => {
                incomparable += 1;
                match mu_estimate(&a, &b)? {
                    None => no_mu += 1,
                    Some(mu) => {
                        if !half_mu_check(&roots, &a, &b, &mu).map_err(err)? {
                            half_fail.push((seed, mu));
                        }
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    let ok = violations.is_empty() && half_fail.is_empty() && no_mu == 0 && within(t, 60);
    Ok(outcome(
        ok,
        format!(
            "{comparable} all-comparable, {incomparable} all-incomparable, violations {violations:?}, half-mu failures {half_fail:?}, no separating bound found {no_mu} in {t:?}"
        ),
    ))
}

// 7 ------------------------------------------------------------------------

fn r01(rng: &mut ChaCha8Rng, den: i64, lo: i64, hi: i64) -> Rat {
    Rat::new(rng.gen_range(lo..=hi).into(), den.into())
}

fn random_instance(seed: u64) -> (BaryPoint, BaryPoint, Vec<AxisConstraint>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = 60;
    // A = (p, p, p + q, 1 − 3p − q), B = (p + q, p, p, 1 − 3p − q).
    let corner = |rng: &mut ChaCha8Rng| loop {
        let p = r01(rng, den, 1, den / 3 - 1);
        let q = r01(rng, den, 0, den);
        let t = Rat::one() - Rat::from_integer(3.into()) * &p - &q;
        if t > Rat::zero() {
            return (p, q, t);
        }
    };
    let (p, q, t) = corner(&mut rng);
    let a = BaryPoint::new(p.clone(), p.clone(), &p + &q, t).unwrap();
    let (p, q, t) = corner(&mut rng);
    let b = BaryPoint::new(&p + &q, p.clone(), p, t).unwrap();
    let want = rng.gen_range(1..=4);
    let mut cs = Vec::new();
    while cs.len() < want {
        let axis = [Axis::U, Axis::V, Axis::W][rng.gen_range(0..3)];
        let sense = if rng.gen_bool(0.5) { Sense::Ge } else { Sense::Le };
        let c = AxisConstraint::new(axis, r01(&mut rng, 10, 0, 40), sense).unwrap();
        if c.holds(&a) && c.holds(&b) {
            cs.push(c);
        }
    }
    (a, b, cs)
}

fn c7() -> Result<Outcome, String> {
    let step = rat(1, 1000);
    let (mut grid_bad, mut d_bad, mut bprime_bad, mut witness_bad) = (Vec::new(), 0, Vec::new(), 0);
    for seed in 0..100u64 {
        let (a, b, cs) = random_instance(seed);
        let s = tetra_solve(&a, &b, &cs).map_err(err)?;
        let g = grid_oracle(&cs, &step).map_err(err)?;
        let agrees = match (g.first(), g.last()) {
            (Some(f), Some(l)) => *f >= s.lo && f - &s.lo < step && *l <= s.hi && &s.hi - l < step,
            _ => &s.hi - &s.lo < step,
        };
        if !agrees {
            grid_bad.push(seed);
        }
        if !cs.iter().all(|c| c.holds(&s.d)) {
            d_bad += 1;
        }
        if !s.b_prime_feasible {
            if bprime_bad.is_empty() {
                let show = |p: &BaryPoint| format!("({}, {}, {}, {})", p.u, p.v, p.w, p.t);
                let cs: Vec<String> = cs.iter().map(|c| format!("{:?} {:?} {}", c.axis, c.sense, c.k)).collect();
                println!("  B′ counterexample: A = {}, B = {}, constraints {cs:?}, λ_B′ = {}, interval [{}, {}]", show(&a), show(&b), s.lambda_b_prime, s.lo, s.hi);
            }
            bprime_bad.push(seed);
        }
        if !s.witness_feasible {
            witness_bad += 1;
        }
    }
    let wa = BaryPoint::new(rat(1, 5), rat(1, 5), rat(3, 10), rat(3, 10)).unwrap();
    let wb = BaryPoint::new(rat(2, 5), rat(1, 5), rat(1, 5), rat(1, 5)).unwrap();
    let worked = tetra_solve(&wa, &wb, &[AxisConstraint::new(Axis::U, rat(1, 2), Sense::Ge).unwrap()]).map_err(err)?;
    let worked_ok = (worked.lo.clone(), worked.hi.clone()) == (rat(3, 5), int(1));
    let ok = grid_bad.is_empty() && d_bad == 0 && bprime_bad.is_empty() && worked_ok;
    Ok(outcome(
        ok,
        format!(
            "grid disagreements {grid_bad:?}, D infeasible {d_bad}, B′ infeasible on seeds {bprime_bad:?}, corrected witness infeasible {witness_bad}, worked instance [{}, {}]",
            worked.lo, worked.hi
        ),
    ))
}

// 8 ------------------------------------------------------------------------

/// The two smallest of the last three coordinates coincide, one clause
/// per coordinate left out.
fn image_oracle(p: &[Rat; 4]) -> bool {
    let (a2, a3, a4) = (&p[1], &p[2], &p[3]);
    (a2 == a3 && a2 <= a4) || (a2 == a4 && a2 <= a3) || (a3 == a4 && a3 <= a2)
}

fn c8() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pos = |rng: &mut ChaCha8Rng| Rat::new(rng.gen_range(1i64..=30).into(), rng.gen_range(1i64..=6).into());
    let w = Weights::ints(&[3, 4, 5], 1).map_err(err)?;
    let roots: [BinomialRoot; 3] = classify_roots(&w).map_err(err)?.try_into().unwrap();
    let (mut mismatches, mut accepted, mut witnessed, mut round_trip_bad) = (0, 0, 0, 0);
    for _ in 0..200 {
        let mut p: [Rat; 4] = std::array::from_fn(|_| pos(&mut rng));
        if rng.gen_bool(0.5) {
            let (i, j) = [(1, 2), (1, 3), (2, 3)][rng.gen_range(0..3)];
            p[j] = p[i].clone();
        }
        let got = phi_image_check(&p).map_err(err)?;
        if got != image_oracle(&p) {
            mismatches += 1;
        }
        if got {
            accepted += 1;
            if witnessed < 20 {
                witnessed += 1;
                let d = phi_witness(&p, &w, &roots).map_err(err)?;
                if tetra::phi_measure(&d, &roots, &GroupVec::ints(&[1])).map_err(err)? != p {
                    round_trip_bad += 1;
                }
            }
        }
    }
    Ok(outcome(
        mismatches == 0 && witnessed == 20 && round_trip_bad == 0,
        format!("200 tuples, {accepted} in the image, {mismatches} oracle mismatches, {witnessed} witnesses, {round_trip_bad} round-trip failures"),
    ))
}

// 9 ------------------------------------------------------------------------

fn c9() -> Result<Outcome, String> {
    let sys = demo::root_system();
    let (a, b) = demo::region_pair();
    let forms = demo::standard_forms(&sys, &a, &b).map_err(err)?;
    let c = build_c(&forms, &sys, &a).map_err(err)?;
    let cp = build_cprime(&forms, &sys, &a).map_err(err)?;
    let contains = [&c, &cp].iter().all(|r| r.member(&a).unwrap() && r.member(&b).unwrap());
    let sc = sign_constancy_sample(&c, &forms, &a, 9, 100).map_err(err)?;
    let scp = sign_constancy_sample(&cp, &forms, &a, 9, 100).map_err(err)?;
    let (_, not_in_c) = containment_sample(&cp, &c, &a, 9, 100).map_err(err)?;
    let corrupted = c.without("C:ValueLT:i=1,j=1");
    let neg = sign_constancy_sample(&corrupted, &forms, &a, 9, 500).map_err(err)?;
    let ok = contains && sc.violations.is_empty() && scp.violations.is_empty() && not_in_c.is_empty() && !neg.violations.is_empty();
    Ok(outcome(
        ok,
        format!(
            "C and C′ contain both points = {contains}; C: {}/{} members, {} violations; C′: {}/{} members, {} violations; corrupted (500 samples): {} violations",
            sc.members, sc.sampled, sc.violations.len(), scp.members, scp.sampled, scp.violations.len(), neg.violations.len()
        ),
    ))
}

// 10 -----------------------------------------------------------------------

fn exp(v: &[i64]) -> CoeffExpansion {
    CoeffExpansion::new(v.iter().map(|x| int(*x)).collect())
}

fn c10() -> Result<Outcome, String> {
    let g = Poly::parse(2, "y - x + x*y").map_err(err)?;
    let e = s2::newton_expand(&g, 3).map_err(err)?;
    let res = s2::residual_order(&g, &e);
    let newton_ok = e.coeffs == vec![int(-1), int(1), int(-1)] && res.is_none_or(|r| r > 3);

    // Inclusions over every ordered pair of a small suite.
    let mut suite = vec![exp(&[-2]), exp(&[-1]), exp(&[-1, 3]), exp(&[0, -1, 2]), exp(&[1]), exp(&[1, 1]), exp(&[-1, 3, 1])];
    suite.sort_by(|x, y| s2::prec_compare(x, y).unwrap_or(std::cmp::Ordering::Equal));
    let pts = s2::sample_points(&suite, 10, 300).map_err(err)?;
    let mut inclusion_bad = 0;
    let mut relevant = 0;
    for i in 0..suite.len() {
        for j in i + 1..suite.len() {
            let r = s2::inclusion_check(&suite[i], &suite[j], &pts).map_err(err)?;
            inclusion_bad += r.violations.len();
            relevant += r.relevant;
        }
    }
    let inclusion_control = s2::inclusion_check(&suite[4], &suite[1], &pts).map_err(err)?.violations.len();

    let c2 = |x: &[(Rat, i64)], y: &[(Rat, i64)]| Curvette2::from_ints(x, y).unwrap();
    let a = c2(&[(int(1), 1)], &[(int(1), 2)]);
    let b = c2(&[(int(1), 1)], &[(rat(1, 2), 1)]);
    let leading = s2::leading_coefficient_check(&exp(&[1]), &exp(&[-1]), &a, &b).map_err(err)?;
    let leading_control = s2::leading_coefficient_check(&exp(&[-1]), &exp(&[1]), &a, &b).map_err(err)?;

    let (first, last) = (exp(&[1, 2]), exp(&[-1, 0, 3]));
    let qpts = s2::sample_points(&[first.clone(), last.clone()], 10, 300).map_err(err)?;
    let quadrant = s2::quadrant_check(&first, &last, &qpts).map_err(err)?;
    let quadrant_control = s2::quadrant_check(&last, &first, &qpts).map_err(err)?;

    let ok = newton_ok
        && inclusion_bad == 0
        && relevant > 0
        && inclusion_control > 0
        && leading.holds
        && leading.violations.is_empty()
        && !leading_control.holds
        && quadrant.violations.is_empty()
        && quadrant.members > 0
        && !quadrant_control.violations.is_empty();
    Ok(outcome(
        ok,
        format!(
            "expansion {:?} residual order {res:?}; inclusion: {relevant} relevant, {inclusion_bad} violations, control {inclusion_control}; leading coefficients hold = {}, control holds = {}; quadrant: {} members, {} violations, control {}",
            e.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            leading.holds,
            leading_control.holds,
            quadrant.members,
            quadrant.violations.len(),
            quadrant_control.violations.len()
        ),
    ))
}

fn main() {
    let checks: [(u8, &str, Check); 10] = [
        (1, "evaluation", c1),
        (2, "separating value", c2),
        (3, "root classification", c3),
        (4, "syzygy", c4),
        (5, "comparability", c5),
        (6, "trichotomy suite", c6),
        (7, "tetrahedron", c7),
        (8, "value map", c8),
        (9, "regions", c9),
        (10, "surface2d", c10),
    ];
    let strict = std::env::var_os("ACCEPTANCE_STRICT").is_some();
    let mut unexpected = 0;
    for (n, name, f) in checks {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let (pass, detail) = match res {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let known = KNOWN_FAILURES.contains(&n);
        let tag = match (pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        if !pass && (!known || strict) {
            unexpected += 1;
        }
        println!("{tag} criterion {n} ({name}) [{:.2?}]: {detail}", start.elapsed());
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
