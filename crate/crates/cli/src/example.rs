//! The worked example on the curvettes (t³, t⁴ + b·s, t⁵ + c·st) with
//! s ≫ t: evaluation, the separating certificate, roots, syzygy,
//! comparability and the region C. Any failed assertion aborts with the
//! name of its check.

use clap::{Args, Subcommand};
use realspec::algebra::rat::rat_text;
use realspec::compare::{compare_roots, half_mu_check, trichotomy_check, Trichotomy, Verdict};
use realspec::curvette::changes_sign;
use realspec::regions::{build_c, sign_constancy_sample};
use realspec::roots::{classify_roots, BinomialRoot};
use realspec::separating::mu_upper_bound;
use realspec::syzygy::{build_syzygy, verify_certificate};
use realspec::{demo, io, int, GenSeries, Rat};
use serde_json::json;

use crate::report::{CliError, CliResult, Report};

#[derive(Args, Debug)]
pub struct Demo {
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    alpha_b: String,
    #[arg(long, default_value = "3", allow_hyphen_values = true)]
    alpha_c: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    beta_b: String,
    #[arg(long, default_value = "5", allow_hyphen_values = true)]
    beta_c: String,
    /// Seed for sampling the region.
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
}

#[derive(Subcommand, Debug)]
pub enum ExampleCmd {
    /// Reproduce the worked three-variable example end to end.
    Demo(Demo),
}

fn assert(check: &str, ok: bool, detail: impl FnOnce() -> String) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Assertion(format!("{check}: {}", detail())))
    }
}

fn series(terms: &[(Rat, &[i64])]) -> GenSeries {
    GenSeries::from_int_terms(2, terms)
}

/// f₁, f₂, f₃ at (b, c), in closed form.
pub fn expected(b: &Rat, c: &Rat) -> [GenSeries; 3] {
    let two = int(2);
    [
        series(&[(c - &two * b, &[1, 4]), (-(b * b), &[2, 0])]),
        series(&[(-(c + b), &[1, 5]), (-(b * c), &[2, 1])]),
        series(&[(b - &two * c, &[1, 6]), (-(c * c), &[2, 2])]),
    ]
}

pub fn run(cmd: &ExampleCmd) -> CliResult<Report> {
    let ExampleCmd::Demo(a) = cmd;
    let mut rep = Report::new("example demo");
    let parse = |s: &str| realspec::algebra::rat::parse_rat(s).map_err(|e| CliError::Usage(e.to_string()));
    let (ab, ac, bb, bc) = (parse(&a.alpha_b)?, parse(&a.alpha_c)?, parse(&a.beta_b)?, parse(&a.beta_c)?);
    for (k, v) in [("alpha_b", &ab), ("alpha_c", &ac), ("beta_b", &bb), ("beta_c", &bc)] {
        rep.input(k, &rat_text(v));
    }
    rep.input("seed", &a.seed.to_string());
    if (&ab, &ac) == (&bb, &bc) {
        rep.set("degenerate", true);
        rep.check("distinct-points", false, || "alpha and beta coincide".into());
        return Ok(rep);
    }
    let alpha = demo::alpha(&ab, &ac);
    let beta = demo::alpha(&bb, &bc);
    let fs = demo::fs();

    // 1. Evaluation against the closed form.
    rep.checks.push("evaluation".into());
    let mut evals = Vec::new();
    for (name, pt, b, c) in [("alpha", &alpha, &ab, &ac), ("beta", &beta, &bb, &bc)] {
        let exp = expected(b, c);
        for (i, f) in fs.iter().enumerate() {
            let got = pt.evaluate(f)?;
            assert("evaluation", got == exp[i], || format!("f{} at {name}: {got} != {}", i + 1, exp[i]))?;
            evals.push(json!({ "point": name, "f": i + 1, "series": got.to_string() }));
        }
    }
    rep.set("1_evaluation", evals);

    // 2. No fᵢ changes sign.
    rep.checks.push("no-sign-change".into());
    for (i, f) in fs.iter().enumerate() {
        assert("no-sign-change", !changes_sign(f, &alpha, &beta)?, || format!("f{} changes sign", i + 1))?;
    }
    rep.set("2_no_sign_change", true);

    // 3. The sign-changing element and its value.
    rep.checks.push("separating-certificate".into());
    let (mu, cert) = mu_upper_bound(&[demo::certificate_element()], &alpha, &beta)
        .map_err(|e| CliError::Assertion(format!("separating-certificate: {e}")))?;
    assert("separating-certificate", mu == demo::mu(), || format!("value {mu}, expected (1,8)"))?;
    rep.set("3_separating", json!({
        "element": cert.element.to_string(),
        "value_alpha": io::group_to(&cert.value_alpha),
        "signs": [cert.signs.0, cert.signs.1],
    }));

    // 4. Roots for the weights (3,4,5).
    rep.checks.push("root-classification".into());
    let w = demo::weights();
    let roots = classify_roots(&w)?;
    let want: Vec<BinomialRoot> = fs.iter().map(|f| BinomialRoot::from_poly(f)).collect::<Result<_, _>>()?;
    let matched = roots.len() == 3 && want.iter().all(|q| roots.iter().any(|r| r.same_up_to_orientation(q)));
    assert("root-classification", matched, || format!("{roots:?}"))?;
    rep.set("4_roots", roots.iter().map(|q| q.to_string()).collect::<Vec<_>>());

    // 5. The syzygy among f₁, f₂, f₃.
    rep.checks.push("syzygy".into());
    let syz = build_syzygy(&want[0], &want[1], &want[2], &w)?;
    assert("syzygy", syz.expansion()?.is_zero() && verify_certificate(&syz, &w), || "certificate fails".into())?;
    rep.set("5_syzygy", json!({
        "mu": syz.mu,
        "omegas": syz.omegas.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    }));

    // 6. Comparability.
    rep.checks.push("incomparability".into());
    let mut pairs = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = compare_roots(&want[i], &want[j], &alpha, &beta)?;
        assert("incomparability", c.verdict == Verdict::Incomparable, || format!("pair ({},{}) is {}", i + 1, j + 1, c.verdict.tag()))?;
        pairs.push(json!({ "pair": [i + 1, j + 1], "ratio_alpha": rat_text(&c.ratio_alpha), "ratio_beta": rat_text(&c.ratio_beta) }));
    }
    let t = trichotomy_check(&want[0], &want[1], &want[2], &alpha, &beta)?;
    assert("incomparability", t == Trichotomy::AllIncomparable, || format!("{t:?}"))?;
    let half = half_mu_check(&want, &alpha, &beta, &mu)?;
    assert("half-mu", half, || "fewer than two roots exceed half of (1,8)".into())?;
    rep.set("6_comparability", json!({ "pairs": pairs, "trichotomy": "AllIncomparable", "half_mu": half }));

    // 7. The region C around the pair with an extra tail term.
    rep.checks.push("region-c".into());
    let sys = demo::root_system();
    let ra = demo::alpha_with_tail(&ab, &ac, &int(1));
    let rb = demo::alpha_with_tail(&bb, &bc, &int(1));
    let forms = demo::standard_forms(&sys, &ra, &rb)?;
    let c = build_c(&forms, &sys, &ra)?;
    assert("region-c", c.member(&ra)? && c.member(&rb)?, || "C misses a point".into())?;
    let s = sign_constancy_sample(&c, &forms, &ra, a.seed, a.count)?;
    assert("region-c", s.violations.is_empty(), || format!("{} sign violations", s.violations.len()))?;
    rep.set("7_region_c", json!({
        "constraints": c.constraints.len(),
        "sampled": s.sampled,
        "members": s.members,
    }));
    Ok(rep)
}
