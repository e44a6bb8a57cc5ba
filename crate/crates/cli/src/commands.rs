//! One function per command family. Each returns a report whose
//! `violations` list decides the exit code.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use realspec::algebra::rat::rat_text;
use realspec::compare::{compare_roots, half_mu_check, trichotomy_check, Trichotomy};
use realspec::io::{self, RootW, StandardFormW, TetraInstanceW};
use realspec::regions::{build_c, build_cprime, build_d, build_d_any_order, sign_constancy_sample, Epsilon, Region};
use realspec::roots::{classify_roots, classify_roots_with_shapes, BinomialRoot, RootSystem, StandardForm};
use realspec::separating::{exhaustive_min_search, mu_upper_bound, SearchSpace};
use realspec::surface2d::{self as s2, CoeffExpansion};
use realspec::syzygy::{build_syzygy, verify_certificate};
use realspec::tetra::{self, grid_oracle, phi_image_check, phi_witness, tetra_solve, AxisConstraint, PhiPoint};
use realspec::{GroupVec, Rat, SemiCurvette, Value};
use serde::Deserialize;
use serde_json::json;

use crate::load::{self, usage};
use crate::report::{CliError, CliResult, Report};
use crate::PolyAt;

fn value_text(v: &Value) -> String {
    v.to_string()
}

pub fn eval(a: &PolyAt, which: &str) -> CliResult<Report> {
    let mut rep = Report::new(which);
    let c = load::curvette(&mut rep, "curvette", &a.curvette)?;
    let f = load::poly(&mut rep, "poly", c.n(), &a.poly)?;
    match which {
        "eval" => {
            let s = c.evaluate(&f)?;
            rep.set("series", io::series_to(&s));
            rep.set("text", s.to_string());
        }
        "value" => rep.set("value", value_text(&c.value(&f)?)),
        _ => rep.set("sign", c.sign(&f)?),
    }
    Ok(rep)
}

#[derive(Args, Debug)]
pub struct SeparatingArgs {
    #[arg(long)]
    alpha: PathBuf,
    #[arg(long)]
    beta: PathBuf,
    /// JSON array of polynomial strings spanning the search.
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Largest total degree of the monomial multipliers.
    #[arg(long, default_value_t = 4)]
    deg: u32,
    /// Only report sign changers with value strictly below this.
    #[arg(long)]
    bound: Option<String>,
    /// Explicit candidates for the upper bound on the separating value.
    #[arg(long)]
    candidate: Vec<String>,
}

pub fn separating(a: &SeparatingArgs) -> CliResult<Report> {
    let mut rep = Report::new("separating");
    let alpha = load::curvette(&mut rep, "alpha", &a.alpha)?;
    let beta = load::curvette(&mut rep, "beta", &a.beta)?;
    let n = alpha.n();
    if !a.candidate.is_empty() {
        let cands = a
            .candidate
            .iter()
            .enumerate()
            .map(|(i, t)| load::poly(&mut rep, &format!("candidate{}", i + 1), n, t))
            .collect::<CliResult<Vec<_>>>()?;
        let (mu, cert) = mu_upper_bound(&cands, &alpha, &beta)?;
        rep.set("mu_upper_bound", io::group_to(&mu));
        rep.set("certificate", json!({
            "element": cert.element.to_string(),
            "value_alpha": io::group_to(&cert.value_alpha),
            "value_beta": value_text(&cert.value_beta),
            "signs": [cert.signs.0, cert.signs.1],
        }));
        rep.check("certificate-revalidates", cert.revalidate(&alpha, &beta)?, || "stored data disagrees".into());
    }
    if let Some(path) = &a.basis {
        let texts: Vec<String> = load::json(&mut rep, "basis", path)?;
        let basis = texts.iter().map(|t| realspec::Poly::parse(n, t).map_err(usage)).collect::<CliResult<Vec<_>>>()?;
        let bound = a.bound.as_deref().ok_or_else(|| CliError::Usage("--basis needs --bound".into()))?;
        let space = SearchSpace { basis, degree: a.deg, bound: load::group(bound)? };
        let r = exhaustive_min_search(&space, &alpha, &beta)?;
        rep.set("search", json!({
            "generators": r.generators,
            "evaluated": r.evaluated,
            "pruned_pairs": r.pruned_pairs,
            "none_below_bound": r.none_below_bound(),
            "best": r.best.as_ref().map(|c| json!({
                "element": c.element.to_string(),
                "value_alpha": io::group_to(&c.value_alpha),
            })),
        }));
    }
    if a.basis.is_none() && a.candidate.is_empty() {
        return Err(CliError::Usage("give --candidate or --basis".into()));
    }
    Ok(rep)
}

#[derive(Subcommand, Debug)]
pub enum RootsCmd {
    /// The three minimal binomials for weights on three variables.
    Classify {
        #[arg(long)]
        weights: String,
        /// Rank of the value group; weights go in the last coordinate.
        #[arg(long, default_value_t = 1)]
        rank: usize,
        #[arg(long, default_value_t = realspec::roots::DEFAULT_EXPONENT_BOUND)]
        bound: u32,
    },
}

fn root_json(q: &BinomialRoot) -> serde_json::Value {
    json!({ "root": io::root_to(q), "text": q.to_string() })
}

pub fn roots(cmd: &RootsCmd) -> CliResult<Report> {
    let RootsCmd::Classify { weights, rank, bound } = cmd;
    let mut rep = Report::new("roots classify");
    let w = load::weights(&mut rep, weights, *rank)?;
    let rs = classify_roots_with_shapes(&w, *bound)?;
    let out: Vec<_> = rs
        .iter()
        .map(|(shape, q)| {
            let mut j = root_json(q);
            j["shape"] = json!(shape.name());
            j
        })
        .collect();
    let bad: Vec<String> = rs.iter().filter(|(_, q)| !q.is_quasi_homogeneous(&w)).map(|(_, q)| q.to_string()).collect();
    rep.check("quasi-homogeneous", bad.is_empty(), || bad.join(", "));
    rep.set("roots", out);
    Ok(rep)
}

#[derive(Args, Debug)]
pub struct SyzygyArgs {
    #[arg(long)]
    weights: String,
    #[arg(long, default_value_t = 1)]
    rank: usize,
    /// JSON list of three roots; classified from the weights when absent.
    #[arg(long)]
    roots: Option<PathBuf>,
}

fn three_roots(rep: &mut Report, path: &Option<PathBuf>, w: &realspec::Weights) -> CliResult<Vec<BinomialRoot>> {
    let rs = match path {
        Some(p) => {
            let ws: Vec<RootW> = load::json(rep, "roots", p)?;
            ws.iter().map(|r| io::root_from(r).map_err(usage)).collect::<CliResult<Vec<_>>>()?
        }
        None => classify_roots(w)?,
    };
    if rs.len() != 3 {
        return Err(CliError::Usage(format!("expected three roots, got {}", rs.len())));
    }
    Ok(rs)
}

pub fn syzygy(a: &SyzygyArgs) -> CliResult<Report> {
    let mut rep = Report::new("syzygy");
    let w = load::weights(&mut rep, &a.weights, a.rank)?;
    let rs = three_roots(&mut rep, &a.roots, &w)?;
    let cert = build_syzygy(&rs[0], &rs[1], &rs[2], &w)?;
    let zero = cert.expansion()?.is_zero();
    rep.check("expansion-vanishes", zero, || "sum of cofactor products is not zero".into());
    rep.check("certificate-verifies", verify_certificate(&cert, &w), || "verification failed".into());
    rep.set("certificate", io::certificate_to(&cert));
    rep.set("omegas", cert.omegas.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    Ok(rep)
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    alpha: PathBuf,
    #[arg(long)]
    beta: PathBuf,
    /// JSON list of three roots; classified from the weights of alpha when
    /// absent.
    #[arg(long)]
    roots: Option<PathBuf>,
    /// Value of the separating ideal at alpha, for the half-value check.
    #[arg(long)]
    mu: Option<String>,
}

pub fn compare(a: &CompareArgs) -> CliResult<Report> {
    let mut rep = Report::new("compare");
    let alpha = load::curvette(&mut rep, "alpha", &a.alpha)?;
    let beta = load::curvette(&mut rep, "beta", &a.beta)?;
    let rs = three_roots(&mut rep, &a.roots, &alpha.weights())?;
    let mut pairs = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = compare_roots(&rs[i], &rs[j], &alpha, &beta)?;
        pairs.push(json!({
            "pair": [i + 1, j + 1],
            "verdict": c.verdict.tag(),
            "values_alpha": [io::group_to(&c.values_alpha.0), io::group_to(&c.values_alpha.1)],
            "values_beta": [io::group_to(&c.values_beta.0), io::group_to(&c.values_beta.1)],
            "ratio_alpha": rat_text(&c.ratio_alpha),
            "ratio_beta": rat_text(&c.ratio_beta),
        }));
    }
    rep.set("roots", rs.iter().map(root_json).collect::<Vec<_>>());
    rep.set("pairs", pairs);
    let t = trichotomy_check(&rs[0], &rs[1], &rs[2], &alpha, &beta)?;
    rep.set("trichotomy", format!("{t:?}"));
    rep.check("trichotomy", !matches!(t, Trichotomy::Violation { .. }), || format!("{t:?}"));
    if let Some(mu) = &a.mu {
        if t == Trichotomy::AllIncomparable {
            let ok = half_mu_check(&rs, &alpha, &beta, &load::group(mu)?)?;
            rep.set("half_mu", ok);
            rep.check("half-mu", ok, || "fewer than two roots exceed half the separating value".into());
        }
    }
    Ok(rep)
}

/// Roots, both points and the standard forms of a region computation.
#[derive(Deserialize, serde::Serialize, Debug)]
pub struct RegionSetup {
    pub roots: Vec<RootW>,
    pub alpha: io::CurvetteW,
    pub beta: io::CurvetteW,
    pub forms: Vec<StandardFormW>,
}

struct Loaded {
    sys: RootSystem,
    alpha: SemiCurvette,
    beta: SemiCurvette,
    forms: Vec<StandardForm>,
}

fn load_setup(rep: &mut Report, path: &PathBuf) -> CliResult<Loaded> {
    // Either a bare setup or the report written by `region demo-setup`.
    let mut v: serde_json::Value = load::json(rep, "setup", path)?;
    if let Some(inner) = v.pointer_mut("/outputs/setup") {
        v = inner.take();
    }
    let s: RegionSetup = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let roots = s.roots.iter().map(|r| io::root_from(r).map_err(usage)).collect::<CliResult<Vec<_>>>()?;
    let alpha = io::curvette_from(&s.alpha).map_err(usage)?;
    let beta = io::curvette_from(&s.beta).map_err(usage)?;
    let sys = RootSystem::new(alpha.n(), roots)?;
    let (ea, eb) = (sys.evaluate_all(&alpha)?, sys.evaluate_all(&beta)?);
    let forms = s.forms.iter().map(|f| io::form_from(f, &[&ea, &eb]).map_err(usage)).collect::<CliResult<Vec<_>>>()?;
    Ok(Loaded { sys, alpha, beta, forms })
}

/// The setup of the worked example, as JSON.
pub fn demo_setup() -> RegionSetup {
    let sys = realspec::demo::root_system();
    let (alpha, beta) = realspec::demo::region_pair();
    let forms = realspec::demo::standard_forms(&sys, &alpha, &beta).expect("forms hold at both points");
    RegionSetup {
        roots: sys.roots().iter().map(io::root_to).collect(),
        alpha: io::curvette_to(&alpha),
        beta: io::curvette_to(&beta),
        forms: forms.iter().map(io::form_to).collect(),
    }
}

#[derive(Args, Debug)]
pub struct SetupArg {
    /// JSON with roots, alpha, beta and standard forms.
    #[arg(long)]
    setup: PathBuf,
}

#[derive(Args, Debug)]
pub struct RegionChoice {
    /// c, cprime or d.
    #[arg(long, default_value = "c")]
    region: String,
    /// Drop every constraint with this provenance (a negative control).
    #[arg(long)]
    drop: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RegionCmd {
    /// Print the setup of the worked example.
    DemoSetup,
    /// Value dominance of each form's dominant monomial, with α's signs.
    BuildC(SetupArg),
    /// Magnitude dominance with explicit multipliers, with α's signs.
    BuildCprime(SetupArg),
    /// Three-root region for given or searched roles and an ε.
    BuildD {
        #[command(flatten)]
        setup: SetupArg,
        /// Root indices playing Q4, Q5, Q6; all orders are tried if absent.
        #[arg(long)]
        roles: Option<String>,
        /// "auto" or a rational strictly between 0 and 1.
        #[arg(long, default_value = "auto")]
        eps: String,
    },
    /// Whether a curvette lies in the chosen region.
    Member {
        #[command(flatten)]
        setup: SetupArg,
        #[command(flatten)]
        choice: RegionChoice,
        /// Curvette to test.
        #[arg(long)]
        delta: PathBuf,
    },
    /// Sampled sign constancy of the forms on the region.
    Sample {
        #[command(flatten)]
        setup: SetupArg,
        #[command(flatten)]
        choice: RegionChoice,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

fn region_of(l: &Loaded, which: &str, rep: &mut Report) -> CliResult<Region> {
    match which {
        "c" => Ok(build_c(&l.forms, &l.sys, &l.alpha)?),
        "cprime" => Ok(build_cprime(&l.forms, &l.sys, &l.alpha)?),
        "d" => {
            let syz = syzygy_for(l)?;
            let (roles, r, eps) = build_d_any_order(&l.forms, &l.sys, &syz, &l.alpha, &l.beta, &Epsilon::Auto)?;
            rep.set("roles", roles);
            rep.set("eps", rat_text(&eps));
            Ok(r)
        }
        other => Err(CliError::Usage(format!("unknown region {other:?}; use c, cprime or d"))),
    }
}

fn syzygy_for(l: &Loaded) -> CliResult<realspec::syzygy::SyzygyCertificate> {
    let r = l.sys.roots();
    if r.len() != 3 {
        return Err(CliError::Usage("region D needs exactly three roots".into()));
    }
    Ok(build_syzygy(&r[0], &r[1], &r[2], &l.alpha.weights())?)
}

fn report_region(rep: &mut Report, r: &Region, l: &Loaded) -> CliResult<()> {
    let (ma, mb) = (r.member(&l.alpha)?, r.member(&l.beta)?);
    rep.check("contains-alpha", ma, || r.first_failure(&l.alpha).ok().flatten().unwrap_or_default());
    rep.check("contains-beta", mb, || r.first_failure(&l.beta).ok().flatten().unwrap_or_default());
    rep.set("region", io::region_to(r));
    Ok(())
}

pub fn region(cmd: &RegionCmd) -> CliResult<Report> {
    match cmd {
        RegionCmd::DemoSetup => {
            let mut rep = Report::new("region demo-setup");
            rep.set("setup", demo_setup());
            Ok(rep)
        }
        RegionCmd::BuildC(s) | RegionCmd::BuildCprime(s) => {
            let name = if matches!(cmd, RegionCmd::BuildC(_)) { "c" } else { "cprime" };
            let mut rep = Report::new(&format!("region build-{name}"));
            let l = load_setup(&mut rep, &s.setup)?;
            let r = region_of(&l, name, &mut rep)?;
            report_region(&mut rep, &r, &l)?;
            Ok(rep)
        }
        RegionCmd::BuildD { setup, roles, eps } => {
            let mut rep = Report::new("region build-d");
            let l = load_setup(&mut rep, &setup.setup)?;
            let syz = syzygy_for(&l)?;
            let eps = match eps.as_str() {
                "auto" => Epsilon::Auto,
                t => Epsilon::Fixed(realspec::algebra::rat::parse_rat(t).map_err(usage)?),
            };
            let (roles, r, e) = match roles {
                Some(t) => {
                    let v = load::ints(t)?;
                    let roles: [usize; 3] = match v.as_slice() {
                        [a, b, c] if [a, b, c].iter().all(|x| (0..3).contains(*x)) => [*a as usize, *b as usize, *c as usize],
                        _ => return Err(CliError::Usage("--roles takes three indices in 0..3".into())),
                    };
                    let (r, e) = build_d(&l.forms, &l.sys, &syz, roles, &l.alpha, &l.beta, &eps)?;
                    (roles, r, e)
                }
                None => build_d_any_order(&l.forms, &l.sys, &syz, &l.alpha, &l.beta, &eps)?,
            };
            rep.set("roles", roles);
            rep.set("eps", rat_text(&e));
            report_region(&mut rep, &r, &l)?;
            Ok(rep)
        }
        RegionCmd::Member { setup, choice, delta } => {
            let mut rep = Report::new("region member");
            let l = load_setup(&mut rep, &setup.setup)?;
            let mut r = region_of(&l, &choice.region, &mut rep)?;
            if let Some(p) = &choice.drop {
                r = r.without(p);
            }
            let d = load::curvette(&mut rep, "delta", delta)?;
            rep.set("member", r.member(&d)?);
            rep.set("first_failure", r.first_failure(&d)?);
            Ok(rep)
        }
        RegionCmd::Sample { setup, choice, seed, count } => {
            let mut rep = Report::new("region sample");
            let l = load_setup(&mut rep, &setup.setup)?;
            let mut r = region_of(&l, &choice.region, &mut rep)?;
            if let Some(p) = &choice.drop {
                r = r.without(p);
            }
            rep.input("seed", &seed.to_string());
            let s = sign_constancy_sample(&r, &l.forms, &l.alpha, *seed, *count)?;
            rep.set("sampled", s.sampled);
            rep.set("members", s.members);
            rep.checks.push("sign-constancy".into());
            for v in &s.violations {
                rep.violations.push(format!("sign-constancy: sample {} form {}: {}", v.sample, v.form, v.detail));
            }
            Ok(rep)
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum TetraCmd {
    /// Exact feasible interval on the segment and the midpoint D.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Grid evaluation at the instance's resolution (default 1/1000).
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Whether a point lies in the image of the value map.
    PhiCheck {
        #[arg(long)]
        phi: String,
    },
    /// A curvette realizing a point of the image.
    PhiWitness {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        weights: String,
    },
}

fn phi_arg(rep: &mut Report, text: &str) -> CliResult<PhiPoint> {
    rep.input("phi", text);
    let v = load::rats(text)?;
    v.try_into().map_err(|_| CliError::Usage("phi takes four rationals".into()))
}

pub fn tetra(cmd: &TetraCmd) -> CliResult<Report> {
    match cmd {
        TetraCmd::Solve { input } | TetraCmd::Oracle { input } => {
            let solve = matches!(cmd, TetraCmd::Solve { .. });
            let mut rep = Report::new(if solve { "tetra solve" } else { "tetra oracle" });
            let inst: TetraInstanceW = load::json(&mut rep, "instance", input)?;
            let cs = inst.constraints.iter().map(|c| io::axis_constraint_from(c).map_err(usage)).collect::<CliResult<Vec<AxisConstraint>>>()?;
            if solve {
                let (a, b) = (io::bary_from(&inst.a).map_err(usage)?, io::bary_from(&inst.b).map_err(usage)?);
                let s = tetra_solve(&a, &b, &cs)?;
                rep.set("interval", [rat_text(&s.lo), rat_text(&s.hi)]);
                rep.set("D", io::bary_to(&s.d));
                rep.set("lambda_a_prime", rat_text(&s.lambda_a_prime));
                rep.set("lambda_b_prime", rat_text(&s.lambda_b_prime));
                rep.set("b_prime_feasible", s.b_prime_feasible);
                rep.set("lambda_witness", rat_text(&s.lambda_witness));
                rep.check("D-feasible", cs.iter().all(|c| c.holds(&s.d)), || "D violates a constraint".into());
                rep.check("witness-feasible", s.witness_feasible, || "max(A', B') violates a constraint".into());
            } else {
                let res = match &inst.resolution {
                    Some(r) => realspec::algebra::rat::parse_rat(r).map_err(usage)?,
                    None => Rat::new(1.into(), 1000.into()),
                };
                let g = grid_oracle(&cs, &res)?;
                rep.set("feasible_points", g.len());
                rep.set("first", g.first().map(rat_text));
                rep.set("last", g.last().map(rat_text));
            }
            Ok(rep)
        }
        TetraCmd::PhiCheck { phi } => {
            let mut rep = Report::new("tetra phi-check");
            let p = phi_arg(&mut rep, phi)?;
            rep.set("in_image", phi_image_check(&p)?);
            Ok(rep)
        }
        TetraCmd::PhiWitness { phi, weights } => {
            let mut rep = Report::new("tetra phi-witness");
            let p = phi_arg(&mut rep, phi)?;
            let w = load::weights(&mut rep, weights, 1)?;
            let rs: [BinomialRoot; 3] = classify_roots(&w)?.try_into().map_err(|_| CliError::Usage("need three roots".into()))?;
            let d = phi_witness(&p, &w, &rs)?;
            let back = tetra::phi_measure(&d, &rs, &GroupVec::ints(&[1]))?;
            rep.check("round-trip", back == p, || "measured point differs".into());
            rep.set("curvette", io::curvette_to(&d));
            Ok(rep)
        }
    }
}

#[derive(Args, Debug)]
pub struct Samples {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    count: usize,
}

#[derive(Subcommand, Debug)]
pub enum SurfaceCmd {
    /// Strict transform in the chart chosen by values.
    Blowup {
        #[arg(long)]
        curvette: PathBuf,
    },
    /// Tangent slope of a plane curvette, possibly infinite.
    Slope {
        #[arg(long)]
        curvette: PathBuf,
    },
    /// Lockstep blowups of two points until their slopes differ.
    Separate {
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
    },
    /// Coefficients of g = unit·(y + Σ cᵢ xⁱ) up to order N.
    Expand {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        order: usize,
    },
    /// Lexicographic order of two coefficient expansions.
    Prec {
        #[arg(long, allow_hyphen_values = true)]
        e1: String,
        #[arg(long, allow_hyphen_values = true)]
        e2: String,
    },
    /// Sampled inclusion for a claimed order e_j ≺ e_q.
    #[command(name = "check-35")]
    Inclusion {
        #[arg(long, allow_hyphen_values = true)]
        ej: String,
        #[arg(long, allow_hyphen_values = true)]
        eq: String,
        #[command(flatten)]
        samples: Samples,
    },
    /// Leading coefficients of the first and last forms.
    #[command(name = "check-36")]
    LeadingCoefficients {
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        #[arg(long, allow_hyphen_values = true)]
        last: String,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
    },
    /// x′ > 0 on sampled members of {g′₁ > 0, g′ₛ < 0}.
    #[command(name = "check-37")]
    Quadrant {
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        #[arg(long, allow_hyphen_values = true)]
        last: String,
        #[command(flatten)]
        samples: Samples,
    },
}

fn curvette2(rep: &mut Report, name: &str, p: &PathBuf) -> CliResult<s2::Curvette2> {
    let w: io::Curvette2W = load::json(rep, name, p)?;
    io::curvette2_from(&w).map_err(usage)
}

fn expansion(rep: &mut Report, name: &str, text: &str) -> CliResult<CoeffExpansion> {
    rep.input(name, text);
    Ok(CoeffExpansion::new(load::rats(text)?))
}

fn slope_text(s: &s2::Slope) -> String {
    match s {
        s2::Slope::Infinity => "infinity".into(),
        s2::Slope::Finite(r) => rat_text(r),
    }
}

pub fn surface(cmd: &SurfaceCmd) -> CliResult<Report> {
    match cmd {
        SurfaceCmd::Blowup { curvette } => {
            let mut rep = Report::new("surface2d blowup");
            let c = curvette2(&mut rep, "curvette", curvette)?;
            let (chart, b) = s2::blowup(&c)?;
            rep.set("chart", format!("{chart:?}"));
            rep.set("curvette", io::curvette2_to(&b));
            Ok(rep)
        }
        SurfaceCmd::Slope { curvette } => {
            let mut rep = Report::new("surface2d slope");
            let c = curvette2(&mut rep, "curvette", curvette)?;
            rep.set("slope", slope_text(&s2::slope(&c)));
            Ok(rep)
        }
        SurfaceCmd::Separate { alpha, beta } => {
            let mut rep = Report::new("surface2d separate");
            let (a, b) = (curvette2(&mut rep, "alpha", alpha)?, curvette2(&mut rep, "beta", beta)?);
            let s = s2::separate_slopes(&a, &b, s2::MAX_BLOWUPS)?;
            rep.set("blowups", s.blowups);
            rep.set("opposite_directions", s.opposite_directions);
            rep.set("slopes", [slope_text(&s2::slope(&s.alpha)), slope_text(&s2::slope(&s.beta))]);
            rep.set("alpha", io::curvette2_to(&s.alpha));
            rep.set("beta", io::curvette2_to(&s.beta));
            Ok(rep)
        }
        SurfaceCmd::Expand { poly, order } => {
            let mut rep = Report::new("surface2d expand");
            let g = load::poly(&mut rep, "poly", 2, poly)?;
            let e = s2::newton_expand(&g, *order)?;
            let res = s2::residual_order(&g, &e);
            rep.set("coeffs", io::rats_to(&e.coeffs));
            rep.set("residual_order", res);
            rep.check("residual-order", res.is_none_or(|r| r > *order), || format!("residual order {res:?}"));
            Ok(rep)
        }
        SurfaceCmd::Prec { e1, e2 } => {
            let mut rep = Report::new("surface2d prec");
            let (a, b) = (expansion(&mut rep, "e1", e1)?, expansion(&mut rep, "e2", e2)?);
            rep.set("order", format!("{:?}", s2::prec_compare(&a, &b)?));
            Ok(rep)
        }
        SurfaceCmd::Inclusion { ej, eq, samples } => {
            let mut rep = Report::new("surface2d check-35");
            let (a, b) = (expansion(&mut rep, "ej", ej)?, expansion(&mut rep, "eq", eq)?);
            rep.input("seed", &samples.seed.to_string());
            let pts = s2::sample_points(&[a.clone(), b.clone()], samples.seed, samples.count)?;
            let r = s2::inclusion_check(&a, &b, &pts)?;
            rep.set("order", r.order.map(|o| format!("{o:?}")));
            rep.set("sampled", r.sampled);
            rep.set("relevant", r.relevant);
            rep.checks.push("inclusion".into());
            if r.order == Some(std::cmp::Ordering::Greater) {
                rep.violations.push("inclusion: the claimed order is reversed".into());
            }
            for i in &r.violations {
                rep.violations.push(format!("inclusion: sample {i}"));
            }
            Ok(rep)
        }
        SurfaceCmd::LeadingCoefficients { first, last, alpha, beta } => {
            let mut rep = Report::new("surface2d check-36");
            let (f, l) = (expansion(&mut rep, "first", first)?, expansion(&mut rep, "last", last)?);
            let (a, b) = (curvette2(&mut rep, "alpha", alpha)?, curvette2(&mut rep, "beta", beta)?);
            let r = s2::leading_coefficient_check(&f, &l, &a, &b)?;
            rep.set("c_first", rat_text(&r.c_first));
            rep.set("c_last", rat_text(&r.c_last));
            rep.set("holds", r.holds);
            rep.checks.push("leading-coefficients".into());
            rep.violations.extend(r.violations.into_iter().map(|v| format!("leading-coefficients: {v}")));
            Ok(rep)
        }
        SurfaceCmd::Quadrant { first, last, samples } => {
            let mut rep = Report::new("surface2d check-37");
            let (f, l) = (expansion(&mut rep, "first", first)?, expansion(&mut rep, "last", last)?);
            rep.input("seed", &samples.seed.to_string());
            let pts = s2::sample_points(&[f.clone(), l.clone()], samples.seed, samples.count)?;
            let r = s2::quadrant_check(&f, &l, &pts)?;
            rep.set("sampled", r.sampled);
            rep.set("members", r.members);
            rep.checks.push("quadrant-x-positive".into());
            rep.violations.extend(r.violations.iter().map(|i| format!("quadrant-x-positive: sample {i}")));
            Ok(rep)
        }
    }
}
