//! `realspec`: evaluate curvettes, search for separating elements, classify
//! binomial roots, build syzygies and regions, and run the worked example.
//!
//! Exit codes: 0 when every check passes, 1 on usage or input errors, 2
//! when a check fails on the given data.

mod commands;
mod example;
mod load;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::{CliError, CliResult, Report};

#[derive(Parser, Debug)]
#[command(name = "realspec", version, about = "Exact computations on semi-curvettes and binomial roots")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add wall-clock time to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
pub struct PolyAt {
    /// Curvette JSON file.
    #[arg(long)]
    pub curvette: PathBuf,
    /// Polynomial in x, y, z (or x1, x2, ...).
    #[arg(long)]
    pub poly: String,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Substitute a curvette into a polynomial.
    Eval(PolyAt),
    /// Value of a polynomial at a curvette.
    Value(PolyAt),
    /// Sign of a polynomial at a curvette.
    Sign(PolyAt),
    /// Bound and search for sign-changing elements.
    Separating(commands::SeparatingArgs),
    /// Binomial roots for given weights.
    Roots {
        #[command(subcommand)]
        cmd: commands::RootsCmd,
    },
    /// Build and verify the syzygy among three roots.
    Syzygy(commands::SyzygyArgs),
    /// Comparability verdicts for the roots at two points.
    Compare(commands::CompareArgs),
    /// Regions cut out by sign and magnitude conditions.
    Region {
        #[command(subcommand)]
        cmd: commands::RegionCmd,
    },
    /// Barycentric feasibility and the value map.
    Tetra {
        #[command(subcommand)]
        cmd: commands::TetraCmd,
    },
    /// Plane curvettes, blowups and coefficient expansions.
    Surface2d {
        #[command(subcommand)]
        cmd: commands::SurfaceCmd,
    },
    /// Worked examples.
    Example {
        #[command(subcommand)]
        cmd: example::ExampleCmd,
    },
}

fn dispatch(cmd: Cmd) -> CliResult<Report> {
    match cmd {
        Cmd::Eval(a) => commands::eval(&a, "eval"),
        Cmd::Value(a) => commands::eval(&a, "value"),
        Cmd::Sign(a) => commands::eval(&a, "sign"),
        Cmd::Separating(a) => commands::separating(&a),
        Cmd::Roots { cmd } => commands::roots(&cmd),
        Cmd::Syzygy(a) => commands::syzygy(&a),
        Cmd::Compare(a) => commands::compare(&a),
        Cmd::Region { cmd } => commands::region(&cmd),
        Cmd::Tetra { cmd } => commands::tetra(&cmd),
        Cmd::Surface2d { cmd } => commands::surface(&cmd),
        Cmd::Example { cmd } => example::run(&cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let mut rep = match dispatch(cli.cmd) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(match e {
                CliError::Usage(_) => 1,
                CliError::Assertion(_) => 2,
            });
        }
    };
    if cli.timing {
        rep.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = rep.render();
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if rep.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        for v in &rep.violations {
            eprintln!("VIOLATION: {v}");
        }
        ExitCode::from(2)
    }
}
