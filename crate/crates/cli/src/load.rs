//! Reading inputs and parsing command-line values.

use std::path::Path;

use realspec::algebra::rat::parse_rat;
use realspec::io::{self, CurvetteW};
use realspec::{GroupVec, Poly, SemiCurvette, Weights};
use serde::de::DeserializeOwned;

use crate::report::{CliError, CliResult, Report};

pub fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Reads a file and records its hash under `name`.
pub fn read(rep: &mut Report, name: &str, path: &Path) -> CliResult<String> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    rep.input(name, &text);
    Ok(text)
}

/// serde_json errors carry the line and column.
pub fn json<T: DeserializeOwned>(rep: &mut Report, name: &str, path: &Path) -> CliResult<T> {
    let text = read(rep, name, path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn curvette(rep: &mut Report, name: &str, path: &Path) -> CliResult<SemiCurvette> {
    let w: CurvetteW = json(rep, name, path)?;
    io::curvette_from(&w).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn poly(rep: &mut Report, name: &str, n: usize, text: &str) -> CliResult<Poly> {
    rep.input(name, text);
    Poly::parse(n, text).map_err(usage)
}

fn split(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

pub fn rats(text: &str) -> CliResult<Vec<realspec::Rat>> {
    split(text).map(|s| parse_rat(s).map_err(usage)).collect()
}

pub fn group(text: &str) -> CliResult<GroupVec> {
    Ok(GroupVec::new(rats(text)?))
}

pub fn ints(text: &str) -> CliResult<Vec<i64>> {
    split(text).map(|s| s.parse::<i64>().map_err(|e| CliError::Usage(format!("{s:?}: {e}")))).collect()
}

/// "3,4,5" with each weight in the last of `rank` coordinates.
pub fn weights(rep: &mut Report, text: &str, rank: usize) -> CliResult<Weights> {
    rep.input("weights", text);
    Weights::ints(&ints(text)?, rank).map_err(usage)
}
