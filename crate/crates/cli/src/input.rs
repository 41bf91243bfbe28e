//! Reading polynomials, complexes, zonotopes and f-triangle selections.

use std::io::Read;

use lace_poly::{Poly, Rational};
use lace_simplicial::{Construction, SimplicialComplex};
use lace_subdiv::{barycentric_table, ColoredPTable, FTriangle, PRowTable};
use lace_zono::Zonotope;

use crate::error::{CliError, CliResult};
use crate::{FInput, PolyInput};

/// File contents, or stdin for `-`.
pub fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{path}: {e}")))
}

pub fn poly(input: &PolyInput) -> CliResult<Poly> {
    match (&input.h, &input.h_file) {
        (Some(s), _) => Ok(s.parse()?),
        (None, Some(path)) => Ok(read_source(path)?.parse()?),
        (None, None) => Err(CliError::parse("one of --h or --h-file is required")),
    }
}

/// `--h` or `--h-file` as recorded in the run configuration.
pub fn poly_label(input: &PolyInput) -> Option<String> {
    match (&input.h, &input.h_file) {
        (Some(s), _) => Some(format!("h={s}")),
        (None, Some(path)) => Some(format!("h-file={path}")),
        (None, None) => None,
    }
}

/// A vector of exactly `len` coefficients, rejecting higher-degree input.
pub fn vector(s: &str, len: usize, what: &str) -> CliResult<Vec<Rational>> {
    let p: Poly = s.parse()?;
    if p.degree().is_some_and(|d| d >= len) {
        return Err(CliError::precondition(format!("{what} has more than {len} entries")));
    }
    Ok(p.padded(len - 1))
}

pub fn complex(path: Option<&str>) -> CliResult<SimplicialComplex> {
    let path = path.ok_or_else(|| CliError::parse("--in is required"))?;
    Ok(read_source(path)?.parse()?)
}

pub fn zonotope(path: &str) -> CliResult<Zonotope> {
    Ok(read_source(path)?.parse()?)
}

pub fn require_r(r: Option<usize>, what: &str) -> CliResult<usize> {
    r.ok_or_else(|| CliError::parse(format!("{what} needs --r")))
}

/// The f-triangle named by `spec` with rows `0..=d`.
pub fn ftriangle(spec: &str, r: Option<usize>, d: usize) -> CliResult<FTriangle> {
    Ok(match spec {
        "trivial" => FTriangle::trivial(d),
        "barycentric" => FTriangle::barycentric(d),
        "edgewise" => FTriangle::from_construction(Construction::Edgewise(require_r(r, "edgewise")?), d)?,
        "colored" => FTriangle::from_construction(Construction::Colored(require_r(r, "colored")?), d)?,
        path => {
            let f: FTriangle = read_source(path)?.parse()?;
            if f.size() < d {
                return Err(CliError::precondition(format!(
                    "{path} has rows up to {}, need {d}",
                    f.size()
                )));
            }
            f
        }
    })
}

/// The p-row table of the selected f-triangle up to `n`. The colored
/// subdivision goes through its own recurrence instead of a construction.
pub fn table(f: &FInput, n: usize) -> CliResult<PRowTable> {
    Ok(match f.f.as_str() {
        "barycentric" => barycentric_table(n).as_ref().clone(),
        "colored" => ColoredPTable::build(n, require_r(f.r, "colored")?)?.p_rows()?,
        spec => PRowTable::build(&ftriangle(spec, f.r, n)?, n)?,
    })
}
