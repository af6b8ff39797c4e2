//! Golden tables bundled with the binary, and located diffs against them.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use treewalk_core::triangles::{self, TriangleKind};
use treewalk_core::walks::{walks_polynomial, walks_with_k_returns};
use treewalk_core::Count;

use num_traits::pow;

use crate::CliError;

pub const CATALAN: &str = include_str!("../fixtures/catalan.csv");
pub const BOREL: &str = include_str!("../fixtures/borel.csv");
pub const POLYNOMIALS: &str = include_str!("../fixtures/polynomials.csv");
pub const RETURN_WEIGHTS: &str = include_str!("../fixtures/return_weights.csv");

/// Rows of the golden triangles.
pub const TRIANGLE_ROWS: usize = 7;
/// Largest semi-length in the golden polynomial table.
pub const POLY_MAX_N: usize = 6;

/// Source of fixture text: the bundled copies or a directory on disk.
#[derive(Debug, Clone, Default)]
pub struct FixtureSet {
    dir: Option<std::path::PathBuf>,
}

impl FixtureSet {
    pub fn new(dir: Option<&Path>) -> Self {
        FixtureSet {
            dir: dir.map(Path::to_path_buf),
        }
    }

    fn load(&self, name: &str, bundled: &'static str) -> Result<String, CliError> {
        match &self.dir {
            None => Ok(bundled.to_string()),
            Some(dir) => {
                let path = dir.join(name);
                fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
            }
        }
    }

    pub fn triangle(&self, kind: TriangleKind) -> Result<(String, String), CliError> {
        let (name, bundled) = match kind {
            TriangleKind::Catalan => ("catalan.csv", CATALAN),
            TriangleKind::Borel => ("borel.csv", BOREL),
        };
        Ok((name.to_string(), self.load(name, bundled)?))
    }

    pub fn polynomials(&self) -> Result<String, CliError> {
        self.load("polynomials.csv", POLYNOMIALS)
    }

    pub fn return_weights(&self) -> Result<String, CliError> {
        self.load("return_weights.csv", RETURN_WEIGHTS)
    }
}

fn parse_csv<T: std::str::FromStr>(name: &str, text: &str) -> Result<Vec<Vec<T>>, Vec<String>> {
    let mut rows = Vec::new();
    let mut problems = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let mut row = Vec::new();
        for (col, field) in line.split(',').enumerate() {
            match field.trim().parse() {
                Ok(v) => row.push(v),
                Err(_) => problems.push(format!(
                    "{name} line {}: column {col}: cannot parse {field:?}",
                    line_no + 1
                )),
            }
        }
        rows.push(row);
    }
    if problems.is_empty() {
        Ok(rows)
    } else {
        Err(problems)
    }
}

/// Compares rows `0..=max_row` of a computed triangle with the fixture.
/// Returns one message per mismatch.
pub fn diff_triangle(
    fixtures: &FixtureSet,
    kind: TriangleKind,
    max_row: usize,
) -> Result<Vec<String>, CliError> {
    let (name, text) = fixtures.triangle(kind)?;
    let expected: Vec<Vec<Count>> = match parse_csv(&name, &text) {
        Ok(rows) => rows,
        Err(problems) => return Ok(problems),
    };
    let max_row = max_row.min(TRIANGLE_ROWS);
    let computed = triangles::table(kind, max_row);
    let mut diffs = Vec::new();
    if expected.len() < max_row + 1 {
        diffs.push(format!(
            "{name}: has {} rows, expected at least {}",
            expected.len(),
            max_row + 1
        ));
    }
    for (n, (want, got)) in expected.iter().zip(computed.rows()).enumerate() {
        if want.len() != got.len() {
            diffs.push(format!(
                "{name} row {n}: {} entries, expected {}",
                want.len(),
                got.len()
            ));
        }
        for (k, (w, g)) in want.iter().zip(got).enumerate() {
            if w != g {
                diffs.push(format!("{name} row {n} col {k}: fixture {w}, computed {g}"));
            }
        }
    }
    Ok(diffs)
}

/// Compares `walks_polynomial(n)` and the per-return multipliers for `n`
/// against the fixtures; `None` checks every tabulated `n`.
pub fn diff_polynomials(
    fixtures: &FixtureSet,
    only: Option<usize>,
) -> Result<Vec<String>, CliError> {
    let mut diffs = Vec::new();
    let wanted = |n: usize| only.is_none_or(|m| m == n);

    let polys: Vec<Vec<BigInt>> = match parse_csv("polynomials.csv", &fixtures.polynomials()?) {
        Ok(rows) => rows,
        Err(problems) => return Ok(problems),
    };
    let mut seen = [false; POLY_MAX_N + 1];
    for (line, row) in polys.iter().enumerate() {
        let Some(n) = row.first().and_then(|v| usize::try_from(v).ok()) else {
            diffs.push(format!("polynomials.csv line {}: missing n", line + 1));
            continue;
        };
        if n == 0 || n > POLY_MAX_N || !wanted(n) {
            continue;
        }
        seen[n] = true;
        let computed: Vec<BigInt> = walks_polynomial(n)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .coefficients_descending()
            .into_iter()
            .take(n)
            .collect();
        let fixture = &row[1..];
        if fixture.len() != computed.len() {
            diffs.push(format!(
                "polynomials.csv n={n}: {} coefficients, expected {}",
                fixture.len(),
                computed.len()
            ));
        }
        for (pos, (w, g)) in fixture.iter().zip(&computed).enumerate() {
            if w != g {
                diffs.push(format!(
                    "polynomials.csv n={n} coefficient of delta^{}: fixture {w}, computed {g}",
                    n - pos
                ));
            }
        }
    }

    let weights: Vec<Vec<u64>> = match parse_csv("return_weights.csv", &fixtures.return_weights()?)
    {
        Ok(rows) => rows,
        Err(problems) => return Ok(problems),
    };
    let mut seen_k = vec![vec![false; POLY_MAX_N + 1]; POLY_MAX_N + 1];
    for (line, row) in weights.iter().enumerate() {
        let &[n, k, multiplier] = row.as_slice() else {
            diffs.push(format!(
                "return_weights.csv line {}: expected n,k,count",
                line + 1
            ));
            continue;
        };
        let (n, k) = (n as usize, k as usize);
        if n == 0 || n > POLY_MAX_N || k == 0 || k > n || !wanted(n) {
            continue;
        }
        seen_k[n][k] = true;
        for delta in 2..=4u64 {
            let got =
                walks_with_k_returns(n, k, delta).map_err(|e| CliError::Usage(e.to_string()))?;
            let want = pow(Count::from(delta), k) * pow(Count::from(delta - 1), n - k) * multiplier;
            if got != want {
                diffs.push(format!(
                    "return_weights.csv n={n} k={k}: fixture multiplier {multiplier} disagrees at delta={delta} (computed {got}, fixture gives {want})"
                ));
                break;
            }
        }
    }

    for n in 1..=POLY_MAX_N {
        if !wanted(n) {
            continue;
        }
        if !seen[n] {
            diffs.push(format!("polynomials.csv: missing row for n={n}"));
        }
        for (k, present) in seen_k[n].iter().enumerate().take(n + 1).skip(1) {
            if !present {
                diffs.push(format!("return_weights.csv: missing row n={n} k={k}"));
            }
        }
    }
    Ok(diffs)
}
