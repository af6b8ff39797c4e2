use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use treewalk_core::oracle::dp_walk_count;
use treewalk_core::rlseq::{s_closed_form, s_table_enumerated, s_table_recurrence};
use treewalk_core::series::{gf_expansion, gf_walk_counts, PowerSeries};
use treewalk_core::triangles::{self, rows_to_csv, rows_to_json, TriangleKind};
use treewalk_core::walks::{
    walks_polynomial, walks_via_borel, walks_via_catalan, walks_via_components,
};
use treewalk_core::Count;

use crate::fixtures::{self, FixtureSet, POLY_MAX_N};
use crate::{CliError, Kind, Method, OutputFormat, SMethod};

/// Right-aligned columns separated by a single space.
pub fn render_plain_rows<T: ToString>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            cells
                .iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>width$}", width = widths[c]))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn render_rows(rows: &[Vec<Count>], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => render_plain_rows(rows),
        OutputFormat::Csv => rows_to_csv(rows),
        OutputFormat::Json => rows_to_json(rows) + "\n",
    }
}

fn fixture_failure(output: String, diffs: Vec<String>) -> Result<String, CliError> {
    if diffs.is_empty() {
        Ok(output)
    } else {
        let mut message = String::from("fixture mismatch:\n");
        for d in diffs {
            message.push_str("  ");
            message.push_str(&d);
            message.push('\n');
        }
        Err(CliError::Failed { output, message })
    }
}

pub fn triangle(
    kind: Kind,
    rows: usize,
    format: OutputFormat,
    check_fixture: bool,
    fixture_dir: Option<&Path>,
) -> Result<String, CliError> {
    let kind = match kind {
        Kind::Catalan => TriangleKind::Catalan,
        Kind::Borel => TriangleKind::Borel,
    };
    let table = triangles::table(kind, rows);
    let output = render_rows(table.rows(), format);
    if !check_fixture {
        return Ok(output);
    }
    let diffs = fixtures::diff_triangle(&FixtureSet::new(fixture_dir), kind, rows)?;
    fixture_failure(output, diffs)
}

const ALL_METHODS: [Method; 5] = [
    Method::Components,
    Method::Catalan,
    Method::Borel,
    Method::Gf,
    Method::Oracle,
];

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Components => "components",
        Method::Catalan => "catalan",
        Method::Borel => "borel",
        Method::Gf => "gf",
        Method::Oracle => "oracle",
        Method::All => "all",
    }
}

fn count_with(method: Method, n: usize, delta: u64) -> Result<Count, CliError> {
    Ok(match method {
        Method::Components => walks_via_components(n, delta)?,
        Method::Catalan => walks_via_catalan(n, delta)?,
        Method::Borel => walks_via_borel(n, delta)?,
        Method::Gf => gf_walk_counts(delta, n)?.swap_remove(n),
        Method::Oracle => dp_walk_count(n, delta)?,
        Method::All => unreachable!("expanded by caller"),
    })
}

fn series_strings(s: &PowerSeries) -> Vec<String> {
    s.coefficients().iter().map(ToString::to_string).collect()
}

pub fn walks(
    n: usize,
    delta: u64,
    method: Method,
    format: OutputFormat,
    rational: bool,
) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if delta == 0 {
        return Err(CliError::Usage("--delta must be at least 1".into()));
    }
    let methods: Vec<Method> = if method == Method::All {
        ALL_METHODS.to_vec()
    } else {
        vec![method]
    };
    if delta < 2 && methods.contains(&Method::Gf) {
        return Err(CliError::Usage("the gf method needs --delta >= 2".into()));
    }
    if rational && !methods.contains(&Method::Gf) {
        return Err(CliError::Usage(
            "--rational applies only to the gf method".into(),
        ));
    }
    let results: Vec<(Method, Count)> = methods
        .iter()
        .map(|&m| Ok((m, count_with(m, n, delta)?)))
        .collect::<Result<_, CliError>>()?;
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let expansion = if rational {
        Some(gf_expansion(delta, n)?)
    } else {
        None
    };

    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            if let [(_, value)] = results.as_slice() {
                out.push_str(&format!("{value}\n"));
            } else {
                for (m, value) in &results {
                    out.push_str(&format!("{:<10} {value}\n", method_name(*m)));
                }
            }
            if let Some(e) = &expansion {
                for (label, s) in [
                    ("sqrt", &e.sqrt),
                    ("denominator", &e.denominator),
                    ("reciprocal", &e.reciprocal),
                    ("series", &e.series),
                ] {
                    out.push_str(&format!("{label}: {}\n", series_strings(s).join(" ")));
                }
            }
        }
        OutputFormat::Csv => {
            for (m, value) in &results {
                out.push_str(&format!("{},{value}\n", method_name(*m)));
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "n": n,
                "delta": delta,
                "counts": results
                    .iter()
                    .map(|(m, v)| json!({"method": method_name(*m), "count": v.to_string()}))
                    .collect::<Vec<Value>>(),
                "agree": agree,
            });
            if let Some(e) = &expansion {
                doc["series"] = json!({
                    "sqrt": series_strings(&e.sqrt),
                    "denominator": series_strings(&e.denominator),
                    "reciprocal": series_strings(&e.reciprocal),
                    "series": series_strings(&e.series),
                });
            }
            out.push_str(&doc.to_string());
            out.push('\n');
        }
    }
    if agree {
        Ok(out)
    } else {
        Err(CliError::Failed {
            output: out,
            message: format!("methods disagree for n={n}, delta={delta}\n"),
        })
    }
}

pub fn poly(
    n: usize,
    format: OutputFormat,
    ascii: bool,
    check_fixture: bool,
    fixture_dir: Option<&Path>,
) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if check_fixture && n > POLY_MAX_N {
        return Err(CliError::Usage(format!(
            "the bundled polynomial table stops at n = {POLY_MAX_N}"
        )));
    }
    let p = walks_polynomial(n)?;
    let output = match format {
        OutputFormat::Plain => p.render(ascii) + "\n",
        OutputFormat::Csv => {
            let coeffs: Vec<String> = p
                .coefficients_descending()
                .iter()
                .map(BigInt::to_string)
                .collect();
            coeffs.join(",") + "\n"
        }
        OutputFormat::Json => p.to_json_value().to_string() + "\n",
    };
    if !check_fixture {
        return Ok(output);
    }
    let diffs = fixtures::diff_polynomials(&FixtureSet::new(fixture_dir), Some(n))?;
    fixture_failure(output, diffs)
}

pub fn stable(
    n: usize,
    method: SMethod,
    enum_cap: usize,
    format: OutputFormat,
) -> Result<String, CliError> {
    let rows = match method {
        SMethod::Recurrence => s_table_recurrence(n).display_rows(),
        SMethod::Enumerated => s_table_enumerated(n, enum_cap)?.display_rows(),
        SMethod::Closed => {
            let mut rows = vec![vec![Count::from(1u32)]];
            for m in 1..=n {
                rows.push(
                    (1..=m)
                        .map(|k| s_closed_form(m, k))
                        .collect::<Result<_, _>>()?,
                );
            }
            rows
        }
    };
    Ok(render_rows(&rows, format))
}
