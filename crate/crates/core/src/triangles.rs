//! Catalan's triangle `C(n, k)` and Borel's triangle `B(n, k)`.
//!
//! `C(n, k)` counts lattice paths from `(0, 0)` to `(n, k)` that stay on or
//! below the diagonal (OEIS A009766). `B(n, k)` is the binomial transform of
//! row `n` of Catalan's triangle (OEIS A234950):
//!
//! ```text
//! B(n, k) = sum_{s=k}^{n} binomial(s, k) * C(n, s)
//! ```
//!
//! Barry's closed form for `B(n, k)` is commonly printed with a leading factor
//! `1/n`. That factor disagrees with the tabulated values (it gives
//! `B(1, 0) = 4`) and is undefined at `n = 0`; the correct factor is
//! `1/(n + 1)`, which is what [`borel_entry_explicit`] uses.

use std::fmt::Display;

use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Catalan,
    Borel,
}

/// Lower-triangular table of counts; row `n` holds entries for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<Count>>,
}

impl TriangleTable {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }

    /// Largest row index held by the table.
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<&Count> {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .ok_or(Error::OutOfTriangle { n, k })
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.rows)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

/// One line per row, entries separated by commas, trailing newline.
pub fn rows_to_csv<T: Display>(rows: &[Vec<T>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Array of arrays with every integer rendered as a decimal string.
pub fn rows_to_json<T: Display>(rows: &[Vec<T>]) -> String {
    let value = serde_json::Value::Array(
        rows.iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|x| serde_json::Value::String(x.to_string()))
                        .collect(),
                )
            })
            .collect(),
    );
    value.to_string()
}

fn check_index(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::OutOfTriangle { n, k })
    } else {
        Ok(())
    }
}

fn binom(n: usize, k: usize) -> Count {
    if k > n {
        Count::zero()
    } else {
        binomial(Count::from(n), Count::from(k))
    }
}

/// Divides `numerator` by `denominator`, panicking if the quotient is not exact.
///
/// Every caller divides a quantity that is an integer by construction, so a
/// remainder means the arithmetic upstream is wrong.
fn exact_div(numerator: Count, denominator: Count) -> Count {
    let (q, r) = numerator.div_rem(&denominator);
    assert!(
        r.is_zero(),
        "inexact division: remainder {r} when dividing by {denominator}"
    );
    q
}

/// The `n`-th Catalan number `binomial(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> Count {
    exact_div(binom(2 * n, n), Count::from(n + 1))
}

/// `C(n, k) = (n - k + 1) / (n + 1) * binomial(n + k, n)`.
pub fn catalan_entry(n: usize, k: usize) -> Result<Count> {
    check_index(n, k)?;
    let numerator = binom(n + k, n) * Count::from(n - k + 1);
    Ok(exact_div(numerator, Count::from(n + 1)))
}

/// Rows `0..=max_row` of Catalan's triangle, built with the ballot recurrence
/// `C(n, k) = C(n - 1, k) + C(n, k - 1)` and `C(n, 0) = 1`.
pub fn catalan_table(max_row: usize) -> TriangleTable {
    let mut rows: Vec<Vec<Count>> = Vec::with_capacity(max_row + 1);
    for n in 0..=max_row {
        let mut row = Vec::with_capacity(n + 1);
        row.push(Count::one());
        for k in 1..=n {
            // C(n-1, n) is outside the triangle and contributes nothing.
            let above = if k < n {
                rows[n - 1][k].clone()
            } else {
                Count::zero()
            };
            let left = &row[k - 1];
            row.push(above + left);
        }
        rows.push(row);
    }
    TriangleTable {
        kind: TriangleKind::Catalan,
        rows,
    }
}

/// `B(n, k) = binomial(2n + 2, n - k) * binomial(n + k, n) / (n + 1)`.
pub fn borel_entry_explicit(n: usize, k: usize) -> Result<Count> {
    check_index(n, k)?;
    let numerator = binom(2 * n + 2, n - k) * binom(n + k, n);
    Ok(exact_div(numerator, Count::from(n + 1)))
}

/// `B(n, k) = sum_{s=k}^{n} binomial(s, k) * C(n, s)`.
pub fn borel_entry_transform(n: usize, k: usize) -> Result<Count> {
    check_index(n, k)?;
    (k..=n).try_fold(Count::zero(), |acc, s| {
        Ok(acc + binom(s, k) * catalan_entry(n, s)?)
    })
}

/// Rows `0..=max_row` of Borel's triangle via the binomial transform of a
/// Catalan table.
pub fn borel_table(max_row: usize) -> TriangleTable {
    let catalan = catalan_table(max_row);
    let rows = catalan
        .rows
        .iter()
        .enumerate()
        .map(|(n, crow)| {
            (0..=n)
                .map(|k| (k..=n).fold(Count::zero(), |acc, s| acc + binom(s, k) * &crow[s]))
                .collect()
        })
        .collect();
    TriangleTable {
        kind: TriangleKind::Borel,
        rows,
    }
}

/// Convenience dispatch on [`TriangleKind`].
pub fn table(kind: TriangleKind, max_row: usize) -> TriangleTable {
    match kind {
        TriangleKind::Catalan => catalan_table(max_row),
        TriangleKind::Borel => borel_table(max_row),
    }
}
