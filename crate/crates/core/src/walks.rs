//! Closed-walk counts `W_{2n}` on the infinite δ-regular tree.
//!
//! A closed walk of length `2n` from the root has the shape of a Dyck path.
//! A step away from the root has δ choices when it leaves the root itself and
//! δ−1 choices anywhere else; a step toward the root is forced. A shape with
//! `k` components therefore carries `δ^k (δ−1)^{n−k}` walks, and there are
//! `C(n−1, n−k)` shapes with `k` components. Summing gives
//!
//! ```text
//! W_{2n} = sum_{k=1}^{n} δ^k (δ−1)^{n−k} C(n−1, n−k)
//!        = sum_{l=0}^{n−1} (−1)^l B(n−1, l) δ^{n−l}
//! ```
//!
//! δ = 1 is accepted as a formal specialization (no infinite 1-regular tree
//! exists); every formula then yields 1, the single there-and-back walk along
//! one edge.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{pow, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rlseq::s_table_recurrence;
use crate::triangles::{borel_table, catalan_entry, catalan_number};
use crate::Count;

fn check_domain(n: usize, delta: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(
            "walk semi-length n must be at least 1".into(),
        ));
    }
    if delta == 0 {
        return Err(Error::Domain("degree delta must be at least 1".into()));
    }
    Ok(())
}

/// `δ^k (δ−1)^{n−k}`, the number of walks sharing one `k`-component shape.
fn shape_weight(n: usize, k: usize, delta: u64) -> Count {
    pow(Count::from(delta), k) * pow(Count::from(delta - 1), n - k)
}

/// `W_{2n}` from the component recurrence: weights times
/// `sum_{j >= k-1} S(n−1, j)`.
pub fn walks_via_components(n: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    let s = s_table_recurrence(n - 1);
    (1..=n).try_fold(Count::zero(), |acc, k| {
        Ok(acc + shape_weight(n, k, delta) * s.cumulative(n - 1, k)?)
    })
}

/// `W_{2n}` from Catalan's triangle.
pub fn walks_via_catalan(n: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    (1..=n).try_fold(Count::zero(), |acc, k| {
        Ok(acc + shape_weight(n, k, delta) * catalan_entry(n - 1, n - k)?)
    })
}

/// `W_{2n}` by evaluating the Borel-triangle polynomial at δ.
pub fn walks_via_borel(n: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    let value = walks_polynomial(n)?.evaluate(&BigInt::from(delta));
    value
        .to_biguint()
        .ok_or_else(|| Error::Domain(format!("negative walk count {value}")))
}

/// Number of closed walks of length `2n` that return to the root exactly `k`
/// times.
pub fn walks_with_k_returns(n: usize, k: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    if k == 0 || k > n {
        return Err(Error::OutOfTriangle { n, k });
    }
    Ok(shape_weight(n, k, delta) * catalan_entry(n - 1, n - k)?)
}

/// Walks that meet the root only at their two endpoints:
/// `δ (δ−1)^{n−1} C_{n−1}`.
pub fn first_return_count(n: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    let catalan = catalan_number(n - 1);
    assert_eq!(catalan, catalan_entry(n - 1, n - 1)?);
    Ok(shape_weight(n, 1, delta) * catalan)
}

/// Walks that return to the root exactly twice: `δ² (δ−1)^{n−2} C_{n−1}`.
///
/// The `k = 2` term of the Catalan-triangle sum uses `C(n−1, n−2)` in place
/// of `C_{n−1}`; the two agree through the diagonal identity
/// `C(m, m−1) = C(m, m)`, which is checked here.
pub fn second_return_count(n: usize, delta: u64) -> Result<Count> {
    check_domain(n, delta)?;
    if n < 2 {
        return Err(Error::Domain("a walk with two returns needs n >= 2".into()));
    }
    let catalan = catalan_number(n - 1);
    assert_eq!(
        catalan,
        catalan_entry(n - 1, n - 2)?,
        "Catalan diagonal identity failed at row {}",
        n - 1
    );
    Ok(shape_weight(n, 2, delta) * catalan)
}

/// `W_{2n}` as a polynomial in δ with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolynomial {
    /// Index is the exponent of δ.
    coefficients: Vec<BigInt>,
}

impl DeltaPolynomial {
    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(BigInt::zero());
        }
        DeltaPolynomial { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, exponent: usize) -> BigInt {
        self.coefficients
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficients of `δ^degree` down to `δ^0`.
    pub fn coefficients_descending(&self) -> Vec<BigInt> {
        self.coefficients.iter().rev().cloned().collect()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, delta: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * delta + c)
    }

    /// Human-readable form; `ascii` swaps `δ` for `d`, `−` for `-` and
    /// superscripts for `^`.
    pub fn render(&self, ascii: bool) -> String {
        let var = if ascii { "d" } else { "δ" };
        let minus = if ascii { "-" } else { "−" };
        let mut out = String::new();
        for (exponent, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.sign() == Sign::Minus;
            if out.is_empty() {
                if negative {
                    out.push_str(minus);
                }
            } else {
                out.push_str(if negative { " " } else { " + " });
                if negative {
                    out.push_str(minus);
                    out.push(' ');
                }
            }
            let magnitude = c.abs();
            if !magnitude.is_one() || exponent == 0 {
                out.push_str(&magnitude.to_string());
            }
            if exponent >= 1 {
                out.push_str(var);
            }
            if exponent >= 2 {
                if ascii {
                    out.push('^');
                    out.push_str(&exponent.to_string());
                } else {
                    out.push_str(&superscript(exponent));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `{"degree":n,"coefficients":[...]}` with coefficients from `δ^n` down
    /// to `δ^0` as decimal strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree(),
            "coefficients": self
                .coefficients_descending()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for DeltaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn superscript(mut e: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut digits = Vec::new();
    while e > 0 {
        digits.push(DIGITS[e % 10]);
        e /= 10;
    }
    digits.iter().rev().collect()
}

/// `W_{2n}` as `sum_{l=0}^{n−1} (−1)^l B(n−1, l) δ^{n−l}`.
pub fn walks_polynomial(n: usize) -> Result<DeltaPolynomial> {
    if n == 0 {
        return Err(Error::Domain(
            "walk semi-length n must be at least 1".into(),
        ));
    }
    let borel = borel_table(n - 1);
    let row = &borel.rows()[n - 1];
    let mut coefficients = vec![BigInt::zero(); n + 1];
    for (l, b) in row.iter().enumerate() {
        let magnitude = BigInt::from(b.clone());
        coefficients[n - l] = if l % 2 == 0 { magnitude } else { -magnitude };
    }
    Ok(DeltaPolynomial::from_coefficients(coefficients))
}
