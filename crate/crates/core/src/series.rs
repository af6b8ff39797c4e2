//! Truncated formal power series over exact rationals, and the closed-form
//! generating function of closed walks
//!
//! ```text
//! f_δ(t) = 2(δ−1) / (δ − 2 + δ·sqrt(1 − 4(δ−1)t²))
//! ```
//!
//! whose `t^{2n}` coefficient is `W_{2n}`. At δ = 1 the right-hand side is
//! `0/0`, so only δ ≥ 2 is accepted.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Count;

/// Series `sum_{d=0}^{D} a_d t^d`; coefficients past `D` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coefficients: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(value: BigRational, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coefficients[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(BigRational::one(), order)
    }

    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn from_coefficients(mut coefficients: Vec<BigRational>, order: usize) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        PowerSeries { coefficients }
    }

    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> &BigRational {
        &self.coefficients[degree]
    }

    pub fn scale(&self, factor: &BigRational) -> PowerSeries {
        PowerSeries {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse, solved degree by degree:
    /// `r_0 = 1/s_0`, `r_d = −(1/s_0) sum_{i=1}^{d} s_i r_{d−i}`.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let s0 = &self.coefficients[0];
        if s0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = s0.recip();
        let order = self.truncation_order();
        let mut r: Vec<BigRational> = Vec::with_capacity(order + 1);
        r.push(inv0.clone());
        for d in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=d {
                let si = &self.coefficients[i];
                if !si.is_zero() {
                    acc += si * &r[d - i];
                }
            }
            r.push(-(acc * &inv0));
        }
        Ok(PowerSeries { coefficients: r })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        PowerSeries {
            coefficients: (0..=order)
                .map(|d| &self.coefficients[d] + &rhs.coefficients[d])
                .collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Cauchy product truncated to the smaller of the two orders.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coefficients[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coefficients[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        write!(
            f,
            "[{}] + O(t^{})",
            terms.join(", "),
            self.coefficients.len()
        )
    }
}

/// `sqrt(1 − c·t²)` to degree `order`, from the binomial series
/// `sum_m binomial(1/2, m) (−c)^m t^{2m}`.
pub fn sqrt_series(c: &BigRational, order: usize) -> PowerSeries {
    let mut out = PowerSeries::zero(order);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let neg_c = -c.clone();
    // term = binomial(1/2, m) * (−c)^m
    let mut term = BigRational::one();
    out.coefficients[0] = term.clone();
    let mut m = 1usize;
    while 2 * m <= order {
        let factor = (&half - BigRational::from_integer(BigInt::from(m - 1)))
            / BigRational::from_integer(BigInt::from(m));
        term = term * factor * &neg_c;
        out.coefficients[2 * m] = term.clone();
        m += 1;
    }
    out
}

/// The pieces of the generating-function expansion, kept for inspection.
#[derive(Debug, Clone)]
pub struct GfExpansion {
    pub sqrt: PowerSeries,
    pub denominator: PowerSeries,
    pub reciprocal: PowerSeries,
    pub series: PowerSeries,
}

/// Expands `f_δ(t)` to degree `2·max_n + 1`.
pub fn gf_expansion(delta: u64, max_n: usize) -> Result<GfExpansion> {
    if delta < 2 {
        return Err(Error::Domain(format!(
            "generating function is undefined at delta = {delta}; need delta >= 2"
        )));
    }
    let order = 2 * max_n + 1;
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let sqrt = sqrt_series(&int(4 * (delta - 1)), order);
    let denominator = &PowerSeries::constant(int(delta - 2), order) + &sqrt.scale(&int(delta));
    let reciprocal = denominator.reciprocal()?;
    let series = reciprocal.scale(&int(2 * (delta - 1)));
    Ok(GfExpansion {
        sqrt,
        denominator,
        reciprocal,
        series,
    })
}

/// `[t^{2n}] f_δ(t)` for `n = 0..=max_n`.
///
/// Panics if an even coefficient is not an integer or an odd coefficient is
/// nonzero; either would mean the series arithmetic is wrong.
pub fn gf_walk_counts(delta: u64, max_n: usize) -> Result<Vec<Count>> {
    let expansion = gf_expansion(delta, max_n)?;
    let coeffs = expansion.series.coefficients();
    for (d, c) in coeffs.iter().enumerate().skip(1).step_by(2) {
        assert!(c.is_zero(), "odd coefficient t^{d} is {c}, expected 0");
    }
    Ok((0..=max_n)
        .map(|n| {
            let c = &coeffs[2 * n];
            assert!(
                c.is_integer(),
                "coefficient of t^{} is {c}, not an integer",
                2 * n
            );
            c.to_integer()
                .to_biguint()
                .unwrap_or_else(|| panic!("coefficient of t^{} is negative: {c}", 2 * n))
        })
        .collect())
}
