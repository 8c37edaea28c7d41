//! Left-edge asymptotic coefficients of the extreme densities: the density
//! of Y_alpha behaves like sum_n a_n(alpha) x^{n+1/2} at the left end of
//! its support, with
//!
//!   a_n(alpha) = (2/alpha)^{n+1/2} (-1)^n
//!                / (pi |alpha-1|^{(n+3/2)/alpha} (2n+1)!)
//!                * d^{2n}/dv^{2n} [ (1-v)^{-2} 2F1(alpha+1, 1; 3; v)^{-n-1/2} ]_0
//!
//! and, at alpha = 1, a_n(1) = (-1)^n 2^{2n+1/2} n! (c_0+...+c_n)/(pi (2n+1)!)
//! in terms of the Stirling-series coefficients c_k. Every derivative is
//! read off a truncated power series: coefficient extraction, never
//! numerical differentiation.

use crate::dist::{pdf, pdf_t};
use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::params::{b_alpha, extreme_edge, StableParams};
use crate::scan::{ScanReport, Verdict};
use crate::series::{hyp2f1_coeffs, series_pow, Series};
use crate::stirling::{rational_to_f64, stirling_series};
use std::f64::consts::PI;

/// Edge expansion f_{Y_alpha}(x) ~ sum a_n x^{n+1/2}.
#[derive(Debug, Clone)]
pub struct EdgeExpansion {
    pub alpha: f64,
    pub coeffs: Vec<f64>,
}

fn ln_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

/// a_0..a_N for alpha in (0,1) u (1,2]. The fractional power falls on the
/// hypergeometric factor only; (1-v)^{-2} multiplies outside:
///   (1-v)^{-2} [2F1(alpha+1, 1; 3; v)]^{-n-1/2}.
pub fn edge_coeffs(alpha: f64, n_max: usize) -> Result<EdgeExpansion> {
    if !(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0 {
        return Err(Error::InvalidParameter(format!(
            "edge_coeffs needs alpha in (0,1) or (1,2], got {alpha}"
        )));
    }
    if n_max > 20 {
        return Err(Error::InvalidParameter("edge_coeffs supports N <= 20".into()));
    }
    let order = 2 * n_max + 4;
    let hyp = hyp2f1_coeffs(alpha + 1.0, 1.0, 3.0, order)?;
    let geom2 = Series::new((0..=order).map(|k| (k + 1) as f64).collect());
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let powed = geom2.mul(&series_pow(&hyp, -(n as f64) - 0.5)?);
        // (2n)! * [v^{2n}] then the prefactor
        let ln_pref = ((n as f64 + 0.5) * (2.0 / alpha).ln())
            - ((n as f64 + 1.5) / alpha) * (alpha - 1.0).abs().ln()
            - PI.ln()
            + ln_factorial(2 * n as u64)
            - ln_factorial(2 * n as u64 + 1);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(sign * ln_pref.exp() * powed.coeff(2 * n));
    }
    Ok(EdgeExpansion { alpha, coeffs })
}

/// a_0..a_N at alpha = 1, through the exact Stirling series.
pub fn edge_coeffs_alpha1(n_max: usize) -> Result<EdgeExpansion> {
    if n_max > 20 {
        return Err(Error::InvalidParameter("edge_coeffs_alpha1 supports N <= 20".into()));
    }
    let c = stirling_series(n_max)?;
    let mut partial = 0.0;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for (n, cn) in c.iter().enumerate() {
        partial += rational_to_f64(cn);
        let ln_mag = (2.0 * n as f64 + 0.5) * 2.0f64.ln() + ln_factorial(n as u64) - PI.ln()
            - ln_factorial(2 * n as u64 + 1);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(sign * ln_mag.exp() * partial);
    }
    Ok(EdgeExpansion { alpha: 1.0, coeffs })
}

/// Closed forms for special alpha, used as oracles: a_n(2) and a_n(1/2).
pub fn edge_coeff_closed_two(n: usize) -> f64 {
    // -C(2n,n) / (pi (2n-1) 16^n)
    let ln_binom = ln_factorial(2 * n as u64) - 2.0 * ln_factorial(n as u64);
    -(ln_binom - (n as f64) * 16.0f64.ln()).exp() / (PI * (2.0 * n as f64 - 1.0))
}

pub fn edge_coeff_closed_half(n: usize) -> f64 {
    // (-1)^n (n+1) 4^{n+2} / pi
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * (n as f64 + 1.0) * 4.0f64.powi(n as i32 + 2) / PI
}

/// Closed form of a_1(alpha):
/// -sqrt(2/alpha) (2 alpha^2 - 23 alpha + 47)/(36 pi alpha |alpha-1|^{5/(2 alpha)}).
pub fn edge_coeff_closed_a1(alpha: f64) -> f64 {
    -(2.0 / alpha).sqrt() * (2.0 * alpha * alpha - 23.0 * alpha + 47.0)
        / (36.0 * PI * alpha * (alpha - 1.0).abs().powf(2.5 / alpha))
}

/// b_n of the Stirling-coefficient identity c_n = b_n - b_{n-1}:
///   b_n = (2n)!/(2^n n!) [v^{2n}] ( (1-v)^{-2} h(v)^{-n-1/2} ),
/// where h(v) = 2(-v - log(1-v))/v^2 = sum_k 2 v^k/(k+2). Exact: the
/// half-integer power of a rational series with unit constant term has
/// rational coefficients.
pub fn stirling_b_exact(n: usize, order: usize) -> Result<num_rational::BigRational> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let h = crate::series::RationalSeries::new((0..=order).map(|k| q(2, k as i64 + 2)).collect());
    let geom2 =
        crate::series::RationalSeries::new((0..=order).map(|k| q(k as i64 + 1, 1)).collect());
    let p = q(-(2 * n as i64) - 1, 2);
    let prod = geom2.mul(&h.pow_ratio(&p)?);
    // (2n)!/(2^n n!)
    let mut pref = BigRational::from(BigInt::from(1));
    for i in (n + 1)..=(2 * n) {
        pref *= BigRational::from(BigInt::from(i as i64));
    }
    pref /= BigRational::from(BigInt::from(2).pow(n as u32));
    Ok(pref * prod.coeff(2 * n))
}

pub fn stirling_b(n: usize, order: usize) -> Result<f64> {
    Ok(rational_to_f64(&stirling_b_exact(n, order)?))
}

/// Residuals of the conjectured identity c_n = b_n - b_{n-1}, n = 1..N.
pub fn stirling_conjecture_check(n_max: usize) -> Result<ScanReport> {
    if n_max > 10 {
        return Err(Error::InvalidParameter("stirling_conjecture_check supports N <= 10".into()));
    }
    let c = stirling_series(n_max)?;
    let order = 2 * n_max + 6;
    let mut grid = Vec::new();
    let mut residuals = Vec::new();
    let mut violations = Vec::new();
    let mut prev_b = stirling_b_exact(0, order)?;
    for n in 1..=n_max {
        let b = stirling_b_exact(n, order)?;
        let resid = rational_to_f64(&(b.clone() - prev_b - c[n].clone()));
        grid.push(n as f64);
        residuals.push(resid);
        if resid.abs() > 1e-9 {
            violations.push((n - 1, resid.abs()));
        }
        prev_b = b;
    }
    let extremes = residuals.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    let verdict = if violations.is_empty() { Verdict::Monotone } else { Verdict::Oscillating };
    Ok(ScanReport { grid, values: residuals, violations, verdict, extremes })
}

/// Density of Y_alpha at offset x from the left edge of its support:
/// X_alpha - b_alpha for alpha < 1, edge - X_{alpha,1/alpha} for alpha > 1,
/// and 1 - T at alpha = 1.
pub fn pdf_y(alpha: f64, x: f64) -> Result<f64> {
    if x < 0.0 {
        return Ok(0.0);
    }
    if alpha == 1.0 {
        return Ok(pdf_t(1.0 - x).value);
    }
    if alpha < 1.0 {
        let p = StableParams::new(alpha, 1.0)?;
        pdf(p, x + b_alpha(alpha))
    } else {
        let p = StableParams::new(alpha, 1.0 / alpha)?;
        pdf(p, extreme_edge(alpha) - x)
    }
}

/// Compare the edge expansion against the density of Y_alpha on a grid of
/// small offsets: values are residual/(x^{N+3/2}), which stays bounded when
/// the expansion order is honest.
pub fn edge_density_compare(alpha: f64, n_max: usize, x_grid: &[f64]) -> Result<ScanReport> {
    let exp = if alpha == 1.0 { edge_coeffs_alpha1(n_max)? } else { edge_coeffs(alpha, n_max)? };
    let mut values = Vec::with_capacity(x_grid.len());
    let mut violations = Vec::new();
    for (i, &x) in x_grid.iter().enumerate() {
        if x <= 0.0 {
            return Err(Error::Domain("edge_density_compare needs positive offsets".into()));
        }
        let mut approx = 0.0;
        for (n, a) in exp.coeffs.iter().enumerate() {
            approx += a * x.powf(n as f64 + 0.5);
        }
        let f = pdf_y(alpha, x)?;
        let scaled = (f - approx) / x.powf(n_max as f64 + 1.5);
        values.push(scaled);
        if !scaled.is_finite() {
            violations.push((i, f64::INFINITY));
        }
    }
    let extremes = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    let verdict = if violations.is_empty() { Verdict::Monotone } else { Verdict::Inconclusive };
    Ok(ScanReport { grid: x_grid.to_vec(), values, violations, verdict, extremes })
}
