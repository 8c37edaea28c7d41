//! Stirling series coefficients c_n of (e/x)^x sqrt(x/(2 pi)) Gamma(x),
//! in exact rational arithmetic: c = exp(sum_k B_{2k}/(2k(2k-1)) y^{2k-1})
//! as a series in y = 1/x.

use crate::error::{Error, Result};
use crate::series::RationalSeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn binom_big(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from(binom_big(m + 1, j)) * bj;
        }
        b.push(-acc / BigRational::from(BigInt::from(m as i64 + 1)));
    }
    b
}

/// Exact rationals c_0..c_n of the Stirling series.
pub fn stirling_series(n: usize) -> Result<Vec<BigRational>> {
    if n > 30 {
        return Err(Error::InvalidParameter(
            "stirling_series supports n <= 30 (exact arithmetic budget)".into(),
        ));
    }
    // S(y) = sum_{k>=1} B_{2k} / (2k (2k-1)) y^{2k-1}, truncated at order n
    let bern = bernoulli(2 * n + 2);
    let mut s = vec![BigRational::zero(); n + 1];
    let mut k = 1usize;
    while 2 * k - 1 <= n {
        let denom = q((2 * k) as i64 * (2 * k - 1) as i64, 1);
        s[2 * k - 1] = bern[2 * k].clone() / denom;
        k += 1;
    }
    let series = RationalSeries::new(s);
    Ok(series.exp0()?.coeffs().to_vec())
}

/// f64 view of the Stirling coefficients.
pub fn stirling_series_f64(n: usize) -> Result<Vec<f64>> {
    Ok(stirling_series(n)?
        .iter()
        .map(|r| rational_to_f64(r))
        .collect())
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // numerator/denominator may exceed i64; go through string for exactness
    // only when small, else use the BigInt-to-f64 conversion.
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bernoulli_known_values() {
        let b = bernoulli(8);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], q(0, 1));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
    }

    #[test]
    fn first_four_coefficients() {
        let c = stirling_series(3).unwrap();
        assert_eq!(c[0], q(1, 1));
        assert_eq!(c[1], q(1, 12));
        assert_eq!(c[2], q(1, 288));
        assert_eq!(c[3], q(-139, 51840));
    }

    #[test]
    fn c4_from_exact_taylor_arithmetic() {
        let c = stirling_series(4).unwrap();
        assert_eq!(c[4], q(-571, 2488320));
    }

    #[test]
    fn series_actually_approximates_gamma() {
        // (e/x)^x sqrt(x/2pi) Gamma(x) vs partial sums at x = 40
        let x: f64 = 40.0;
        let lhs = ((1.0f64.exp() / x).ln() * x + 0.5 * (x / (2.0 * std::f64::consts::PI)).ln()
            + crate::gamma::ln_gamma(x))
        .exp();
        let c = stirling_series_f64(6).unwrap();
        let mut acc = 0.0;
        for (k, ck) in c.iter().enumerate() {
            acc += ck * x.powi(-(k as i32));
        }
        assert_relative_eq!(lhs, acc, epsilon = 1e-11);
    }

    #[test]
    fn order_limit_enforced() {
        assert!(stirling_series(31).is_err());
    }
}
