//! Bessel functions J_nu, I_nu and the positive zeros of J_nu.
//!
//! Ascending series below the cancellation threshold, Hankel large-argument
//! expansion beyond it. Zeros come from McMahon's expansion refined by
//! Newton steps on J_nu.

use crate::error::{Error, Result};
use crate::gamma::recip_gamma_ln;

// Beyond ~14 the alternating series loses more digits than the optimally
// truncated Hankel expansion; below it the expansion is not yet at 1e-10.
const SERIES_CUTOFF: f64 = 14.0;

fn bessel_j_series(nu: f64, t: f64) -> f64 {
    let half = 0.5 * t;
    let x2 = -half * half;
    // term_k = (-1)^k (t/2)^{nu+2k} / (k! Gamma(nu+k+1))
    let (lg0, s0) = recip_gamma_ln(nu + 1.0);
    let mut term = s0 * (nu * half.ln() + lg0).exp();
    if t == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term *= x2 / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Hankel asymptotic expansion, truncated at the smallest term.
fn bessel_j_asymptotic(nu: f64, t: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let w = t - 0.5 * nu * std::f64::consts::PI - 0.25 * std::f64::consts::PI;
    let z8 = 8.0 * t;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..20 {
        let kf = 2.0 * k as f64;
        // advance to the (2k+1)-th factor for Q
        let f1 = (mu - (2.0 * kf + 1.0).powi(2)) / ((kf + 1.0) * z8);
        let tq = term * f1;
        if tq.abs() > prev {
            break;
        }
        if k % 2 == 0 {
            q += tq;
        } else {
            q -= tq;
        }
        let f2 = (mu - (2.0 * kf + 3.0).powi(2)) / ((kf + 2.0) * z8);
        let tp = tq * f2;
        term = tp;
        prev = tp.abs();
        if k % 2 == 0 {
            p -= tp;
        } else {
            p += tp;
        }
        if tp.abs() < 1e-18 {
            break;
        }
    }
    (2.0 / (std::f64::consts::PI * t)).sqrt() * (p * w.cos() - q * w.sin())
}

/// Bessel function of the first kind, nu >= 0, t >= 0.
pub fn bessel_j(nu: f64, t: f64) -> Result<f64> {
    if nu < 0.0 || t < 0.0 || !nu.is_finite() || !t.is_finite() {
        return Err(Error::Domain(format!("bessel_j needs nu >= 0, t >= 0 (got {nu}, {t})")));
    }
    if t < SERIES_CUTOFF.max(nu) {
        Ok(bessel_j_series(nu, t))
    } else {
        Ok(bessel_j_asymptotic(nu, t))
    }
}

/// Modified Bessel function of the first kind (positive series, no
/// cancellation for t >= 0).
pub fn bessel_i(nu: f64, t: f64) -> Result<f64> {
    if nu < 0.0 || t < 0.0 || !nu.is_finite() || !t.is_finite() {
        return Err(Error::Domain(format!("bessel_i needs nu >= 0, t >= 0 (got {nu}, {t})")));
    }
    if t == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * t;
    let x2 = half * half;
    let (lg0, s0) = recip_gamma_ln(nu + 1.0);
    let mut term = s0 * (nu * half.ln() + lg0).exp();
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term *= x2 / (kf * (nu + kf));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    Ok(sum)
}

/// d/dt J_nu(t) = (nu/t) J_nu(t) - J_{nu+1}(t), valid for all nu >= 0.
fn bessel_j_prime(nu: f64, t: f64) -> Result<f64> {
    Ok(nu / t * bessel_j(nu, t)? - bessel_j(nu + 1.0, t)?)
}

/// First `count` positive zeros of J_nu, each to absolute accuracy ~1e-10.
pub fn bessel_j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    if nu < 0.0 || count == 0 {
        return Err(Error::Domain("bessel_j_zeros needs nu >= 0, count >= 1".into()));
    }
    let mu = 4.0 * nu * nu;
    let mut zeros = Vec::with_capacity(count);
    for n in 1..=count {
        let mut x = if n as f64 >= 1.0 + 0.6 * nu {
            // McMahon: beta - (mu-1)/(8 beta) - 4(mu-1)(7mu-31)/(3 (8 beta)^3)
            let beta = (n as f64 + 0.5 * nu - 0.25) * std::f64::consts::PI;
            let b8 = 8.0 * beta;
            beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        } else {
            // low zeros of higher orders: bracket by marching from the
            // turning point
            let mut lo = nu + 0.5;
            let step = 0.5 * (1.0 + nu.sqrt());
            let mut found = 0usize;
            let mut prev = bessel_j(nu, lo)?;
            loop {
                let hi = lo + step;
                let cur = bessel_j(nu, hi)?;
                if prev.signum() != cur.signum() {
                    found += 1;
                    if found == n {
                        break;
                    }
                }
                prev = cur;
                lo = hi;
                if lo > nu + 1000.0 {
                    return Err(Error::QuadratureFailure("bessel zero bracket not found".into()));
                }
            }
            lo + 0.5 * step
        };
        // Newton refinement
        for _ in 0..40 {
            let f = bessel_j(nu, x)?;
            let fp = bessel_j_prime(nu, x)?;
            let dx = f / fp;
            x -= dx;
            if dx.abs() < 1e-13 * x.max(1.0) {
                break;
            }
        }
        if let Some(&last) = zeros.last() {
            if x <= last {
                return Err(Error::QuadratureFailure("bessel zeros out of order".into()));
            }
        }
        zeros.push(x);
    }
    Ok(zeros)
}

/// Rayleigh sum: sum_n j_{nu,n}^{-2} = 1/(4(nu+1)). Used for tail
/// corrections of Hadamard products and truncated zero series.
pub fn rayleigh_sum_2(nu: f64) -> f64 {
    0.25 / (nu + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn half_order_is_elementary() {
        // J_{1/2}(t) = sqrt(2/(pi t)) sin t
        for &t in &[0.3, 1.0, PI, 7.7, 25.0, 49.0] {
            let oracle = (2.0 / (PI * t)).sqrt() * t.sin();
            assert_relative_eq!(bessel_j(0.5, t).unwrap(), oracle, epsilon = 1e-10, max_relative = 1e-10);
        }
        // J_{1/2}(pi) = 0
        assert!(bessel_j(0.5, PI).unwrap().abs() < 1e-12);
    }

    #[test]
    fn at_zero_argument() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(0.7, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_i(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_i(2.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn j1_at_2_series_oracle() {
        // J_1(2) = sum (-1)^n/(n!(n+1)!), 25-term direct sum
        let mut oracle = 0.0;
        let mut num = 1.0f64;
        let mut f1 = 1.0f64;
        let mut f2 = 1.0f64;
        for n in 0..25 {
            if n > 0 {
                num = -num;
                f1 *= n as f64;
                f2 *= (n + 1) as f64;
            }
            oracle += num / (f1 * f2);
        }
        assert_relative_eq!(bessel_j(1.0, 2.0).unwrap(), oracle, epsilon = 1e-12);
        assert_relative_eq!(oracle, 0.576_724_807_8, epsilon = 1e-9);
    }

    #[test]
    fn series_asymptotic_match_at_cutoff() {
        for &nu in &[0.0, 0.5, 1.0, 1.7] {
            let a = bessel_j_series(nu, 13.9);
            let b = bessel_j_asymptotic(nu, 13.9);
            assert_relative_eq!(a, b, epsilon = 1e-12, max_relative = 5e-11);
        }
    }

    #[test]
    fn i_bessel_elementary_half_order() {
        // I_{1/2}(t) = sqrt(2/(pi t)) sinh t
        for &t in &[0.5, 2.0, 10.0, 40.0] {
            let oracle = (2.0 / (PI * t)).sqrt() * t.sinh();
            assert_relative_eq!(bessel_i(0.5, t).unwrap(), oracle, max_relative = 1e-12);
        }
    }

    #[test]
    fn zeros_of_half_order_are_multiples_of_pi() {
        let z = bessel_j_zeros(0.5, 3).unwrap();
        assert_relative_eq!(z[0], PI, epsilon = 1e-10);
        assert_relative_eq!(z[1], 2.0 * PI, epsilon = 1e-10);
        assert_relative_eq!(z[2], 3.0 * PI, epsilon = 1e-10);
    }

    #[test]
    fn zeros_interlace() {
        // j_{nu,n} < j_{nu+1,n} < j_{nu,n+1} for nu = 0, n <= 5
        let z0 = bessel_j_zeros(0.0, 6).unwrap();
        let z1 = bessel_j_zeros(1.0, 6).unwrap();
        for n in 0..5 {
            assert!(z0[n] < z1[n] && z1[n] < z0[n + 1], "interlacing fails at n = {n}");
        }
    }

    #[test]
    fn zeros_are_zeros() {
        for &nu in &[0.0, 0.5, 1.0, 2.3] {
            for &z in bessel_j_zeros(nu, 8).unwrap().iter() {
                assert!(bessel_j(nu, z).unwrap().abs() < 1e-9, "J_{nu}({z}) not zero");
            }
        }
    }

    #[test]
    fn sign_change_count_matches_zero_index() {
        // number of sign changes of J_nu on (0, j_{nu,n} + eps) equals n
        let nu = 0.7;
        let zeros = bessel_j_zeros(nu, 4).unwrap();
        let upper = zeros[3] + 0.1;
        let mut count = 0;
        let mut prev = bessel_j(nu, 1e-3).unwrap();
        let steps = 4000;
        for i in 1..=steps {
            let t = 1e-3 + (upper - 1e-3) * i as f64 / steps as f64;
            let cur = bessel_j(nu, t).unwrap();
            if prev.signum() != cur.signum() {
                count += 1;
            }
            prev = cur;
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn rayleigh_tail_is_consistent() {
        // partial sum of j^{-2} plus integral-tail estimate vs 1/(4(nu+1))
        let nu = 1.0;
        let zeros = bessel_j_zeros(nu, 200).unwrap();
        let partial: f64 = zeros.iter().map(|j| j.powi(-2)).sum();
        let tail = rayleigh_sum_2(nu) - partial;
        // tail ~ 1/(pi^2 (N + nu/2 + 1/4))
        let n = 200.0;
        let est = 1.0 / (PI * PI * (n + nu / 2.0 + 0.25));
        assert_relative_eq!(tail, est, max_relative = 2e-3);
    }

    #[test]
    fn rejects_negative_arguments() {
        assert!(bessel_j(1.0, -1.0).is_err());
        assert!(bessel_j(-0.5, 1.0).is_err());
        assert!(bessel_j_zeros(1.0, 0).is_err());
    }
}
