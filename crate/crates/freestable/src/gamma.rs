//! Log-gamma plumbing shared by the transform and identity layers.

use num_complex::Complex64;

/// Natural log of |Gamma(x)|.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Log of |Gamma(x)| together with the sign of Gamma(x).
pub fn ln_gamma_sign(x: f64) -> (f64, f64) {
    let (lg, s) = libm::lgamma_r(x);
    (lg, s as f64)
}

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// 1/Gamma(x) as (ln of magnitude, sign). Returns sign 0 at the poles,
/// where the reciprocal vanishes.
pub fn recip_gamma_ln(x: f64) -> (f64, f64) {
    if x <= 0.0 && x == x.floor() {
        return (f64::NEG_INFINITY, 0.0);
    }
    let (lg, s) = ln_gamma_sign(x);
    (-lg, s)
}

/// Generalized binomial coefficient C(z, n) for real z and integer n >= 0.
pub fn binomial_real(z: f64, n: u32) -> f64 {
    let mut out = 1.0;
    for k in 0..n {
        out *= (z - k as f64) / (k as f64 + 1.0);
    }
    out
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_C: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Principal branch of log Gamma(z) via the Lanczos approximation,
/// with the reflection formula for Re z < 1/2.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        let pi = std::f64::consts::PI;
        let log_sin = (Complex64::new(pi, 0.0) * z).sin().ln();
        return Complex64::new(pi.ln(), 0.0) - log_sin - ln_gamma_complex(Complex64::new(1.0, 0.0) - z);
    }
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    half_log_2pi + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// Hurwitz zeta(s, a) for s > 1, a > 0, by Euler-Maclaurin summation.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    debug_assert!(s > 1.0 && a > 0.0);
    // Shift a upward so the asymptotic part converges quickly.
    let n = if a < 12.0 { (12.0 - a).ceil() as usize } else { 0 };
    let mut head = 0.0;
    for k in 0..n {
        head += (a + k as f64).powf(-s);
    }
    let b = a + n as f64;
    // zeta(s, b) ~ b^{1-s}/(s-1) + b^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} b^{-s-2k+1}
    let mut tail = b.powf(1.0 - s) / (s - 1.0) + 0.5 * b.powf(-s);
    // B_{2k}/(2k)! for k = 1..=6
    let bern: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -8.2206352466243297e-10,
    ];
    let mut poch = s; // (s)_{2k-1} built incrementally
    let mut bp = b.powf(-s - 1.0);
    for (k, &bk) in bern.iter().enumerate() {
        tail += bk * poch * bp;
        let m = 2.0 * (k as f64 + 1.0);
        poch *= (s + m - 1.0) * (s + m);
        bp /= b * b;
    }
    head + tail
}

/// Exponential integral E1(x) for x > 0.
pub fn expint_e1(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x <= 1.0 {
        // E1(x) = -gamma - ln x + sum (-1)^{k+1} x^k/(k k!)
        const EULER: f64 = 0.577_215_664_901_532_9;
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..60 {
            term *= -x / k as f64;
            let add = -term / k as f64;
            sum += add;
            if add.abs() < 1e-18 * (1.0 + sum.abs()) {
                break;
            }
        }
        -EULER - x.ln() + sum
    } else {
        // Modified Lentz on the continued fraction
        // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
        let mut b = x + 1.0;
        let mut c = 1e300;
        let mut d = 1.0 / b;
        let mut h = d;
        for k in 1..200 {
            let aa = -(k as f64) * (k as f64);
            b += 2.0;
            d = 1.0 / (aa * d + b);
            c = b + aa / c;
            let delta = c * d;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-x).exp() * h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ln_gamma_matches_known_values() {
        assert_relative_eq!(gamma(0.5), std::f64::consts::PI.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(ln_gamma(5.0), 24.0f64.ln(), epsilon = 1e-12);
        let (lg, s) = ln_gamma_sign(-0.5);
        assert_eq!(s, -1.0);
        // Gamma(-1/2) = -2 sqrt(pi)
        assert_relative_eq!(lg, (2.0 * std::f64::consts::PI.sqrt()).ln(), epsilon = 1e-12);
    }

    #[test]
    fn recip_gamma_vanishes_at_poles() {
        for k in 0..4 {
            let (_, s) = recip_gamma_ln(-(k as f64));
            assert_eq!(s, 0.0);
        }
    }

    #[test]
    fn complex_ln_gamma_reduces_to_real() {
        for &x in &[0.3, 1.7, 4.2, 9.5] {
            let z = ln_gamma_complex(Complex64::new(x, 0.0));
            assert_relative_eq!(z.re, ln_gamma(x), epsilon = 1e-12);
            assert!(z.im.abs() < 1e-12);
        }
    }

    #[test]
    fn complex_ln_gamma_recurrence() {
        // Gamma(z+1) = z Gamma(z) off the real axis
        let z = Complex64::new(1.3, 2.1);
        let lhs = ln_gamma_complex(z + 1.0);
        let rhs = ln_gamma_complex(z) + z.ln();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn hurwitz_zeta_matches_riemann() {
        // zeta(2) = pi^2/6
        let z2 = hurwitz_zeta(2.0, 1.0);
        assert_relative_eq!(z2, std::f64::consts::PI.powi(2) / 6.0, epsilon = 1e-12);
        // zeta(s, a) - zeta(s, a+1) = a^{-s}
        let s = 1.7;
        let a = 0.4;
        assert_relative_eq!(
            hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0),
            a.powf(-s),
            epsilon = 1e-12
        );
    }

    #[test]
    fn e1_matches_series_and_cf() {
        // E1(1) = 0.21938393439552026 (series branch)
        assert_relative_eq!(expint_e1(1.0), 0.219_383_934_395_520_26, epsilon = 1e-12);
        // CF branch against d/dx E1 = -e^{-x}/x across the switch point
        let h = 1e-6;
        let lo = expint_e1(1.0 - h);
        let hi = expint_e1(1.0 + h);
        assert_relative_eq!(hi - lo, -2.0 * h * (-1.0f64).exp(), epsilon = 1e-12);
        // CF branch deep in its range: E1(5) = 0.001148295591275326
        assert_relative_eq!(expint_e1(5.0), 1.148_295_591_275_326e-3, epsilon = 1e-11);
    }

    #[test]
    fn binomial_real_integer_case() {
        assert_relative_eq!(binomial_real(5.0, 2), 10.0, epsilon = 1e-14);
        assert_relative_eq!(binomial_real(2.0, 1), 2.0, epsilon = 1e-14);
    }
}
