//! Generalized Airy-type integrals
//!     Ai_k(x) = (1/pi) int_0^inf cos(u^k/k + u x) du,  k >= 3,
//! evaluated through the rotation u -> t e^{i pi/(2k)}, which turns the
//! semi-convergent cosine integral into an absolutely convergent one:
//!     Ai_k(x) = (1/pi) Re[ e^{i pi/(2k)} int_0^inf
//!                exp(-t^k/k + i x t e^{i pi/(2k)}) dt ].

use crate::error::{Error, Result};
use crate::quad;

/// Ai_k(x); k = 3 is the classical Airy function Ai.
pub fn airy_type(k: u32, x: f64) -> Result<f64> {
    if k < 3 {
        return Err(Error::Domain(format!("airy_type requires k >= 3, got {k}")));
    }
    let kf = k as f64;
    let theta = std::f64::consts::PI / (2.0 * kf);
    let (sin_t, cos_t) = theta.sin_cos();

    // real integrand after taking Re[...]:
    //   (1/pi) e^{-t^k/k - x t sin(theta)} cos(x t cos(theta) + theta)
    let mut f = |t: f64| -> f64 {
        let e = -t.powi(k as i32) / kf - x * t * sin_t;
        if e < -745.0 {
            return 0.0;
        }
        e.exp() * (x * t * cos_t + theta).cos() / std::f64::consts::PI
    };

    // envelope bulge for x < 0 peaks at t* = (|x| sin theta)^{1/(k-1)}
    let bulge = if x < 0.0 {
        let xs = -x * sin_t;
        (1.0 - 1.0 / kf) * xs.powf(kf / (kf - 1.0))
    } else {
        0.0
    };
    // truncation point: t^k/k + x t sin(theta) > bulge + 42
    let mut t_max = (kf * (bulge + 42.0)).powf(1.0 / kf);
    for _ in 0..6 {
        let need = bulge + 42.0 - x.min(0.0) * t_max * sin_t;
        t_max = (kf * need).powf(1.0 / kf).max(1.0);
    }

    // split at the oscillation scale of cos(x t cos theta)
    let freq = (x.abs() * cos_t).max(1e-3);
    let panel = (std::f64::consts::PI / freq).min(t_max);
    let mut acc = 0.0;
    let mut err = 0.0;
    let mut t = 0.0;
    while t < t_max {
        let hi = (t + panel).min(t_max);
        let (v, e) = quad::adaptive(&mut f, t, hi, 1e-12 * (1.0 + bulge.exp()), 1e-12);
        acc += v;
        err += e;
        t = hi;
    }
    if err > 1e-8 * (1.0 + acc.abs()) {
        return Err(Error::QuadratureFailure(format!(
            "airy_type({k}, {x}): error estimate {err:.2e}"
        )));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma;
    use approx::assert_relative_eq;

    /// Maclaurin-series Airy oracle, independent of the integral route:
    /// Ai(x) = c1 f(x) - c2 g(x), f = sum 3^k (1/3)_k x^{3k}/(3k)!,
    /// g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!.
    fn airy_series(x: f64) -> f64 {
        let c1 = 3.0f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0);
        let c2 = 3.0f64.powf(-1.0 / 3.0) / gamma(1.0 / 3.0);
        let x3 = x * x * x;
        let mut f = 1.0;
        let mut g = x;
        let mut tf = 1.0;
        let mut tg = x;
        for k in 0..60 {
            let kf = k as f64;
            tf *= 3.0 * (1.0 / 3.0 + kf) * x3
                / ((3.0 * kf + 1.0) * (3.0 * kf + 2.0) * (3.0 * kf + 3.0));
            tg *= 3.0 * (2.0 / 3.0 + kf) * x3
                / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0) * (3.0 * kf + 4.0));
            f += tf;
            g += tg;
            if tf.abs() + tg.abs() < 1e-18 {
                break;
            }
        }
        c1 * f - c2 * g
    }

    #[test]
    fn classical_airy_at_zero() {
        // Ai(0) = 3^{-2/3} / Gamma(2/3)
        let expect = 3.0f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0);
        assert_relative_eq!(expect, 0.355_028_053_9, epsilon = 1e-9);
        assert_relative_eq!(airy_type(3, 0.0).unwrap(), expect, epsilon = 1e-10);
    }

    #[test]
    fn classical_airy_off_zero() {
        for &x in &[-2.0, -1.0, 1.0, 2.0] {
            assert_relative_eq!(airy_type(3, x).unwrap(), airy_series(x), epsilon = 1e-8);
        }
    }

    #[test]
    fn airy_equation_residual() {
        // Ai'' = x Ai via second central difference, step 1e-3
        let h = 1e-3;
        for &x in &[0.5, 1.0, 2.0] {
            let f = |x: f64| airy_type(3, x).unwrap();
            let second = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
            assert!((second - x * f(x)).abs() < 1e-5, "residual too large at {x}");
        }
    }

    #[test]
    fn k5_oscillates_on_negative_axis() {
        // Ai_5(-x) oscillates with damped amplitude; the first three sign
        // changes sit near 2.5, 4.7 and 6.7.
        let mut signs = 0;
        let mut prev = airy_type(5, 0.0).unwrap();
        let n = 320;
        for i in 1..=n {
            let x = 8.0 * i as f64 / n as f64;
            let cur = airy_type(5, -x).unwrap();
            if prev.signum() != cur.signum() {
                signs += 1;
            }
            prev = cur;
        }
        assert!(signs >= 3, "only {signs} sign changes");
    }

    #[test]
    fn k_must_be_at_least_three() {
        assert!(airy_type(2, 0.0).is_err());
    }
}
