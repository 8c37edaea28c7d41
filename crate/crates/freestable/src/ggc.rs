//! Boundary-function diagnostics for the generalized-Gamma-convolution
//! property: the cut values F_alpha(r e^{-i pi}) = phi(-alpha, 1, z e^{i pi alpha})
//! with z = r^{1-alpha}, their continuous argument theta_alpha, and the
//! rotated absolutely convergent integrals behind Re F at large r.
//!
//! Im F has only nonnegative series terms,
//!     Im F = (1/pi) sum_{n>=1} Gamma(n alpha) sin^2(pi n alpha) z^n / n!,
//! so it is summed in log space at any magnitude. Re F cancels
//! catastrophically once b_{1-alpha} r is large; past that point it is
//! evaluated through the contour-rotated Laplace representation
//!     Re F = 1 + phi/(2 pi) + (1/2 pi) int_0^inf
//!            Im exp(-c u e^{i phi} + u^alpha e^{i psi}) du/u,
//! c = r^{-(1-alpha)/alpha}, psi = alpha (2 pi + phi), with the rotation
//! angle phi chosen per alpha band so the u^alpha factor stops growing.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::params::b_alpha;
use crate::quad;
use crate::scan::{ScanReport, Verdict};
use crate::wright::{wright_phi_real, WrightParams};
use crate::Eval;
use num_complex::Complex64;
use std::f64::consts::PI;

fn check_alpha_01(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("alpha must lie in (0,1), got {alpha}")));
    }
    Ok(())
}

/// ln of Im F_alpha(r e^{-i pi}) via the positive-term series, stable at
/// any representable magnitude. Returns -inf at r = 0.
pub fn ln_im_f_cut(alpha: f64, r: f64) -> Result<f64> {
    check_alpha_01(alpha)?;
    if r <= 0.0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let ln_z = (1.0 - alpha) * r.ln();
    // two passes: locate the maximal log-term, then sum exp(term - max)
    let n_peak = (r * b_alpha(1.0 - alpha) / (1.0 - alpha)).max(4.0);
    let cap = (64.0 + 6.0 * n_peak).min(2e6) as usize;
    let ln_term = |n: usize| -> f64 {
        let nf = n as f64;
        let s = (PI * nf * alpha).sin();
        if s == 0.0 {
            return f64::NEG_INFINITY;
        }
        nf * ln_z + 2.0 * s.abs().ln() + ln_gamma(nf * alpha) - ln_gamma(nf + 1.0) - PI.ln()
    };
    // sin(pi n alpha) vanishes periodically for rational alpha, so the
    // stopping rules must ignore isolated -inf entries
    let mut m = f64::NEG_INFINITY;
    let mut n_at = 1usize;
    let mut low_run = 0usize;
    for n in 1..cap {
        let lt = ln_term(n);
        if lt > m {
            m = lt;
            n_at = n;
            low_run = 0;
        } else if lt.is_finite() && lt < m - 60.0 && n > n_at {
            low_run += 1;
            if low_run >= 3 {
                break;
            }
        }
    }
    let mut sum = 0.0f64;
    low_run = 0;
    for n in 1..cap {
        let lt = ln_term(n);
        let d = lt - m;
        if d > -45.0 {
            sum += d.exp();
            low_run = 0;
        } else if lt.is_finite() && n > n_at {
            low_run += 1;
            if low_run >= 3 {
                break;
            }
        }
    }
    Ok(m + sum.ln())
}

/// Rotation angle (radians) for the Re F integral, chosen so that
/// psi = alpha (2 pi + phi) lands in [pi/2, 3 pi/2] whenever alpha allows
/// it, while keeping |phi| < pi/2 for linear-term decay.
fn rotation_angle(alpha: f64) -> f64 {
    if alpha < 0.2 {
        // shared-phase rotation: psi = phi, growth bulge unavoidable
        PI * 2.0 * alpha / (1.0 - alpha)
    } else if alpha < 0.5 {
        PI * (5.0 * (1.0 - 2.0 * alpha) / 6.0).min(0.48)
    } else if alpha <= 0.75 {
        0.0
    } else {
        PI * (1.5 / alpha - 2.0)
    }
}

/// Re F_alpha(r e^{-i pi}) through the rotated integral; valid for every
/// r > 0 and the workhorse once the series cancels.
pub fn re_f_cut_integral(alpha: f64, r: f64) -> Result<Eval<f64>> {
    check_alpha_01(alpha)?;
    let phi = rotation_angle(alpha);
    let psi = alpha * (2.0 * PI + phi);
    let c = r.powf(-(1.0 - alpha) / alpha);
    integral_core(alpha, c, phi, psi)
}

/// G_alpha(r) = Re F_alpha(r^{alpha/(alpha-1)} e^{-i pi}): the same
/// integral with the linear coefficient r itself. Defined for
/// alpha in (0, 1/2).
pub fn g_alpha(alpha: f64, r: f64) -> Result<Eval<f64>> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InvalidParameter(format!("g_alpha needs alpha in (0,1/2), got {alpha}")));
    }
    if r <= 0.0 {
        return Err(Error::Domain("g_alpha needs r > 0".into()));
    }
    let phi = rotation_angle(alpha);
    let psi = alpha * (2.0 * PI + phi);
    integral_core(alpha, r, phi, psi)
}

/// Common core: 1 + phi/(2 pi) + (1/2 pi) int_0^inf
///   exp(A(u)) sin(B(u)) du / u,
/// A = -c u cos(phi) + u^alpha cos(psi), B = -c u sin(phi) + u^alpha sin(psi).
fn integral_core(alpha: f64, c: f64, phi: f64, psi: f64) -> Result<Eval<f64>> {
    let (sin_phi, cos_phi) = phi.sin_cos();
    let (sin_psi, cos_psi) = psi.sin_cos();

    let a_of = |u: f64| -c * u * cos_phi + u.powf(alpha) * cos_psi;
    let b_of = |u: f64| -c * u * sin_phi + u.powf(alpha) * sin_psi;

    // growth bulge of A (only when cos_psi > 0, i.e. alpha < 1/5 band)
    let bulge = if cos_psi > 0.0 && c * cos_phi > 0.0 {
        let t_star = (alpha * cos_psi / (c * cos_phi)).powf(1.0 / (1.0 - alpha));
        a_of(t_star).max(0.0)
    } else {
        0.0
    };

    // near-zero region in the substituted variable w = u^alpha:
    // integrand (1/alpha) e^{A} sin(B)/w dw, with sin(B)/w -> sin(psi)
    let u0 = 0.5f64.min(0.5 / (1.0 + c));
    let w0 = u0.powf(alpha);
    let mut near = |w: f64| -> f64 {
        if w == 0.0 {
            return sin_psi / alpha;
        }
        let u = w.powf(1.0 / alpha);
        let b = b_of(u);
        (a_of(u).exp()) * b.sin() / w / alpha
    };
    let (head, head_err) = quad::adaptive(&mut near, 0.0, w0, 1e-11 * (1.0 + bulge.exp()), 1e-12);

    // march the tail with steps bounded by the local oscillation and decay
    let scale_cap = bulge + 42.0;
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut err = head_err;
    let mut u = u0;
    let mut f = |x: f64| a_of(x).exp() * b_of(x).sin() / x;
    let mut panels = 0usize;
    loop {
        let bp = (-c * sin_phi + alpha * u.powf(alpha - 1.0) * sin_psi).abs();
        let ap = (-c * cos_phi + alpha * u.powf(alpha - 1.0) * cos_psi).abs();
        let step = (PI / (bp + 1e-12)).min(2.0 / (ap + 1e-12)).min(0.75 * u + 0.05).max(1e-3 * u);
        let hi = u + step;
        let v = quad::gauss15(&mut f, u, hi);
        let y = v - comp;
        let t = acc + y;
        comp = (t - acc) - y;
        acc = t;
        u = hi;
        panels += 1;
        // decayed beyond relevance?
        let a_hi = a_of(u);
        if a_hi < -scale_cap && -c * u * cos_phi < -scale_cap {
            break;
        }
        if panels > 400_000 {
            return Err(Error::QuadratureFailure(format!(
                "re_f_cut integral: too many panels (alpha = {alpha}, c = {c:.3e})"
            )));
        }
        err += v.abs() * 1e-14;
    }
    let value = 1.0 + phi / (2.0 * PI) + (head + acc) / (2.0 * PI);
    let e = (err + 1e-13 * (1.0 + bulge.exp())) / (2.0 * PI);
    Ok(Eval { value, err: e, flagged: e > 1e-6 * (1.0 + value.abs()) })
}

/// Series evaluation of Re F with its cancellation estimate.
fn re_f_cut_series(alpha: f64, r: f64) -> (f64, f64) {
    let ln_z = (1.0 - alpha) * r.ln();
    let n_peak = (r * b_alpha(1.0 - alpha) / (1.0 - alpha)).max(4.0);
    let cap = (64.0 + 6.0 * n_peak).min(1e5) as usize;
    let mut sum = 1.0f64; // n = 0 term
    let mut comp = 0.0f64;
    let mut max_term = 1.0f64;
    let mut tiny_run = 0usize;
    for n in 1..cap {
        let nf = n as f64;
        let s = (PI * nf * alpha).sin();
        if s == 0.0 {
            continue;
        }
        // Re term = z^n cos(pi n alpha) sin(pi n alpha) Gamma(n alpha)/(pi n!)
        let ln_mag =
            nf * ln_z + s.abs().ln() + ln_gamma(nf * alpha) - ln_gamma(nf + 1.0) - PI.ln();
        let t = (PI * nf * alpha).cos() * s.signum() * ln_mag.exp();
        max_term = max_term.max(t.abs());
        let y = t - comp;
        let u = sum + y;
        comp = (u - sum) - y;
        sum = u;
        // isolated sine-zero indices produce spuriously tiny terms; demand a run
        if t.abs() < 1e-18 * sum.abs().max(1e-300) && nf > n_peak {
            tiny_run += 1;
            if tiny_run >= 4 {
                break;
            }
        } else {
            tiny_run = 0;
        }
    }
    (sum, max_term)
}

/// Re F_alpha(r e^{-i pi}): series while safe, rotated integral beyond.
pub fn re_f_cut(alpha: f64, r: f64) -> Result<Eval<f64>> {
    check_alpha_01(alpha)?;
    if r <= 0.0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let growth = b_alpha(1.0 - alpha) * r;
    if growth <= 25.0 {
        let (v, max_term) = re_f_cut_series(alpha, r);
        return Ok(Eval::good(v, max_term * 1e-15 + v.abs() * 1e-13));
    }
    re_f_cut_integral(alpha, r)
}

/// Full cut value F_alpha(r e^{-i pi}) as a complex Eval. Overflows to
/// +inf Im for b_{1-alpha} r beyond ~700; scans cap r well below that.
pub fn f_alpha_cut(alpha: f64, r: f64) -> Result<Eval<Complex64>> {
    let re = re_f_cut(alpha, r)?;
    let ln_im = ln_im_f_cut(alpha, r)?;
    let im = ln_im.exp();
    Ok(Eval {
        value: Complex64::new(re.value, im),
        err: re.err + im * 1e-12,
        flagged: re.flagged,
    })
}

/// Continuous determination of theta_alpha(r) = (1/pi) arg F_alpha(r e^{-i pi}),
/// in [0, 1]. Because Im F > 0 for all r > 0, theta = 1/2 - atan(Re/Im)/pi
/// needs no unwrapping; the small-r anchor theta ~ r^{1-alpha}/(Gamma(alpha)
/// Gamma(1-alpha)^2) is recovered automatically.
pub fn theta(alpha: f64, r: f64) -> Result<Eval<f64>> {
    let re = re_f_cut(alpha, r)?;
    let ln_im = ln_im_f_cut(alpha, r)?;
    // ratio Re/Im via logs (Im can exceed f64 range in intermediate form)
    let ratio = re.value.signum() * ((re.value.abs().max(1e-300)).ln() - ln_im).exp();
    let th = 0.5 - ratio.atan() / PI;
    let err = re.err * (-ln_im).exp().min(1.0) / PI + 1e-13;
    Ok(Eval { value: th, err, flagged: re.flagged })
}

/// Ratio Im F / Re F of the two cut power series at series argument x
/// (x = r^{1-alpha}); equals tan(pi theta) where defined. Errors with a
/// zero-denominator flag when Re F vanishes within tolerance.
pub fn g_tilde(alpha: f64, x: f64) -> Result<Eval<f64>> {
    check_alpha_01(alpha)?;
    if x <= 0.0 {
        return Err(Error::Domain("g_tilde needs x > 0".into()));
    }
    let r = x.powf(1.0 / (1.0 - alpha));
    let re = re_f_cut(alpha, r)?;
    let ln_im = ln_im_f_cut(alpha, r)?;
    if re.value.abs() <= 10.0 * re.err {
        // denominator indistinguishable from zero
        return Ok(Eval::flagged(f64::INFINITY, f64::INFINITY));
    }
    let v = (ln_im - re.value.abs().ln()).exp() * re.value.signum();
    Ok(Eval { value: v, err: (re.err / re.value.abs()) * v.abs() + 1e-13, flagged: re.flagged })
}

/// Monotonicity scan of theta_alpha on a log grid; decrements beyond 1e-9
/// are violations. The verdict switches to Oscillating when Re F shows
/// three robust sign changes (magnitude above 1e-6).
pub fn ggc_scan(alpha: f64, r_min: f64, r_max: f64, n_points: usize) -> Result<ScanReport> {
    check_alpha_01(alpha)?;
    if !(r_min > 0.0 && r_min < r_max) {
        return Err(Error::Domain("ggc_scan needs 0 < r_min < r_max".into()));
    }
    if n_points < 2 {
        return Ok(ScanReport {
            grid: vec![r_min],
            values: vec![theta(alpha, r_min)?.value],
            violations: vec![],
            verdict: Verdict::Inconclusive,
            extremes: (0.0, 0.0),
        });
    }
    let mut grid = Vec::with_capacity(n_points);
    let mut thetas = Vec::with_capacity(n_points);
    let mut re_vals = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let r = r_min * (r_max / r_min).powf(i as f64 / (n_points - 1) as f64);
        grid.push(r);
        thetas.push(theta(alpha, r)?.value);
        re_vals.push(re_f_cut(alpha, r)?.value);
    }
    let mut report = ScanReport::monotone_scan(grid.clone(), thetas, 1e-9);
    let re_signs = ScanReport::sign_scan(grid, re_vals, 1e-6);
    if re_signs.sign_changes() >= 3 {
        report.verdict = Verdict::Oscillating;
        report.violations.extend(re_signs.violations.iter().cloned());
    }
    Ok(report)
}

/// Zeros of t -> phi(alpha - 1, 2, -t^alpha) on (0, t_max] for the
/// symmetric non-ID witness, bracketed by sign marching and refined by
/// bisection. Returns (zeros t, lambda = t^alpha).
pub fn charfn_zero_scan(alpha: f64, t_max: f64) -> Result<Vec<(f64, f64)>> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::InvalidParameter(format!(
            "charfn_zero_scan needs alpha in (1,2], got {alpha}"
        )));
    }
    let p = WrightParams::new(alpha - 1.0, 2.0)?;
    let w = |t: f64| -> Result<f64> { Ok(wright_phi_real(p, -(t.powf(alpha)))?.value) };
    // intrinsic oscillation period of the asymptotic regime
    let kappa = alpha * (alpha - 1.0f64).powf(1.0 / alpha - 1.0);
    let omega = (PI / alpha).sin() * kappa;
    let step = (2.0 * PI / omega / 24.0).min(0.05 * t_max).max(1e-3);
    let mut zeros = Vec::new();
    let mut t = step;
    let mut prev = w(t)?;
    while t < t_max {
        let t2 = (t + step).min(t_max);
        let cur = w(t2)?;
        if prev.signum() != cur.signum() && prev != 0.0 {
            // bisect
            let (mut lo, mut hi) = (t, t2);
            let mut flo = prev;
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let fm = w(mid)?;
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if hi - lo < 1e-13 * hi {
                    break;
                }
            }
            let z = 0.5 * (lo + hi);
            zeros.push((z, z.powf(alpha)));
        }
        prev = cur;
        t = t2;
    }
    Ok(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel::bessel_j_zeros;
    use crate::gamma::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn re_f_half_is_identically_one() {
        // only the n = 0 term has a real contribution at alpha = 1/2
        for &r in &[0.1, 1.0, 10.0] {
            let e = re_f_cut(0.5, r).unwrap();
            assert_relative_eq!(e.value, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn f_cut_small_r_tends_to_one() {
        let e = f_alpha_cut(0.3, 1e-9).unwrap();
        assert_relative_eq!(e.value.re, 1.0, epsilon = 1e-6);
        assert!(e.value.im.abs() < 1e-5);
    }

    #[test]
    fn im_f_positive_and_log_series_matches_direct() {
        // cross-check ln_im_f_cut against a direct complex series sum
        for &(alpha, r) in &[(0.3f64, 2.0f64), (0.5, 5.0), (0.7, 11.0)] {
            let z = Complex64::from_polar(r.powf(1.0 - alpha), PI * alpha);
            let direct = crate::wright::wright_phi(WrightParams::new(-alpha, 1.0).unwrap(), z)
                .unwrap()
                .value;
            let ln_im = ln_im_f_cut(alpha, r).unwrap();
            assert_relative_eq!(ln_im.exp(), direct.im, max_relative = 1e-9);
            assert!(direct.im > 0.0);
        }
    }

    #[test]
    fn re_series_matches_integral_in_overlap() {
        for &(alpha, r) in &[(0.3f64, 8.0f64), (0.4, 12.0), (0.6, 30.0), (0.8, 100.0)] {
            let (series, _) = re_f_cut_series(alpha, r);
            let integral = re_f_cut_integral(alpha, r).unwrap();
            assert_relative_eq!(series, integral.value, max_relative = 1e-6, epsilon = 1e-8);
        }
    }

    #[test]
    fn theta_limits() {
        // small-r asymptote theta ~ r^{1-alpha}/(Gamma(alpha) Gamma(1-alpha)^2)
        let alpha = 0.5;
        let r = 1e-4;
        let th = theta(alpha, r).unwrap().value;
        let asym = r.powf(1.0 - alpha) / (gamma(alpha) * gamma(1.0 - alpha).powi(2));
        assert_relative_eq!(th, asym, max_relative = 0.02);
        // large-r limit 1/2
        let th = theta(0.5, 1e3).unwrap().value;
        assert_relative_eq!(th, 0.5, epsilon = 0.01);
    }

    #[test]
    fn theta_values_stay_in_unit_interval() {
        for &alpha in &[0.2, 0.5, 0.8] {
            for i in 0..40 {
                let r = 1e-3 * (1e6f64).powf(i as f64 / 39.0);
                let th = theta(alpha, r).unwrap().value;
                assert!((0.0..=1.0).contains(&th), "theta({alpha}, {r}) = {th}");
            }
        }
    }

    #[test]
    fn g_tilde_is_tan_pi_theta() {
        let (alpha, x) = (0.5f64, 1.0f64);
        let r = x.powf(1.0 / (1.0 - alpha));
        let th = theta(alpha, r).unwrap().value;
        let g = g_tilde(alpha, x).unwrap().value;
        assert_relative_eq!((PI * th).tan(), g, max_relative = 1e-8);
        // x -> 0 limit is 0
        assert!(g_tilde(0.5, 1e-8).unwrap().value < 1e-6);
    }

    #[test]
    fn monotone_scan_for_mid_band() {
        for &alpha in &[0.3, 0.5, 0.7] {
            let rep = ggc_scan(alpha, 1e-3, 1e3, 160).unwrap();
            assert_eq!(rep.verdict, Verdict::Monotone, "alpha = {alpha}: {:?}", rep.violations);
        }
    }

    #[test]
    fn oscillating_scan_below_one_fifth() {
        let rep = ggc_scan(0.15, 1.0, 1e3, 200).unwrap();
        assert_eq!(rep.verdict, Verdict::Oscillating);
    }

    #[test]
    fn degenerate_grid_inconclusive() {
        let rep = ggc_scan(0.4, 1.0, 2.0, 1).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn g_alpha_small_r_limit() {
        // away from the critical index 1/5 the limit 1/(2 alpha) is reached
        // quickly; at alpha = 1/5 itself the approach is an algebraically
        // damped oscillation (the acceptance suite records that case).
        for &alpha in &[0.3, 0.45] {
            let g = g_alpha(alpha, 1e-6).unwrap().value;
            assert_relative_eq!(g, 0.5 / alpha, max_relative = 1e-4);
        }
        // alpha = 0.2: the Airy-route value, frozen at r = 1e-6
        let g = g_alpha(0.2, 1e-6).unwrap().value;
        assert_relative_eq!(g, 2.41937844, epsilon = 1e-6);
    }

    #[test]
    fn g_alpha_cross_checks_f_cut() {
        for &(alpha, r) in &[(0.3f64, 0.5f64), (0.45, 1.0), (0.3, 2.0)] {
            let g = g_alpha(alpha, r).unwrap().value;
            let rf = re_f_cut(alpha, r.powf(alpha / (alpha - 1.0))).unwrap().value;
            assert_relative_eq!(g, rf, max_relative = 1e-6, epsilon = 1e-6);
        }
    }

    #[test]
    fn zero_scan_alpha_two_hits_bessel_zeros() {
        // phi(1, 2, -t^2) = J_1(2t)/(t...): zeros at j_{1,n}/2
        let zeros = charfn_zero_scan(2.0, 8.0).unwrap();
        let j = bessel_j_zeros(1.0, 4).unwrap();
        assert!(zeros.len() >= 3);
        for (i, (t, _)) in zeros.iter().take(3).enumerate() {
            assert_relative_eq!(*t, j[i] / 2.0, epsilon = 1e-8);
        }
        // simplicity: sign flips across each zero were established by the
        // bisection bracketing itself; verify |phi| at zeros
        let p = WrightParams::new(1.0, 2.0).unwrap();
        for (t, _) in zeros.iter() {
            let v = wright_phi_real(p, -(t * t)).unwrap().value;
            assert!(v.abs() <= 1e-9, "|phi| = {} at reported zero", v.abs());
        }
    }

    #[test]
    fn zero_scan_robust_at_alpha_near_one() {
        // must not crash; zero count may legitimately be empty
        let zeros = charfn_zero_scan(1.01, 5.0).unwrap();
        let _ = zeros.len();
    }

    #[test]
    fn zero_scan_mid_alpha_counts() {
        let zeros = charfn_zero_scan(1.5, 50.0).unwrap();
        assert!(zeros.len() >= 2, "found {} zeros", zeros.len());
        let p = WrightParams::new(0.5, 2.0).unwrap();
        for (t, lam) in zeros.iter() {
            assert_relative_eq!(*lam, t.powf(1.5), epsilon = 1e-10);
            let v = wright_phi_real(p, -lam).unwrap().value;
            assert!(v.abs() <= 1e-9, "|phi({t})| = {}", v.abs());
        }
        // lambda ordering
        for w in zeros.windows(2) {
            assert!(w[0].1 < w[1].1);
        }
    }

    #[test]
    fn scaled_im_is_nondecreasing_after_weighting() {
        // r^{alpha-1} Im F non-decreasing in r (absolutely monotone series)
        for &alpha in &[0.3, 0.5] {
            let mut prev = f64::NEG_INFINITY;
            for i in 0..60 {
                let r = 1e-2 * (1e4f64).powf(i as f64 / 59.0);
                let v = (alpha - 1.0) * r.ln() + ln_im_f_cut(alpha, r).unwrap();
                assert!(v >= prev - 1e-10, "drop at r = {r}");
                prev = v;
            }
        }
    }
}
