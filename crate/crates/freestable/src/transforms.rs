//! Mellin/fractional moments, characteristic and Laplace transforms of the
//! free stable family, and the transforms of the exceptional 1-stable pair
//! (T, W).

use crate::error::{Error, Result};
use crate::gamma::{binomial_real, ln_gamma, ln_gamma_complex};
use crate::params::StableParams;
use crate::wright::{wright_phi, WrightParams};
use crate::Eval;
use num_complex::Complex64;

/// E[X_alpha^s] = Gamma(1 - s/alpha) / (Gamma(2 - (1/alpha - 1)s) Gamma(1 - s)),
/// for alpha in (0, 1], s < alpha.
pub fn mellin_x(alpha: f64, s: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!("mellin_x needs alpha in (0,1], got {alpha}")));
    }
    if s >= alpha {
        return Err(Error::Domain(format!("mellin_x pole: s = {s} >= alpha = {alpha}")));
    }
    let c = 1.0 / alpha - 1.0;
    Ok((ln_gamma(1.0 - s / alpha) - ln_gamma(2.0 - c * s) - ln_gamma(1.0 - s)).exp())
}

/// E[K_alpha^s] = Gamma(1 - s/alpha) / (Gamma(1 - (1/alpha - 1)s) Gamma(1 - s)),
/// for alpha in (0, 1), s < alpha.
pub fn mellin_k(alpha: f64, s: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("mellin_k needs alpha in (0,1), got {alpha}")));
    }
    if s >= alpha {
        return Err(Error::Domain(format!("mellin_k pole: s = {s} >= alpha = {alpha}")));
    }
    let c = 1.0 / alpha - 1.0;
    Ok((ln_gamma(1.0 - s / alpha) - ln_gamma(1.0 - c * s) - ln_gamma(1.0 - s)).exp())
}

/// E[X_alpha^{-n}] = (1/(n/alpha + 1)) C(n/alpha + 1, n): Fuss-Catalan.
pub fn neg_moment_x(alpha: f64, n: u32) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!("neg_moment_x needs alpha in (0,1], got {alpha}")));
    }
    let z = n as f64 / alpha + 1.0;
    Ok(binomial_real(z, n) / z)
}

/// E[K_alpha^{-n}] = C(n/alpha, n).
pub fn neg_moment_k(alpha: f64, n: u32) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("neg_moment_k needs alpha in (0,1), got {alpha}")));
    }
    Ok(binomial_real(n as f64 / alpha, n))
}

/// Characteristic function E[e^{i t X_{alpha,rho}}]
///   = phi(alpha - 1, 2, -(i t)^alpha e^{-i pi alpha rho sgn t}),
/// with the principal branch (i t)^alpha = |t|^alpha e^{i pi alpha sgn(t)/2}.
pub fn charfn(p: StableParams, t: f64) -> Result<Eval<Complex64>> {
    if t == 0.0 {
        return Ok(Eval::good(Complex64::new(1.0, 0.0), 0.0));
    }
    let alpha = p.alpha();
    let rho = p.rho();
    let sgn = t.signum();
    // z = -(it)^alpha e^{-i pi alpha rho sgn}: modulus |t|^alpha, phase
    // pi + sgn * pi alpha (1/2 - rho)
    let phase = std::f64::consts::PI * (1.0 + sgn * alpha * (0.5 - rho));
    let z = Complex64::from_polar(t.abs().powf(alpha), phase);
    wright_phi(WrightParams::new(alpha - 1.0, 2.0)?, z)
}

/// Laplace transform E[e^{-lambda X_alpha}] = phi(alpha-1, 2, -lambda^alpha)
/// of the one-sided law, alpha in (0, 1).
pub fn laplace_x(alpha: f64, lambda: f64) -> Result<Eval<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("laplace_x needs alpha in (0,1), got {alpha}")));
    }
    if lambda < 0.0 {
        return Err(Error::Domain("laplace_x needs lambda >= 0".into()));
    }
    let e = wright_phi(
        WrightParams::new(alpha - 1.0, 2.0)?,
        Complex64::new(-(lambda.powf(alpha)), 0.0),
    )?;
    Ok(Eval { value: e.value.re, err: e.err, flagged: e.flagged })
}

/// Moment generating function E[e^{lambda X_{alpha,1/alpha}}]
/// = phi(alpha-1, 2, lambda^alpha), alpha in (1, 2].
pub fn mgf_extreme(alpha: f64, lambda: f64) -> Result<Eval<f64>> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::InvalidParameter(format!("mgf_extreme needs alpha in (1,2], got {alpha}")));
    }
    if lambda < 0.0 {
        return Err(Error::Domain("mgf_extreme needs lambda >= 0".into()));
    }
    let e = wright_phi(
        WrightParams::new(alpha - 1.0, 2.0)?,
        Complex64::new(lambda.powf(alpha), 0.0),
    )?;
    Ok(Eval { value: e.value.re, err: e.err, flagged: e.flagged })
}

/// E[W^s] = s^s / Gamma(1 + s) for s >= 0 (limit 1 at s = 0).
pub fn mellin_w(s: f64) -> Result<f64> {
    if s < 0.0 {
        return Err(Error::Domain("mellin_w needs s >= 0".into()));
    }
    if s == 0.0 {
        return Ok(1.0);
    }
    Ok((s * s.ln() - ln_gamma(1.0 + s)).exp())
}

/// E[e^{s T}] = s^s / Gamma(2 + s) for s >= 0 (limit 1 at s = 0).
pub fn mgf_t(s: f64) -> Result<f64> {
    if s < 0.0 {
        return Err(Error::Domain("mgf_t needs s >= 0".into()));
    }
    if s == 0.0 {
        return Ok(1.0);
    }
    Ok((s * s.ln() - ln_gamma(2.0 + s)).exp())
}

/// Characteristic function of the exceptional free 1-stable variable T,
/// obtained by continuing s^s/Gamma(2+s) to s = it. Analytic in the right
/// half-plane; the continuation is cross-checked against the Lévy measure
/// in the `levy` module.
pub fn charfn_t(t: f64) -> Complex64 {
    if t == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let s = Complex64::new(0.0, t);
    // s^s = exp(s log s), principal log: log(it) = ln|t| + i pi/2 sgn t
    let log_s = Complex64::new(t.abs().ln(), std::f64::consts::FRAC_PI_2 * t.signum());
    (s * log_s - ln_gamma_complex(Complex64::new(2.0, 0.0) + s)).exp()
}

/// Characteristic function of C_{a,b} = a X_{1,1/2} + b T (independent sum;
/// the Cauchy factor contributes e^{-a|t|}).
pub fn charfn_c(a: f64, b: f64, t: f64) -> Result<Complex64> {
    if a < 0.0 || (a == 0.0 && b == 0.0) {
        return Err(Error::InvalidParameter("charfn_c needs a >= 0, (a,b) != (0,0)".into()));
    }
    Ok((-a * t.abs()).exp() * charfn_t(b * t))
}
