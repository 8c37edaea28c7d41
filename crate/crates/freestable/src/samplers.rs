//! Exact random-variate generators, all deterministic functions of an
//! `RngStream`.
//!
//! * K_alpha: the trigonometric transform of one uniform,
//!   sin(pi alpha U) sin^{(1-alpha)/alpha}(pi (1-alpha) U) / sin^{1/alpha}(pi U).
//! * X_alpha = U^{1-1/alpha} K_alpha; Z_alpha = L^{1-1/alpha} K_alpha.
//! * W = sin(pi U)/(pi U) e^{pi U cot(pi U)}; T = log U + log W;
//!   S = log L + log W.
//! * X_{alpha,rho} = X_{1,rho} * X_alpha for alpha < 1; 2 - 4 B_{3/2,3/2}
//!   at alpha = 2; a cached inverse-CDF table for alpha in (1,2).
//! * C_{a,b} = a X_{1,1/2} + b T.
//! * Sigma_nu: the Laplace series over Bessel zeros.

use crate::bessel::{bessel_j_zeros, rayleigh_sum_2};
use crate::dist::{cdf_numeric_tol, support_of};
use crate::error::{Error, Result};
use crate::params::StableParams;
use crate::rng::RngStream;
use std::f64::consts::PI;

const U_CLAMP: f64 = 1e-15;

fn clamped_uniform(rng: &mut RngStream) -> f64 {
    rng.uniform().clamp(U_CLAMP, 1.0 - U_CLAMP)
}

/// Kanter transform evaluated at u in (0, 1).
pub fn kanter_transform(alpha: f64, u: f64) -> f64 {
    let s1 = (PI * alpha * u).sin();
    let s2 = (PI * (1.0 - alpha) * u).sin();
    let s3 = (PI * u).sin();
    s1 * s2.powf((1.0 - alpha) / alpha) / s3.powf(1.0 / alpha)
}

/// One draw of the Kanter variable K_alpha, alpha in (0, 1).
pub fn sample_k(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("sample_k needs alpha in (0,1), got {alpha}")));
    }
    Ok(kanter_transform(alpha, clamped_uniform(rng)))
}

/// One draw of the one-sided free stable X_alpha = U^{1-1/alpha} K_alpha.
pub fn sample_x(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("sample_x needs alpha in (0,1), got {alpha}")));
    }
    let u = clamped_uniform(rng);
    let k = sample_k(alpha, rng)?;
    Ok(u.powf(1.0 - 1.0 / alpha) * k)
}

/// One draw of the classical positive alpha-stable Z_alpha
/// (E[e^{-lambda Z}] = e^{-lambda^alpha}).
pub fn sample_z(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("sample_z needs alpha in (0,1), got {alpha}")));
    }
    let l = rng.exponential().max(U_CLAMP);
    let k = sample_k(alpha, rng)?;
    Ok(l.powf(1.0 - 1.0 / alpha) * k)
}

/// The free Gumbel companion W = sin(pi U)/(pi U) e^{pi U cot(pi U)},
/// supported on (0, e].
pub fn sample_w(rng: &mut RngStream) -> f64 {
    let u = clamped_uniform(rng);
    let pu = PI * u;
    (pu.sin() / pu) * (pu * pu.cos() / pu.sin()).exp()
}

/// Exceptional free 1-stable T = log U + log W, supported on (-inf, 1).
/// W is floored at the smallest normal to keep extreme draws finite.
pub fn sample_t(rng: &mut RngStream) -> f64 {
    let u = clamped_uniform(rng);
    u.ln() + sample_w(rng).max(f64::MIN_POSITIVE).ln()
}

/// Exceptional classical 1-stable S = log L + log W (E[e^{sS}] = s^s).
pub fn sample_s(rng: &mut RngStream) -> f64 {
    let l = rng.exponential().max(U_CLAMP);
    l.ln() + sample_w(rng).max(f64::MIN_POSITIVE).ln()
}

/// Drifted free Cauchy X_{1,rho} by quantile transform.
pub fn sample_cauchy(rho: f64, rng: &mut RngStream) -> f64 {
    let u = clamped_uniform(rng);
    -(PI * rho).cos() + (PI * rho).sin() * (PI * (u - 0.5)).tan()
}

/// Inverse-CDF sampler state for alpha in (1, 2): a monotone table over
/// the quantile range [1e-8, 1 - 1e-8] with linear interpolation in between
/// and Pareto-style tails beyond.
#[derive(Debug, Clone)]
pub struct InverseCdfTable {
    params: StableParams,
    us: Vec<f64>,
    xs: Vec<f64>,
    /// Estimated interpolation error (sup over a midpoint probe).
    pub interp_err: f64,
    /// Set when the table could not certify the 1e-6 target.
    pub flagged: bool,
}

impl InverseCdfTable {
    /// Build from `nodes` Chebyshev-spaced quantile levels.
    pub fn build(p: StableParams, nodes: usize) -> Result<Self> {
        let alpha = p.alpha();
        if !(alpha > 1.0 && alpha < 2.0) {
            return Err(Error::InvalidParameter(
                "inverse-CDF table is for alpha in (1,2)".into(),
            ));
        }
        let (u_lo, u_hi) = (1e-8, 1.0 - 1e-8);
        // locate the x-window covering [u_lo, u_hi]
        let mut x_lo = -1.0;
        let mut x_hi = 1.0;
        let sup = support_of(p);
        let cdf = |x: f64| cdf_numeric_tol(p, x, 1e-9).map(|e| e.value);
        while cdf(x_lo)? > u_lo {
            x_lo = sup.left.map_or(x_lo * 2.0, |l| l.max(x_lo * 2.0));
            if sup.left.map_or(false, |l| x_lo <= l) {
                x_lo = l_eps(sup.left.unwrap());
                break;
            }
            if x_lo < -1e9 {
                return Err(Error::QuadratureFailure("inverse-CDF left bracket".into()));
            }
        }
        while cdf(x_hi)? < u_hi {
            x_hi = sup.right.map_or(x_hi * 2.0, |r| r.min(x_hi * 2.0));
            if sup.right.map_or(false, |r| x_hi >= r) {
                x_hi = r_eps(sup.right.unwrap());
                break;
            }
            if x_hi > 1e9 {
                return Err(Error::QuadratureFailure("inverse-CDF right bracket".into()));
            }
        }
        // Chebyshev-clustered x grid between the brackets; tabulate u = F(x)
        let mut xs = Vec::with_capacity(nodes);
        let mut us = Vec::with_capacity(nodes);
        for j in 0..nodes {
            let c = (PI * j as f64 / (nodes - 1) as f64).cos();
            let x = 0.5 * (x_lo + x_hi) - 0.5 * (x_hi - x_lo) * c;
            let u = cdf(x)?;
            if let Some(&last) = us.last() {
                if u < last {
                    continue; // enforce monotonicity against quadrature noise
                }
            }
            xs.push(x);
            us.push(u);
        }
        // interpolation error probe at segment midpoints
        let mut err = 0.0f64;
        for w in 0..xs.len().saturating_sub(1).min(64) {
            let i = w * (xs.len() - 2).max(1) / 64.max(1);
            let xm = 0.5 * (xs[i] + xs[i + 1]);
            let um = 0.5 * (us[i] + us[i + 1]);
            let truth = cdf(xm)?;
            err = err.max((truth - um).abs());
        }
        Ok(Self { params: p, us, xs, interp_err: err, flagged: err > 1e-6 })
    }

    pub fn params(&self) -> StableParams {
        self.params
    }

    /// Quantile lookup with linear interpolation and power-law tails.
    pub fn inverse(&self, u: f64) -> f64 {
        let alpha = self.params.alpha();
        let (u0, u1) = (*self.us.first().unwrap(), *self.us.last().unwrap());
        if u <= u0 {
            // left tail: survival ~ c |x|^{-alpha}
            let x0 = self.xs[0];
            if support_of(self.params).left.is_some() {
                return x0;
            }
            return x0 * (u0 / u).powf(1.0 / alpha);
        }
        if u >= u1 {
            let xn = *self.xs.last().unwrap();
            if support_of(self.params).right.is_some() {
                return xn;
            }
            return xn * ((1.0 - u0) / (1.0 - u)).powf(1.0 / alpha);
        }
        // binary search in us
        let mut lo = 0usize;
        let mut hi = self.us.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.us[mid] <= u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = (u - self.us[lo]) / (self.us[hi] - self.us[lo]).max(1e-300);
        self.xs[lo] + t * (self.xs[hi] - self.xs[lo])
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        self.inverse(clamped_uniform(rng))
    }
}

fn l_eps(l: f64) -> f64 {
    l + 1e-9 * (1.0 + l.abs())
}

fn r_eps(r: f64) -> f64 {
    r - 1e-9 * (1.0 + r.abs())
}

/// General free stable sampler. Exact in law for alpha <= 1 (product
/// identity X_{alpha,rho} = X_{1,rho} X_alpha) and alpha = 2
/// (2 - 4 B_{3/2,3/2} has the semicircle law); alpha in (1,2) goes through
/// the inverse-CDF table, built on first use.
pub enum GeneralSampler {
    OneSided { alpha: f64, negate: bool },
    Product { rho: f64, alpha: f64 },
    Cauchy { rho: f64 },
    Semicircle,
    Table(Box<InverseCdfTable>),
    PointMass(f64),
}

impl GeneralSampler {
    pub fn new(p: StableParams) -> Result<Self> {
        let (alpha, rho) = (p.alpha(), p.rho());
        if p.is_degenerate() {
            return Ok(Self::PointMass(if rho == 1.0 { 1.0 } else { -1.0 }));
        }
        if alpha == 2.0 {
            return Ok(Self::Semicircle);
        }
        if alpha == 1.0 {
            return Ok(Self::Cauchy { rho });
        }
        if alpha < 1.0 {
            if rho == 1.0 {
                return Ok(Self::OneSided { alpha, negate: false });
            }
            if rho == 0.0 {
                return Ok(Self::OneSided { alpha, negate: true });
            }
            return Ok(Self::Product { rho, alpha });
        }
        Ok(Self::Table(Box::new(InverseCdfTable::build(p, 2048)?)))
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        match self {
            Self::OneSided { alpha, negate } => {
                let x = sample_x(*alpha, rng).expect("validated");
                if *negate {
                    -x
                } else {
                    x
                }
            }
            Self::Product { rho, alpha } => {
                sample_cauchy(*rho, rng) * sample_x(*alpha, rng).expect("validated")
            }
            Self::Cauchy { rho } => sample_cauchy(*rho, rng),
            Self::Semicircle => {
                // Y_2 = 4 B_{3/2,3/2} is the semicircle shifted to [0,4]
                2.0 - 4.0 * rng.beta(1.5, 1.5)
            }
            Self::Table(t) => t.sample(rng),
            Self::PointMass(c) => *c,
        }
    }
}

/// One draw of X_{alpha, rho}. For repeated draws with alpha in (1,2)
/// construct a `GeneralSampler` once.
pub fn sample_x_general(p: StableParams, rng: &mut RngStream) -> Result<f64> {
    Ok(GeneralSampler::new(p)?.sample(rng))
}

/// One draw of C_{a,b} = a X_{1,1/2} + b T.
pub fn sample_c(a: f64, b: f64, rng: &mut RngStream) -> Result<f64> {
    if a < 0.0 || (a == 0.0 && b == 0.0) {
        return Err(Error::InvalidParameter("sample_c needs a >= 0, (a,b) != (0,0)".into()));
    }
    let cauchy = if a > 0.0 { a * sample_cauchy(0.5, rng) } else { 0.0 };
    let t = if b != 0.0 { b * sample_t(rng) } else { 0.0 };
    Ok(cauchy + t)
}

/// Truncated Laplace series Sigma_nu = sum_{n<=terms} X_n / j_{nu,n}.
/// Returns (draw, tail standard deviation bound) where the tail variance is
/// 2 sum_{n>terms} j_{nu,n}^{-2} from the Rayleigh sum.
pub struct SigmaSampler {
    zeros: Vec<f64>,
    pub tail_sd: f64,
}

impl SigmaSampler {
    pub fn new(nu: f64, terms: usize) -> Result<Self> {
        if terms == 0 {
            return Err(Error::InvalidParameter("sample_sigma needs terms >= 1".into()));
        }
        let zeros = bessel_j_zeros(nu, terms)?;
        let partial: f64 = zeros.iter().map(|j| j.powi(-2)).sum();
        let tail_var = 2.0 * (rayleigh_sum_2(nu) - partial).max(0.0);
        Ok(Self { zeros, tail_sd: tail_var.sqrt() })
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        self.zeros.iter().map(|j| rng.laplace() / j).sum()
    }
}
