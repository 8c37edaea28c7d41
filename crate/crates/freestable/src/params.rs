//! Parameter validation and supports for the free stable family.

use crate::error::{Error, Result};

/// Validated (alpha, rho) pair of a free strictly stable law.
/// rho is the positivity parameter: P[X >= 0] = rho.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    alpha: f64,
    rho: f64,
}

impl StableParams {
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        if !alpha.is_finite() || !rho.is_finite() || alpha <= 0.0 || alpha > 2.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in (0, 2], got {alpha}"
            )));
        }
        let ok = if alpha <= 1.0 {
            (0.0..=1.0).contains(&rho)
        } else {
            (1.0 - 1.0 / alpha..=1.0 / alpha).contains(&rho)
        };
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "rho = {rho} invalid for alpha = {alpha}"
            )));
        }
        Ok(Self { alpha, rho })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// P[X >= 0].
    pub fn positivity(&self) -> f64 {
        self.rho
    }

    /// alpha = 1 with rho in {0, 1} degenerates to a point mass.
    pub fn is_degenerate(&self) -> bool {
        self.alpha == 1.0 && (self.rho == 0.0 || self.rho == 1.0)
    }
}

/// Closed support of the distribution; None means unbounded on that side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportInfo {
    pub left: Option<f64>,
    pub right: Option<f64>,
}

impl SupportInfo {
    pub fn contains(&self, x: f64) -> bool {
        self.left.map_or(true, |l| x >= l) && self.right.map_or(true, |r| x <= r)
    }
}

/// a_alpha = alpha^{-1} (1-alpha)^{1-1/alpha} for alpha in (0,1).
pub fn a_alpha(alpha: f64) -> f64 {
    (1.0 - alpha).powf(1.0 - 1.0 / alpha) / alpha
}

/// Left end of the support of the one-sided law: b_alpha = 1/a_alpha.
pub fn b_alpha(alpha: f64) -> f64 {
    alpha * (1.0 - alpha).powf(1.0 / alpha - 1.0)
}

/// Right end of the support for the spectrally negative case alpha > 1:
/// alpha (alpha-1)^{1/alpha - 1}.
pub fn extreme_edge(alpha: f64) -> f64 {
    alpha * (alpha - 1.0).powf(1.0 / alpha - 1.0)
}

/// Exact support endpoints.
pub fn support(p: StableParams) -> SupportInfo {
    let (alpha, rho) = (p.alpha(), p.rho());
    if alpha == 2.0 {
        return SupportInfo { left: Some(-2.0), right: Some(2.0) };
    }
    if alpha == 1.0 {
        // point masses at +-1 for rho in {0,1}; the line otherwise
        if rho == 1.0 {
            return SupportInfo { left: Some(1.0), right: Some(1.0) };
        }
        if rho == 0.0 {
            return SupportInfo { left: Some(-1.0), right: Some(-1.0) };
        }
        return SupportInfo { left: None, right: None };
    }
    if alpha < 1.0 {
        if rho == 1.0 {
            return SupportInfo { left: Some(b_alpha(alpha)), right: None };
        }
        if rho == 0.0 {
            return SupportInfo { left: None, right: Some(-b_alpha(alpha)) };
        }
        return SupportInfo { left: None, right: None };
    }
    // alpha in (1, 2)
    let edge = extreme_edge(alpha);
    if rho == 1.0 / alpha {
        SupportInfo { left: None, right: Some(edge) }
    } else if rho == 1.0 - 1.0 / alpha {
        SupportInfo { left: Some(-edge), right: None }
    } else {
        SupportInfo { left: None, right: None }
    }
}
