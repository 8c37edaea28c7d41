//! Symbolic Mellin transforms: finite products of Gamma factors, a
//! constant raised to s, and rational factors, evaluated in log form.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;

/// E[X^s] written as C^s * prod Gamma(a + b s)^{sign} * prod (p + q s)^{sign}.
#[derive(Debug, Clone, Default)]
pub struct MellinExpr {
    /// C > 0 contributing C^s.
    pub constant_base: f64,
    /// (a, b, sign): Gamma(a + b s)^{sign}.
    pub gamma_factors: Vec<(f64, f64, i32)>,
    /// (p, q, sign): (p + q s)^{sign}.
    pub rational_factors: Vec<(f64, f64, i32)>,
}

impl MellinExpr {
    pub fn new() -> Self {
        Self { constant_base: 1.0, gamma_factors: Vec::new(), rational_factors: Vec::new() }
    }

    pub fn with_constant(mut self, c: f64) -> Self {
        assert!(c > 0.0, "constant base must be positive");
        self.constant_base *= c;
        self
    }

    pub fn gamma(mut self, a: f64, b: f64, sign: i32) -> Self {
        self.gamma_factors.push((a, b, sign));
        self
    }

    pub fn rational(mut self, p: f64, q: f64, sign: i32) -> Self {
        self.rational_factors.push((p, q, sign));
        self
    }

    /// Mellin transform of a Beta(a, b) factor raised to `power` (+1 or -1):
    /// E[B^{ps}] = Gamma(a + p s) Gamma(a + b) / (Gamma(a) Gamma(a + b + p s)).
    pub fn beta_moment(mut self, a: f64, b: f64, power: f64) -> Self {
        self.gamma_factors.push((a, power, 1));
        self.gamma_factors.push((a + b, power, -1));
        // constant ratio Gamma(a+b)/Gamma(a) as zero-slope gamma factors
        self.gamma_factors.push((a + b, 0.0, 1));
        self.gamma_factors.push((a, 0.0, -1));
        self
    }

    /// Product of two expressions.
    pub fn product(mut self, other: &MellinExpr) -> Self {
        self.constant_base *= other.constant_base;
        self.gamma_factors.extend_from_slice(&other.gamma_factors);
        self.rational_factors.extend_from_slice(&other.rational_factors);
        self
    }

    /// Distance from the nearest Gamma pole or rational zero along s.
    pub fn pole_distance(&self, s: f64) -> f64 {
        let mut d = f64::INFINITY;
        for &(a, b, _) in &self.gamma_factors {
            let z = a + b * s;
            if z <= 0.5 {
                d = d.min((z - z.round()).abs());
            }
        }
        for &(p, q, _) in &self.rational_factors {
            d = d.min((p + q * s).abs());
        }
        d
    }

    /// log of the (positive) value at real s; errors within 1e-3 of a pole.
    pub fn eval_ln(&self, s: f64) -> Result<f64> {
        if self.pole_distance(s) < 1e-3 {
            return Err(Error::GammaPole(s));
        }
        let mut acc = s * self.constant_base.ln();
        for &(a, b, sign) in &self.gamma_factors {
            let z = a + b * s;
            if z <= 0.0 {
                return Err(Error::GammaPole(s));
            }
            acc += sign as f64 * ln_gamma(z);
        }
        for &(p, q, sign) in &self.rational_factors {
            let z = p + q * s;
            if z <= 0.0 {
                return Err(Error::Domain(format!("rational factor nonpositive at s = {s}")));
            }
            acc += sign as f64 * z.ln();
        }
        Ok(acc)
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        Ok(self.eval_ln(s)?.exp())
    }
}
