//! Truncated power series arithmetic at a fixed order, generic over the
//! coefficient field so the same recurrences run in f64 and in exact
//! rationals.
//!
//! All operations truncate back to the order of the inputs. Reading the
//! 2n-th Taylor coefficient and multiplying by (2n)! replaces every
//! "d^{2n}/dv^{2n} at v = 0" in the edge-expansion layer; nothing is ever
//! differentiated numerically.

use crate::error::{Error, Result};
use num_traits::{FromPrimitive, One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient field for series arithmetic: f64 or BigRational.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embeds in coefficient field")
    }
}

impl Coeff for f64 {}
impl Coeff for num_rational::BigRational {}

/// Power series c_0 + c_1 v + ... + c_N v^N, closed at order N.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedPowerSeries<T> {
    coeffs: Vec<T>,
}

/// Floating-point series used throughout the edge-expansion machinery.
pub type Series = TruncatedPowerSeries<f64>;
/// Exact rational series, used where the reference values must be exact.
pub type RationalSeries = TruncatedPowerSeries<num_rational::BigRational>;

impl<T: Coeff> TruncatedPowerSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = T::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Truncate or zero-extend to the given order.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn scale(&self, s: T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().max(other.order());
        let coeffs = (0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().max(other.order());
        let coeffs = (0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self { coeffs }
    }

    /// Product truncated to max(order(self), order(other)).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().max(other.order());
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs }
    }

    /// Reciprocal series; requires c_0 != 0.
    pub fn recip(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let n = self.order();
        let mut r = vec![T::zero(); n + 1];
        r[0] = T::one() / c0.clone();
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeff(j) * r[k - j].clone();
            }
            r[k] = -(acc / c0.clone());
        }
        Ok(Self { coeffs: r })
    }

    /// exp of a series with zero constant term (kept exact over rationals).
    pub fn exp0(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidParameter(
                "exp0 requires a zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut e = vec![T::zero(); n + 1];
        e[0] = T::one();
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + T::from_int(j as i64) * self.coeff(j) * e[k - j].clone();
            }
            e[k] = acc / T::from_int(k as i64);
        }
        Ok(Self { coeffs: e })
    }

    /// Integer power by repeated multiplication.
    pub fn powi(&self, mut p: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while p > 0 {
            if p & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            p >>= 1;
        }
        acc
    }
}

impl TruncatedPowerSeries<num_rational::BigRational> {
    /// Rational power via the Miller recurrence; exact. Requires c_0 = 1
    /// (the binomial series of (1+u)^{p/q} has rational coefficients).
    pub fn pow_ratio(&self, p: &num_rational::BigRational) -> Result<Self> {
        use num_rational::BigRational;
        if !self.coeff(0).is_one() {
            return Err(Error::NonPositiveLeadingCoefficient);
        }
        let n = self.order();
        let mut c = vec![BigRational::zero(); n + 1];
        c[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                let w = p.clone() * BigRational::from_i64(j as i64).unwrap()
                    - BigRational::from_i64((k - j) as i64).unwrap();
                acc += w * self.coeff(j) * c[k - j].clone();
            }
            c[k] = acc / BigRational::from_i64(k as i64).unwrap();
        }
        Ok(Self { coeffs: c })
    }
}

impl Series {
    /// Real power s^p via the J.C.P. Miller recurrence. Requires c_0 > 0
    /// unless p is a (small) integer, in which case c_0 != 0 suffices.
    pub fn pow_real(&self, p: f64) -> Result<Self> {
        let c0 = self.coeff(0);
        let is_int = p == p.round() && p.abs() < 1e6;
        if c0 == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if c0 < 0.0 && !is_int {
            return Err(Error::NonPositiveLeadingCoefficient);
        }
        let n = self.order();
        let mut c = vec![0.0; n + 1];
        c[0] = if is_int { c0.powi(p as i32) } else { c0.powf(p) };
        for k in 1..=n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (p * j as f64 - (k - j) as f64) * self.coeff(j) * c[k - j];
            }
            c[k] = acc / (k as f64 * c0);
        }
        Ok(Self { coeffs: c })
    }

    /// Natural log of a series with c_0 > 0.
    pub fn ln(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0 <= 0.0 {
            return Err(Error::NonPositiveLeadingCoefficient);
        }
        let n = self.order();
        let mut l = vec![0.0; n + 1];
        l[0] = c0.ln();
        for k in 1..=n {
            let mut acc = 0.0;
            for j in 1..k {
                acc += j as f64 * l[j] * self.coeff(k - j);
            }
            l[k] = (k as f64 * self.coeff(k) - acc) / (k as f64 * c0);
        }
        Ok(Self { coeffs: l })
    }
}

/// Coefficients of the Gauss hypergeometric series 2F1(a, b; c; v):
/// coefficient k is (a)_k (b)_k / ((c)_k k!).
pub fn hyp2f1_coeffs(a: f64, b: f64, c: f64, order: usize) -> Result<Series> {
    if c <= 0.0 && c == c.round() {
        return Err(Error::InvalidParameter(format!(
            "2F1 undefined for c = {c} (non-positive integer)"
        )));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = 1.0;
    coeffs.push(term);
    for k in 0..order {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        coeffs.push(term);
    }
    Ok(Series::new(coeffs))
}

/// series_pow: s(v)^p at the order of s. Spec'd entry point over pow_real.
pub fn series_pow(s: &Series, p: f64) -> Result<Series> {
    s.pow_real(p)
}
