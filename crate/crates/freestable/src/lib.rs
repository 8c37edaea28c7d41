//! Numerical toolkit for the free stable distributions on the line:
//! special-function kernels (Wright, Bessel, generalized Airy, Stirling
//! series), densities and transforms, exact samplers, Lévy measures,
//! boundary-function scans, Mellin identity verification, and density
//! shape classification.

pub mod airy;
pub mod bessel;
pub mod cheb;
pub mod dist;
pub mod edge;
pub mod error;
pub mod gamma;
pub mod ggc;
pub mod identities;
pub mod ks;
pub mod levy;
pub mod mellin_expr;
pub mod params;
pub mod quad;
pub mod rng;
pub mod samplers;
pub mod scan;
pub mod series;
pub mod shape;
pub mod stirling;
pub mod transforms;
pub mod wright;

pub use error::{Error, Result};
pub use params::{support, StableParams, SupportInfo};
pub use scan::{ScanReport, Verdict};
pub use series::{hyp2f1_coeffs, series_pow, RationalSeries, Series, TruncatedPowerSeries};
pub use wright::{wright_phi, WrightParams};

/// A computed value with an accuracy estimate. `flagged` marks results
/// where the estimated error exceeds the operation's target.
#[derive(Debug, Clone, Copy)]
pub struct Eval<T> {
    pub value: T,
    pub err: f64,
    pub flagged: bool,
}

impl<T> Eval<T> {
    pub fn good(value: T, err: f64) -> Self {
        Self { value, err, flagged: false }
    }

    pub fn flagged(value: T, err: f64) -> Self {
        Self { value, err, flagged: true }
    }
}
