//! Structured result of monotonicity / sign-change / dominance scans.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Monotone,
    Oscillating,
    Inconclusive,
}

/// Grid scan outcome: abscissae, values, tolerance violations and the
/// extremes, plus a verdict that is recomputable from the data.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    /// (index, magnitude) of each violation of the scanned property.
    pub violations: Vec<(usize, f64)>,
    pub verdict: Verdict,
    pub extremes: (f64, f64),
}

impl ScanReport {
    /// Monotonicity report: violations are decrements beyond `tol`.
    /// `oscillation_signs` (when >= 3) overrides the verdict to Oscillating.
    pub fn monotone_scan(grid: Vec<f64>, values: Vec<f64>, tol: f64) -> Self {
        assert_eq!(grid.len(), values.len());
        let mut violations = Vec::new();
        for i in 1..values.len() {
            let drop = values[i - 1] - values[i];
            if drop > tol {
                violations.push((i, drop));
            }
        }
        let extremes = extremes(&values);
        let verdict = if grid.len() < 2 {
            Verdict::Inconclusive
        } else if violations.is_empty() {
            Verdict::Monotone
        } else {
            Verdict::Oscillating
        };
        Self { grid, values, violations, verdict, extremes }
    }

    /// Sign-scan report: violations record robust sign changes.
    pub fn sign_scan(grid: Vec<f64>, values: Vec<f64>, gate: f64) -> Self {
        assert_eq!(grid.len(), values.len());
        let mut violations = Vec::new();
        let mut last_sign = 0.0f64;
        for (i, &v) in values.iter().enumerate() {
            if v.abs() <= gate {
                continue;
            }
            let s = v.signum();
            if last_sign != 0.0 && s != last_sign {
                violations.push((i, v.abs()));
            }
            last_sign = s;
        }
        let extremes = extremes(&values);
        let verdict = if grid.len() < 2 {
            Verdict::Inconclusive
        } else if violations.len() >= 3 {
            Verdict::Oscillating
        } else {
            Verdict::Monotone
        };
        Self { grid, values, violations, verdict, extremes }
    }

    pub fn sign_changes(&self) -> usize {
        self.violations.len()
    }
}

fn extremes(values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}
