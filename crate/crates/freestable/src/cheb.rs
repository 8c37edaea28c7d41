//! Chebyshev interpolation on an interval: fit at Chebyshev points,
//! Clenshaw evaluation, and differentiation in coefficient space.

/// Chebyshev series sum c_k T_k on [a, b].
#[derive(Debug, Clone)]
pub struct ChebSeries {
    pub a: f64,
    pub b: f64,
    pub c: Vec<f64>,
}

impl ChebSeries {
    /// Interpolate f at deg+1 Chebyshev-Lobatto points.
    pub fn fit<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, deg: usize) -> Self {
        let n = deg;
        let vals: Vec<f64> = (0..=n)
            .map(|j| {
                let x = (std::f64::consts::PI * j as f64 / n as f64).cos();
                f(0.5 * (a + b) + 0.5 * (b - a) * x)
            })
            .collect();
        // type-1 DCT by direct summation (degrees stay modest here)
        let mut c = vec![0.0; n + 1];
        for (k, ck) in c.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, vj) in vals.iter().enumerate() {
                let w = if j == 0 || j == n { 0.5 } else { 1.0 };
                acc += w * vj * (std::f64::consts::PI * (k * j) as f64 / n as f64).cos();
            }
            *ck = 2.0 * acc / n as f64;
        }
        c[0] *= 0.5;
        c[n] *= 0.5;
        Self { a, b, c }
    }

    /// Clenshaw evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        let t = (2.0 * x - self.a - self.b) / (self.b - self.a);
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &ck in self.c.iter().skip(1).rev() {
            let tmp = 2.0 * t * b1 - b2 + ck;
            b2 = b1;
            b1 = tmp;
        }
        t * b1 - b2 + self.c[0]
    }

    /// Coefficient-space derivative: d_k = d_{k+2} + 2(k+1) c_{k+1}.
    pub fn derivative(&self) -> Self {
        let n = self.c.len();
        if n <= 1 {
            return Self { a: self.a, b: self.b, c: vec![0.0] };
        }
        let mut d = vec![0.0; n - 1];
        for k in (0..n - 1).rev() {
            let up = if k + 2 < n - 1 { d[k + 2] } else { 0.0 };
            d[k] = up + 2.0 * (k as f64 + 1.0) * self.c[k + 1];
        }
        d[0] *= 0.5;
        let scale = 2.0 / (self.b - self.a);
        Self { a: self.a, b: self.b, c: d.iter().map(|v| v * scale).collect() }
    }

    /// Max |value| on a dense grid (interior of the interval).
    pub fn sup_on_grid(&self, pts: usize) -> f64 {
        let mut m = 0.0f64;
        for i in 0..=pts {
            let x = self.a + (self.b - self.a) * i as f64 / pts as f64;
            m = m.max(self.eval(x).abs());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn fits_and_evaluates_smooth_functions() {
        let s = ChebSeries::fit(|x: f64| (2.0 * x).sin() + x * x, -1.5, 2.0, 48);
        for &x in &[-1.2, -0.3, 0.0, 0.7, 1.9] {
            assert_relative_eq!(s.eval(x), (2.0 * x).sin() + x * x, epsilon = 1e-12);
        }
    }

    #[test]
    fn differentiates_spectrally() {
        let s = ChebSeries::fit(|x: f64| (3.0 * x).exp(), 0.0, 1.0, 40);
        let d = s.derivative();
        for &x in &[0.1, 0.5, 0.9] {
            assert_relative_eq!(d.eval(x), 3.0 * (3.0 * x).exp(), max_relative = 1e-9);
        }
        // second derivative
        let d2 = d.derivative();
        assert_relative_eq!(d2.eval(0.5), 9.0 * 1.5f64.exp(), max_relative = 1e-7);
    }

    #[test]
    fn polynomial_is_exact() {
        let s = ChebSeries::fit(|x: f64| 1.0 + 2.0 * x - x.powi(3), -1.0, 1.0, 8);
        let d = s.derivative();
        for &x in &[-0.9, 0.0, 0.4] {
            assert_relative_eq!(d.eval(x), 2.0 - 3.0 * x * x, epsilon = 1e-12);
        }
    }
}
