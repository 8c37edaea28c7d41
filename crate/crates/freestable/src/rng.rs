//! Seeded, splittable, counter-based uniform stream. Every sampler in this
//! crate is a deterministic function of an `RngStream` value, so a fixed
//! (seed, counter) pair reproduces a sample path bit for bit.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based generator: output n is mix(key + n * GOLDEN). Split
/// streams re-key with a mixed domain tag, so parent and children produce
/// unrelated sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    key: u64,
    counter: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { key: mix(seed ^ 0x5851_F42D_4C95_7F2D), counter: 0 }
    }

    pub fn state(&self) -> (u64, u64) {
        (self.key, self.counter)
    }

    /// Child stream k; children are pairwise distinct and decoupled from
    /// the parent's continuation.
    pub fn split(&self, k: u64) -> Self {
        Self {
            key: mix(self.key ^ mix(k.wrapping_mul(GOLDEN) ^ 0x94D0_49BB_1331_11EB)),
            counter: 0,
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform on the open interval (0, 1).
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// Unit exponential.
    #[inline]
    pub fn exponential(&mut self) -> f64 {
        -self.uniform().ln()
    }

    /// Standard Laplace (density e^{-|x|}/2).
    #[inline]
    pub fn laplace(&mut self) -> f64 {
        let e = self.exponential();
        if self.next_u64() & 1 == 0 {
            e
        } else {
            -e
        }
    }

    /// Standard normal via the polar method.
    pub fn normal(&mut self) -> f64 {
        loop {
            let u = 2.0 * self.uniform() - 1.0;
            let v = 2.0 * self.uniform() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                return u * (-2.0 * s.ln() / s).sqrt();
            }
        }
    }

    /// Gamma(shape) with unit scale, Marsaglia-Tsang; shape < 1 boosted
    /// through Gamma(shape+1) * U^{1/shape}.
    pub fn gamma(&mut self, shape: f64) -> f64 {
        assert!(shape > 0.0, "gamma shape must be positive");
        if shape < 1.0 {
            let g = self.gamma(shape + 1.0);
            let u = self.uniform();
            return g * u.powf(1.0 / shape);
        }
        let d = shape - 1.0 / 3.0;
        let c = 1.0 / (9.0 * d).sqrt();
        loop {
            let x = self.normal();
            let v = 1.0 + c * x;
            if v <= 0.0 {
                continue;
            }
            let v3 = v * v * v;
            let u = self.uniform();
            if u < 1.0 - 0.0331 * x.powi(4) {
                return d * v3;
            }
            if u.ln() < 0.5 * x * x + d * (1.0 - v3 + v3.ln()) {
                return d * v3;
            }
        }
    }

    /// Beta(a, b) via the gamma ratio.
    pub fn beta(&mut self, a: f64, b: f64) -> f64 {
        let x = self.gamma(a);
        let y = self.gamma(b);
        x / (x + y)
    }
}
