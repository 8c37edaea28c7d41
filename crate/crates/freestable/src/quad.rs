//! Adaptive quadrature and oscillatory-tail summation.
//!
//! The core rule is Gauss-Legendre with error estimation by interval
//! halving. Semi-convergent Fourier-type tails (envelope O(t^{-3/2})) are
//! summed panel by panel at the oscillation scale and accelerated with the
//! Wynn epsilon algorithm, which annihilates sums of geometric components
//! and therefore copes with integrands carrying several frequencies.

use std::sync::OnceLock;

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and P_n'(x) by recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            pp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.push((x, w));
        if n - 1 - i != i {
            out.push((-x, w));
        }
    }
    out
}

fn gl15() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(15))
}

fn gl7() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(7))
}

/// Fixed 15-point Gauss rule on [a, b].
pub fn gauss15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for &(x, w) in gl15() {
        acc += w * f(c + h * x);
    }
    acc * h
}

/// Fixed 7-point Gauss rule; enough for well-decayed smooth panels.
pub fn gauss7<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for &(x, w) in gl7() {
        acc += w * f(c + h * x);
    }
    acc * h
}

/// Adaptive quadrature on [a, b] by recursive halving with a 15-point
/// Gauss rule. Returns (value, error estimate).
pub fn adaptive<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> (f64, f64) {
    let whole = gauss15(f, a, b);
    let mut st = AdaptState {
        f,
        abs_tol,
        rel_tol,
        scale: whole.abs().max(abs_tol),
        full_len: (b - a).abs().max(1e-300),
        err: 0.0,
        evals: 15,
    };
    let v = adapt_rec(&mut st, a, b, whole, 0);
    (v, st.err)
}

struct AdaptState<'s, F> {
    f: &'s mut F,
    abs_tol: f64,
    rel_tol: f64,
    scale: f64,
    full_len: f64,
    err: f64,
    evals: usize,
}

fn adapt_rec<F: FnMut(f64) -> f64>(
    st: &mut AdaptState<F>,
    a: f64,
    b: f64,
    whole: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let left = gauss15(st.f, a, m);
    let right = gauss15(st.f, m, b);
    st.evals += 30;
    st.scale = st.scale.max((left + right).abs());
    let diff = (left + right - whole).abs();
    let tol = st.abs_tol.max(st.rel_tol * st.scale);
    if diff < tol * ((b - a) / st.full_len).max(1e-6) || depth >= 48 || st.evals > 2_000_000 {
        st.err += diff;
        return left + right;
    }
    adapt_rec(st, a, m, left, depth + 1) + adapt_rec(st, m, b, right, depth + 1)
}

/// Wynn epsilon acceleration of a sequence of partial sums.
/// Returns (limit, error estimate).
pub fn wynn_epsilon(sums: &[f64]) -> (f64, f64) {
    let n = sums.len();
    if n == 0 {
        return (0.0, f64::INFINITY);
    }
    if n == 1 {
        return (sums[0], f64::INFINITY);
    }
    let mut prev: Vec<f64> = vec![0.0; n + 1]; // eps_{-1}
    let mut cur: Vec<f64> = sums.to_vec(); // eps_0
    let mut best = *sums.last().unwrap();
    let mut best_err = f64::INFINITY;
    let mut col = 0usize;
    while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 {
                // exact convergence
                return (cur[i + 1], 0.0);
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        col += 1;
        if col % 2 == 0 {
            // even columns approximate the limit
            if next.len() >= 2 {
                let tail_err = (next[next.len() - 1] - next[next.len() - 2]).abs();
                if tail_err < best_err {
                    best_err = tail_err;
                    best = next[next.len() - 1];
                }
            } else if next.len() == 1 {
                let tail_err = (next[0] - best).abs();
                if tail_err < best_err {
                    best_err = tail_err;
                    best = next[0];
                }
            }
        }
        prev = cur;
        cur = next;
    }
    (best, best_err)
}

/// Integrate f on [t0, infinity) where f oscillates with (combined) period
/// at most `period` and has an algebraically or exponentially decaying
/// envelope. Panels of half a period are summed; if plain summation stalls
/// the partial sums are Wynn-accelerated.
pub fn oscillatory_tail<F: FnMut(f64) -> f64>(
    f: &mut F,
    t0: f64,
    period: f64,
    abs_tol: f64,
    max_panels: usize,
) -> (f64, f64) {
    let half = 0.5 * period;
    let mut sums = Vec::with_capacity(max_panels);
    let mut acc = 0.0;
    let mut t = t0;
    let mut small_run = 0usize;
    for _ in 0..max_panels {
        let (p, _) = adaptive(f, t, t + half, abs_tol * 0.02, 1e-13);
        acc += p;
        sums.push(acc);
        t += half;
        if p.abs() < 0.25 * abs_tol {
            small_run += 1;
            if small_run >= 3 {
                // plainly convergent; no acceleration needed
                return (acc, p.abs() + abs_tol * 0.1);
            }
        } else {
            small_run = 0;
        }
    }
    let (limit, err) = wynn_epsilon(&sums);
    (limit, err)
}
