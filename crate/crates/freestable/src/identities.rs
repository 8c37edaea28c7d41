//! Verification engine for the identities in law: exact Mellin-expression
//! matching on grids, Monte-Carlo Kolmogorov-Smirnov comparisons, moment
//! checks, stochastic/convex order dominance, and van Dantzig pairs.

use crate::bessel::{bessel_i, bessel_j, bessel_j_zeros, rayleigh_sum_2};
use crate::error::{Error, Result};
use crate::gamma::{hurwitz_zeta, ln_gamma};
use crate::ks::{ecdf, ks_two_sample, mean_se};
use crate::mellin_expr::MellinExpr;
use crate::params::a_alpha;
use crate::rng::RngStream;
use crate::samplers::{sample_k, sample_s, sample_t, sample_x};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Outcome of one identity verification.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub method: String,
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl IdentityReport {
    fn new(name: &str, method: &str, statistic: f64, threshold: f64) -> Self {
        // For KS reports the statistic is a p-value: pass means above the
        // threshold. Everything else passes below.
        let pass = if method == "ks" { statistic > threshold } else { statistic <= threshold };
        Self { name: name.into(), method: method.into(), statistic, threshold, pass }
    }
}

/// q_j = sup{i >= 1 : i p < j n} with the conventions q_0 = 0, q_p = n.
pub fn penson_q(p: u32, n: u32, j: u32) -> Result<u64> {
    if !(1 <= p && p < n && j <= p) {
        return Err(Error::InvalidParameter(format!("penson_q needs 1 <= p < n, 0 <= j <= p (got {p},{n},{j})")));
    }
    if j == 0 {
        return Ok(0);
    }
    if j == p {
        return Ok(n as u64);
    }
    // sup{i : ip < jn} = ceil(jn/p) - 1
    let jn = j as u64 * n as u64;
    Ok(jn.div_ceil(p as u64) - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PensonSide {
    K,
    X,
}

/// Both Mellin expressions of the finite Beta factorization of K_{p/n}^{-p}
/// (resp. X): the left side from the fractional moments with s -> -p s, the
/// right side as the product of Beta moments with the n^n/(p^p (n-p)^{n-p})
/// prefactor.
pub fn penson_mellin(p: u32, n: u32, side: PensonSide) -> Result<(MellinExpr, MellinExpr)> {
    if !(1 <= p && p < n && n <= 8) {
        return Err(Error::InvalidParameter(format!("penson_mellin needs 1 <= p < n <= 8, got ({p},{n})")));
    }
    let (pf, nf) = (p as f64, n as f64);
    let lhs = match side {
        // E[K^{-ps}] = Gamma(1+ns) / (Gamma(1+(n-p)s) Gamma(1+ps))
        PensonSide::K => MellinExpr::new()
            .gamma(1.0, nf, 1)
            .gamma(1.0, nf - pf, -1)
            .gamma(1.0, pf, -1),
        // E[X^{-ps}] = Gamma(1+ns) / (Gamma(2+(n-p)s) Gamma(1+ps))
        PensonSide::X => MellinExpr::new()
            .gamma(1.0, nf, 1)
            .gamma(2.0, nf - pf, -1)
            .gamma(1.0, pf, -1),
    };
    let prefactor = nf.powi(n as i32) / (pf.powi(p as i32) * (nf - pf).powi((n - p) as i32));
    let mut rhs = MellinExpr::new().with_constant(prefactor);
    for j in 0..p {
        let qj = penson_q(p, n, j)?;
        let qj1 = penson_q(p, n, j + 1)?;
        for i in (qj + 1)..qj1 {
            let a = i as f64 / nf;
            let offset = if side == PensonSide::X { 1.0 } else { 0.0 };
            let b = (i as f64 - j as f64 + offset) / (nf - pf) - a;
            if b <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "Beta parameter b = {b} <= 0 at (p,n,i,j) = ({p},{n},{i},{j})"
                )));
            }
            rhs = rhs.beta_moment(a, b, 1.0);
        }
    }
    for j in 1..p {
        let qj = penson_q(p, n, j)? as f64;
        let a = qj / nf;
        let b = j as f64 / pf - a;
        if b <= 0.0 {
            return Err(Error::InvalidParameter(format!("corner Beta parameter b = {b} <= 0")));
        }
        rhs = rhs.beta_moment(a, b, 1.0);
    }
    Ok((lhs, rhs))
}

/// Max |log lhs - log rhs| over the grid, compared against tol.
pub fn verify_mellin(
    name: &str,
    lhs: &MellinExpr,
    rhs: &MellinExpr,
    s_grid: &[f64],
    tol: f64,
) -> Result<IdentityReport> {
    let mut stat = 0.0f64;
    for &s in s_grid {
        let l = lhs.eval_ln(s)?;
        let r = rhs.eval_ln(s)?;
        stat = stat.max((l - r).abs());
    }
    Ok(IdentityReport::new(name, "mellin", stat, tol))
}

/// 3F2[a1, a2, a3; b1, b2; 1] by direct summation with a Hurwitz-zeta tail
/// estimate (terms decay like k^{-1-psi}, psi = b1+b2-a1-a2-a3).
fn hyp3f2_unit(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64) -> Result<f64> {
    let psi = b1 + b2 - a1 - a2 - a3;
    if psi <= 0.05 {
        return Err(Error::Domain(format!("3F2 at unity diverges or converges too slowly (psi = {psi})")));
    }
    let k_max = 20_000usize;
    let mut term = 1.0f64;
    let mut sum = 0.0f64;
    let mut t_half = 0.0f64;
    for k in 0..k_max {
        sum += term;
        if k == k_max / 2 {
            t_half = term;
        }
        let kf = k as f64;
        term *= (a1 + kf) * (a2 + kf) * (a3 + kf) / ((b1 + kf) * (b2 + kf) * (1.0 + kf));
    }
    // model t_k ~ C k^{-1-psi} (1 + c1/k); fit C, c1 at K/2 and K
    let k1 = (k_max / 2) as f64;
    let k2 = k_max as f64;
    let u1 = t_half * k1.powf(1.0 + psi);
    let u2 = term * k2.powf(1.0 + psi);
    let cc1 = (u1 - u2) / (1.0 / k1 - 1.0 / k2);
    let c = u2 - cc1 / k2;
    let tail = c * hurwitz_zeta(1.0 + psi, k2) + cc1 * hurwitz_zeta(2.0 + psi, k2);
    Ok(sum + tail)
}

/// Numeric check of the Beta-Gamma identity
///   1/(B_{a,b} B_{c,d}) - 1 = (Gamma_{b+d}/Gamma_c) *
///       (1/(1 - B_{b,d} B_{c+d-a,a+b}))^{(b+d)}   (size-bias of order b+d),
/// comparing the Mellin transforms of both sides on `s_grid`:
/// the left via the Euler-form 3F2, the right via the transformed series.
pub fn bg4_check(a: f64, b: f64, c: f64, d: f64, s_grid: &[f64], tol: f64) -> Result<IdentityReport> {
    if !(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0) || a >= c + d {
        return Err(Error::InvalidParameter(
            "bg4_check needs a,b,c,d > 0 and a < c+d".into(),
        ));
    }
    let mut stat = 0.0f64;
    for &s in s_grid {
        if s <= -(b + d) || s >= a.min(c) {
            return Err(Error::Domain(format!("s = {s} outside the strip (-(b+d), min(a,c))")));
        }
        // lhs: E[B_{a,b}^{-s}] E[B_{c,d}^{-s}] 3F2[-s, a-s, c-s; a+b-s, c+d-s; 1]
        let ln_mb = |a0: f64, b0: f64| -> f64 {
            ln_gamma(a0 - s) + ln_gamma(a0 + b0) - ln_gamma(a0) - ln_gamma(a0 + b0 - s)
        };
        let f_lhs = hyp3f2_unit(-s, a - s, c - s, a + b - s, c + d - s)?;
        let lhs = ln_mb(a, b) + ln_mb(c, d) + f_lhs.ln();
        // rhs: Gamma-prefactor * 3F2[b, c+d-a, b+d+s; b+d, b+c+d; 1]
        let pref = ln_gamma(b + d + s) + ln_gamma(c - s) + ln_gamma(a + b) + ln_gamma(c + d)
            - ln_gamma(b + d)
            - ln_gamma(c)
            - ln_gamma(a)
            - ln_gamma(b + c + d);
        let f_rhs = hyp3f2_unit(b, c + d - a, b + d + s, b + d, b + c + d)?;
        let rhs = pref + f_rhs.ln();
        stat = stat.max((lhs - rhs).abs());
    }
    Ok(IdentityReport::new(
        &format!("bg4({a:.4},{b:.4},{c:.4},{d:.4})"),
        "mellin",
        stat,
        tol,
    ))
}

/// Two-sample KS between two samplers; the report statistic is the p-value.
pub fn mc_identity<F, G>(
    name: &str,
    mut lhs: F,
    mut rhs: G,
    n: usize,
    seed: u64,
) -> Result<IdentityReport>
where
    F: FnMut(&mut RngStream) -> f64,
    G: FnMut(&mut RngStream) -> f64,
{
    if n < 10_000 {
        return Err(Error::InvalidParameter("mc_identity needs n >= 10^4".into()));
    }
    let base = RngStream::new(seed);
    let mut r1 = base.split(1);
    let mut r2 = base.split(2);
    let xs: Vec<f64> = (0..n).map(|_| lhs(&mut r1)).collect();
    let ys: Vec<f64> = (0..n).map(|_| rhs(&mut r2)).collect();
    if !xs.iter().chain(ys.iter()).all(|v| v.is_finite()) {
        return Err(Error::Domain("degenerate (non-finite) samples".into()));
    }
    let (_, p) = ks_two_sample(xs, ys);
    Ok(IdentityReport::new(name, "ks", p, 0.01))
}

/// |V(Theta_1..Theta_n)|^2 for uniform angles on the circle.
pub fn sample_vandermonde_sq(n: usize, rng: &mut RngStream) -> f64 {
    let thetas: Vec<f64> = (0..n).map(|_| 2.0 * PI * rng.uniform()).collect();
    let mut v = 1.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let s = 0.5 * (thetas[j] - thetas[i]);
            v *= 4.0 * s.sin().powi(2);
        }
    }
    v
}

/// Selberg moment check: empirical E|V_n|^{2s} vs Gamma(1+ns)/Gamma(1+s)^n
/// within 3 standard errors. Statistic is |z|, threshold 3.
pub fn selberg_moment_check(n: usize, s: f64, samples: usize, seed: u64) -> IdentityReport {
    let mut rng = RngStream::new(seed);
    let vals: Vec<f64> = (0..samples)
        .map(|_| sample_vandermonde_sq(n, &mut rng).powf(s))
        .collect();
    let (m, se) = mean_se(&vals);
    let oracle = (ln_gamma(1.0 + n as f64 * s) - n as f64 * ln_gamma(1.0 + s)).exp();
    let z = (m - oracle).abs() / se;
    IdentityReport::new(&format!("selberg-moment(n={n}, s={s})"), "moment", z, 3.0)
}

/// Stochastic dominance A <=_st B from samples: the report statistic is the
/// worst violation max_x (F_B(x) - F_A(x)), which stays inside the KS noise
/// band 3/sqrt(n) under the null.
pub fn st_dominance<F, G>(name: &str, mut low: F, mut high: G, n: usize, seed: u64) -> IdentityReport
where
    F: FnMut(&mut RngStream) -> f64,
    G: FnMut(&mut RngStream) -> f64,
{
    let base = RngStream::new(seed);
    let mut r1 = base.split(1);
    let mut r2 = base.split(2);
    let mut xs: Vec<f64> = (0..n).map(|_| low(&mut r1)).collect();
    let mut ys: Vec<f64> = (0..n).map(|_| high(&mut r2)).collect();
    xs.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
    ys.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
    let mut worst = 0.0f64;
    for &x in xs.iter().chain(ys.iter()) {
        let fa = ecdf(&xs, x);
        let fb = ecdf(&ys, x);
        worst = worst.max(fb - fa);
    }
    IdentityReport::new(name, "ecdf-dominance", worst, 3.0 / (n as f64).sqrt())
}

/// Convex dominance A <=_cx B from samples: equal means within 3 joint
/// standard errors plus stop-loss dominance E(A-k)+ <= E(B-k)+ on a
/// quantile grid (violations measured in pointwise standard errors).
pub fn cx_dominance<F, G>(name: &str, mut low: F, mut high: G, n: usize, seed: u64) -> IdentityReport
where
    F: FnMut(&mut RngStream) -> f64,
    G: FnMut(&mut RngStream) -> f64,
{
    let base = RngStream::new(seed);
    let mut r1 = base.split(1);
    let mut r2 = base.split(2);
    let mut xs: Vec<f64> = (0..n).map(|_| low(&mut r1)).collect();
    let mut ys: Vec<f64> = (0..n).map(|_| high(&mut r2)).collect();
    let (ma, _) = mean_se(&xs);
    let (mb, _) = mean_se(&ys);
    let (_, sa) = mean_se(&xs);
    let (_, sb) = mean_se(&ys);
    let mean_z = (ma - mb).abs() / (sa * sa + sb * sb).sqrt();
    xs.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
    ys.sort_unstable_by(|u, v| u.partial_cmp(v).unwrap());
    // stop-loss via suffix sums
    let stop_loss = |sorted: &[f64], k: f64| -> (f64, f64) {
        let idx = sorted.partition_point(|&v| v <= k);
        let sum: f64 = sorted[idx..].iter().map(|v| v - k).sum();
        let mean = sum / sorted.len() as f64;
        let sq: f64 = sorted[idx..].iter().map(|v| (v - k).powi(2)).sum();
        let var = sq / sorted.len() as f64 - mean * mean;
        (mean, (var.max(0.0) / sorted.len() as f64).sqrt())
    };
    let mut worst_z = mean_z;
    for q in 1..40 {
        let k = ys[(q * n / 40).min(n - 1)];
        let (sl_a, se_a) = stop_loss(&xs, k);
        let (sl_b, se_b) = stop_loss(&ys, k);
        let viol = sl_a - sl_b;
        if viol > 0.0 {
            let z = viol / (se_a * se_a + se_b * se_b).sqrt().max(1e-300);
            worst_z = worst_z.max(z);
        }
    }
    IdentityReport::new(name, "ecdf-dominance", worst_z, 4.0)
}

/// The rescaled one-sided variable V_alpha^{-alpha/(1-alpha)} of the
/// stochastic-order chain, V_alpha = a_alpha X_alpha.
pub fn sample_v_power(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    let x = sample_x(alpha, rng)?;
    Ok((a_alpha(alpha) * x).powf(-alpha / (1.0 - alpha)))
}

/// Stochastic-order chain checks of the one-sided family:
/// (1/e) U W <_st V_alpha^{-alpha/(1-alpha)} <_st V_beta^{...} <_st U
/// for beta < alpha.
pub fn st_order_check(alpha: f64, beta: f64, n: usize, seed: u64) -> Result<IdentityReport> {
    if !(0.0 < beta && beta < alpha && alpha < 1.0) {
        return Err(Error::InvalidParameter("st_order_check needs 0 < beta < alpha < 1".into()));
    }
    Ok(st_dominance(
        &format!("st-order({alpha},{beta})"),
        move |r| sample_v_power(alpha, r).unwrap(),
        move |r| sample_v_power(beta, r).unwrap(),
        n,
        seed,
    ))
}

/// Convex-order chain checks:
/// U <_cx (1-beta) X_beta^{-beta/(1-beta)} <_cx (1-alpha) X_alpha^{...} <_cx U W.
pub fn cx_order_check(alpha: f64, beta: f64, n: usize, seed: u64) -> Result<IdentityReport> {
    if !(0.0 < beta && beta < alpha && alpha < 1.0) {
        return Err(Error::InvalidParameter("cx_order_check needs 0 < beta < alpha < 1".into()));
    }
    Ok(cx_dominance(
        &format!("cx-order({alpha},{beta})"),
        move |r| (1.0 - beta) * sample_x(beta, r).unwrap().powf(-beta / (1.0 - beta)),
        move |r| (1.0 - alpha) * sample_x(alpha, r).unwrap().powf(-alpha / (1.0 - alpha)),
        n,
        seed,
    ))
}

/// Normalized even characteristic function of the power-semicircle family:
/// h(t) = Gamma(nu+1) (t/2)^{-nu} J_nu(t), and h(it) with I_nu.
fn h_hat(nu: f64, t: f64) -> Result<f64> {
    Ok((ln_gamma(nu + 1.0) - nu * (t / 2.0).ln()).exp() * bessel_j(nu, t)?)
}

fn h_hat_imag_axis(nu: f64, t: f64) -> Result<f64> {
    Ok((ln_gamma(nu + 1.0) - nu * (t / 2.0).ln()).exp() * bessel_i(nu, t)?)
}

/// Hadamard partial products over the first `count` zeros, with the exact
/// Rayleigh tail sum_n j^{-2} = 1/(4(nu+1)) folded in as
/// exp(-+ t^2 * tail).
fn h_hadamard(nu: f64, t: f64, zeros: &[f64], imag_axis: bool) -> f64 {
    let mut prod = 1.0;
    let mut partial = 0.0;
    for &j in zeros {
        let r = t * t / (j * j);
        prod *= if imag_axis { 1.0 + r } else { 1.0 - r };
        partial += 1.0 / (j * j);
    }
    let tail = rayleigh_sum_2(nu) - partial;
    prod * (t * t * tail * if imag_axis { 1.0 } else { -1.0 }).exp()
}

/// van Dantzig pair check for the power-semicircle family: the self-
/// reciprocal product g(t) g(it) = 1 with g = J_nu/I_nu, where one factor
/// goes through the series and the other through the Hadamard product over
/// computed zeros; plus the raw Hadamard-vs-series consistency.
pub fn van_dantzig_check(nu: f64, t_grid: &[f64], zero_count: usize, tol: f64) -> Result<IdentityReport> {
    let zeros = bessel_j_zeros(nu, zero_count)?;
    let mut stat = 0.0f64;
    for &t in t_grid {
        let hs = h_hat(nu, t)?;
        let hi = h_hat_imag_axis(nu, t)?;
        if hs.abs() < 1e-12 {
            return Err(Error::Domain(format!("t = {t} is at a Bessel zero")));
        }
        // g(t) via series, g(it) via Hadamard: the product tests the zero
        // table against the series evaluation at both arguments
        let g_series = hs / hi;
        let g_it_hadamard = h_hadamard(nu, t, &zeros, true) / h_hadamard(nu, t, &zeros, false);
        stat = stat.max((g_series * g_it_hadamard - 1.0).abs());
    }
    Ok(IdentityReport::new(&format!("van-dantzig(nu={nu})"), "mellin", stat, tol))
}

/// Hadamard partial (with Rayleigh tail) vs direct series for h(t).
pub fn hadamard_vs_series(nu: f64, t: f64, zero_count: usize) -> Result<f64> {
    let zeros = bessel_j_zeros(nu, zero_count)?;
    let direct = h_hat(nu, t)?;
    let partial = h_hadamard(nu, t, &zeros, false);
    Ok((partial - direct).abs())
}

/// One entry of the identity catalog (External interface: JSON file).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub method: String,
    #[serde(default)]
    pub params: serde_json::Value,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub threshold: Option<f64>,
}

fn default_seed() -> u64 {
    42
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }
}

/// The default identity suite.
pub fn default_catalog() -> Catalog {
    let mut entries = Vec::new();
    for &(p, n) in &[(1u32, 2u32), (1, 3), (2, 3), (2, 5), (3, 4)] {
        for side in ["k", "x"] {
            entries.push(CatalogEntry {
                name: format!("penson-{side}-{p}-{n}"),
                method: "mellin".into(),
                params: serde_json::json!({ "p": p, "n": n }),
                seed: 42,
                threshold: Some(1e-10),
            });
        }
    }
    entries.push(CatalogEntry {
        name: "bg4-x-third".into(),
        method: "mellin".into(),
        params: serde_json::json!({ "a": 2.0/3.0, "b": 5.0/6.0, "c": 1.0/3.0, "d": 2.0/3.0 }),
        seed: 42,
        threshold: Some(1e-8),
    });
    entries.push(CatalogEntry {
        name: "bg4-k-third".into(),
        method: "mellin".into(),
        params: serde_json::json!({ "a": 1.0/3.0, "b": 1.0/6.0, "c": 2.0/3.0, "d": 1.0/3.0 }),
        seed: 42,
        threshold: Some(1e-8),
    });
    for name in [
        "kanter-duality",
        "sf-identity",
        "beta-half",
        "vandermonde-2",
        "vandermonde-cyclic-3",
    ] {
        entries.push(CatalogEntry {
            name: name.into(),
            method: "ks".into(),
            params: serde_json::Value::Null,
            seed: 42,
            threshold: Some(0.01),
        });
    }
    for (n, s) in [(2, 0.5), (2, 1.0), (3, 0.5), (3, 1.0)] {
        entries.push(CatalogEntry {
            name: format!("selberg-{n}-{s}"),
            method: "moment".into(),
            params: serde_json::json!({ "n": n, "s": s }),
            seed: 77,
            threshold: Some(3.0),
        });
    }
    for nu in [0.0, 0.5, 1.0] {
        entries.push(CatalogEntry {
            name: format!("van-dantzig-{nu}"),
            method: "mellin".into(),
            params: serde_json::json!({ "nu": nu }),
            seed: 42,
            threshold: Some(1e-8),
        });
    }
    Catalog { entries }
}

/// Run a catalog entry by name. Unknown names produce an error so that
/// custom catalogs fail loudly instead of silently passing.
pub fn run_entry(entry: &CatalogEntry, n_mc: usize) -> Result<IdentityReport> {
    let seed = entry.seed;
    let name = entry.name.as_str();
    let grid: Vec<f64> = (1..=9).map(|i| 0.1 + 0.2 * (i - 1) as f64).collect();
    let get = |key: &str| -> Option<f64> { entry.params.get(key).and_then(|v| v.as_f64()) };
    let mut report = match name {
        _ if name.starts_with("penson-") => {
            let p = get("p").unwrap_or(1.0) as u32;
            let n = get("n").unwrap_or(2.0) as u32;
            let side = if name.contains("-x-") { PensonSide::X } else { PensonSide::K };
            let (lhs, rhs) = penson_mellin(p, n, side)?;
            verify_mellin(name, &lhs, &rhs, &grid, entry.threshold.unwrap_or(1e-10))?
        }
        _ if name.starts_with("bg4") => {
            let (a, b, c, d) = (
                get("a").ok_or_else(|| Error::Catalog("bg4 needs a".into()))?,
                get("b").ok_or_else(|| Error::Catalog("bg4 needs b".into()))?,
                get("c").ok_or_else(|| Error::Catalog("bg4 needs c".into()))?,
                get("d").ok_or_else(|| Error::Catalog("bg4 needs d".into()))?,
            );
            let lo = -(b + d) * 0.7;
            let hi = a.min(c) * 0.7;
            let sgrid: Vec<f64> = (0..7).map(|i| lo + (hi - lo) * i as f64 / 6.0).collect();
            bg4_check(a, b, c, d, &sgrid, entry.threshold.unwrap_or(1e-8))?
        }
        "kanter-duality" => {
            let alpha = get("alpha").unwrap_or(0.3);
            mc_identity(
                name,
                |r| sample_k(alpha, r).unwrap(),
                |r| sample_k(1.0 - alpha, r).unwrap().powf(1.0 / alpha - 1.0),
                n_mc,
                seed,
            )?
        }
        "sf-identity" => mc_identity(
            name,
            |r| sample_s(r),
            |r| sample_t(r) + r.gamma(2.0).ln(),
            n_mc,
            seed,
        )?,
        "beta-half" => mc_identity(
            name,
            |r| sample_x(0.5, r).unwrap(),
            |r| 1.0 / (4.0 * r.beta(0.5, 1.5)),
            n_mc,
            seed,
        )?,
        "vandermonde-2" => mc_identity(
            name,
            |r| sample_vandermonde_sq(2, r),
            |r| 1.0 / sample_k(0.5, r).unwrap(),
            n_mc,
            seed,
        )?,
        "vandermonde-cyclic-3" => mc_identity(
            name,
            |r| sample_vandermonde_sq(3, r),
            |r| 27.0 * r.beta(1.0 / 3.0, 2.0 / 3.0) * r.beta(2.0 / 3.0, 1.0 / 3.0),
            n_mc,
            seed,
        )?,
        _ if name.starts_with("selberg-") => {
            let n = get("n").unwrap_or(2.0) as usize;
            let s = get("s").unwrap_or(1.0);
            selberg_moment_check(n, s, n_mc, seed)
        }
        _ if name.starts_with("van-dantzig") => {
            let nu = get("nu").unwrap_or(0.5);
            van_dantzig_check(nu, &[0.5, 1.0, 2.0], 400, entry.threshold.unwrap_or(1e-8))?
        }
        _ => return Err(Error::Catalog(format!("unknown catalog entry '{name}'"))),
    };
    report.name = name.to_string();
    Ok(report)
}

/// Run every entry; the boolean is the all-pass flag.
pub fn run_catalog(catalog: &Catalog, n_mc: usize) -> Result<(Vec<IdentityReport>, bool)> {
    let mut reports = Vec::with_capacity(catalog.entries.len());
    let mut all = true;
    for e in &catalog.entries {
        let r = run_entry(e, n_mc)?;
        all &= r.pass;
        reports.push(r);
    }
    Ok((reports, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::sample_w;
    use crate::transforms::mellin_x;
    use approx::assert_relative_eq;

    #[test]
    fn penson_q_values() {
        assert_eq!(penson_q(2, 5, 1).unwrap(), 2);
        assert_eq!(penson_q(2, 3, 1).unwrap(), 1);
        assert_eq!(penson_q(3, 4, 0).unwrap(), 0);
        assert_eq!(penson_q(3, 4, 3).unwrap(), 4);
        // enumeration cross-check
        for (p, n) in [(2u32, 5u32), (3, 4), (2, 3), (3, 7)] {
            for j in 1..p {
                let sup = (1..1000).filter(|i| i * p < j * n).max().unwrap();
                assert_eq!(penson_q(p, n, j).unwrap(), sup as u64, "at ({p},{n},{j})");
            }
        }
        assert!(penson_q(2, 2, 1).is_err());
        assert!(penson_q(2, 5, 3).is_err());
    }

    #[test]
    fn penson_half_is_arcsine_pair() {
        // (1,2,K): K_{1/2}^{-1} = 4 B_{1/2,1/2}; (1,2,X): X_{1/2}^{-1} = 4 B_{1/2,3/2}
        let grid: Vec<f64> = (0..10).map(|i| 0.1 + 0.2 * i as f64).collect();
        let (lk, rk) = penson_mellin(1, 2, PensonSide::K).unwrap();
        let rep = verify_mellin("k-1-2", &lk, &rk, &grid, 1e-10).unwrap();
        assert!(rep.pass, "stat = {}", rep.statistic);
        let (lx, rx) = penson_mellin(1, 2, PensonSide::X).unwrap();
        let rep = verify_mellin("x-1-2", &lx, &rx, &grid, 1e-10).unwrap();
        assert!(rep.pass, "stat = {}", rep.statistic);
        // explicit check against 4^s B-moment at s = 1
        let direct = 4.0 * 0.5 / 2.0; // E[4 B_{1/2,3/2}] = 4 * (1/2)/(2)
        assert_relative_eq!(rx.eval(1.0).unwrap(), direct, max_relative = 1e-12);
    }

    #[test]
    fn penson_suite_passes() {
        let grid: Vec<f64> = (0..10).map(|i| 0.1 + 0.2 * i as f64).collect();
        for &(p, n) in &[(1u32, 2u32), (1, 3), (2, 3), (2, 5), (3, 4)] {
            for side in [PensonSide::K, PensonSide::X] {
                let (l, r) = penson_mellin(p, n, side).unwrap();
                let rep = verify_mellin("t", &l, &r, &grid, 1e-10).unwrap();
                assert!(rep.pass, "penson ({p},{n},{side:?}) stat = {}", rep.statistic);
            }
        }
    }

    #[test]
    fn perturbed_parameter_fails() {
        let grid: Vec<f64> = (0..10).map(|i| 0.1 + 0.2 * i as f64).collect();
        let (l, mut r) = penson_mellin(2, 5, PensonSide::K).unwrap();
        // identical expressions: statistic 0
        let rep0 = verify_mellin("id", &l, &l, &grid, 1e-12).unwrap();
        assert_eq!(rep0.statistic, 0.0);
        r.gamma_factors[0].0 += 1e-3;
        let rep = verify_mellin("tampered", &l, &r, &grid, 1e-10).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn three_f_two_terminating_oracle() {
        // 3F2[-1, a, c; b1, b2; 1] = 1 - a c/(b1 b2) exactly
        let v = hyp3f2_unit(-1.0, 0.7, 1.3, 2.1, 1.9).unwrap();
        assert_relative_eq!(v, 1.0 - 0.7 * 1.3 / (2.1 * 1.9), epsilon = 1e-10);
        // Gauss 2F1 reduction: 3F2[a, b, c; c, d; 1] = Gamma(d)Gamma(d-a-b)/(Gamma(d-a)Gamma(d-b))
        let (a, b, c, d) = (0.3, 0.4, 1.6, 2.2);
        let v = hyp3f2_unit(a, b, c, c, d).unwrap();
        let oracle =
            (ln_gamma(d) + ln_gamma(d - a - b) - ln_gamma(d - a) - ln_gamma(d - b)).exp();
        assert_relative_eq!(v, oracle, max_relative = 1e-9);
    }

    #[test]
    fn bg4_paper_instances_pass() {
        // the two Beta-product factorizations at alpha = 1/3
        let x = bg4_check(
            2.0 / 3.0,
            5.0 / 6.0,
            1.0 / 3.0,
            2.0 / 3.0,
            &[-0.9, -0.5, -0.1, 0.0, 0.1, 0.2],
            1e-8,
        )
        .unwrap();
        assert!(x.pass, "X instance stat = {}", x.statistic);
        let k = bg4_check(
            1.0 / 3.0,
            1.0 / 6.0,
            2.0 / 3.0,
            1.0 / 3.0,
            &[-0.3, -0.2, -0.1, 0.0, 0.1, 0.2],
            1e-8,
        )
        .unwrap();
        assert!(k.pass, "K instance stat = {}", k.statistic);
        // s = 0: both sides equal 1, log-difference 0
        let zero = bg4_check(0.5, 0.5, 0.5, 0.5, &[0.0], 1e-12).unwrap();
        assert!(zero.statistic < 1e-10);
        // precondition
        assert!(bg4_check(2.0, 1.0, 0.5, 0.5, &[0.0], 1e-8).is_err());
    }

    #[test]
    fn vandermonde_two_moment_and_ks() {
        // E|V(T1,T2)|^2 = 2 by the direct integral of 4 sin^2
        let mut rng = RngStream::new(5);
        let vals: Vec<f64> = (0..100_000).map(|_| sample_vandermonde_sq(2, &mut rng)).collect();
        let (m, se) = mean_se(&vals);
        assert!((m - 2.0).abs() < 3.0 * se, "mean {m} +- {se}");
        let rep = mc_identity(
            "vandermonde-2",
            |r| sample_vandermonde_sq(2, r),
            |r| 1.0 / sample_k(0.5, r).unwrap(),
            30_000,
            42,
        )
        .unwrap();
        assert!(rep.pass, "p = {}", rep.statistic);
    }

    #[test]
    fn selberg_moments_pass() {
        for (n, s) in [(2usize, 0.5f64), (2, 1.0), (3, 0.5), (3, 1.0)] {
            let rep = selberg_moment_check(n, s, 100_000, 7 + n as u64);
            assert!(rep.pass, "selberg n={n} s={s}: z = {}", rep.statistic);
        }
    }

    #[test]
    fn st_chain_and_endpoints() {
        let n = 30_000;
        let rep = st_order_check(0.6, 0.3, n, 42).unwrap();
        assert!(rep.pass, "middle chain: {}", rep.statistic);
        // V_beta^{...} <_st U
        let upper = st_dominance(
            "st-upper",
            |r| sample_v_power(0.3, r).unwrap(),
            |r| r.uniform(),
            n,
            43,
        );
        assert!(upper.pass, "upper endpoint: {}", upper.statistic);
        // (1/e) U W <_st V_alpha^{...}
        let lower = st_dominance(
            "st-lower",
            |r| r.uniform() * sample_w(r) / std::f64::consts::E,
            |r| sample_v_power(0.6, r).unwrap(),
            n,
            44,
        );
        assert!(lower.pass, "lower endpoint: {}", lower.statistic);
        // alpha = beta: dominance within noise
        let null = st_dominance(
            "st-null",
            |r| sample_v_power(0.5, r).unwrap(),
            |r| sample_v_power(0.5, r).unwrap(),
            n,
            45,
        );
        assert!(null.pass);
    }

    #[test]
    fn cx_chain_and_endpoints() {
        let n = 30_000;
        let rep = cx_order_check(0.6, 0.3, n, 46).unwrap();
        assert!(rep.pass, "cx middle: {}", rep.statistic);
        let lower = cx_dominance(
            "cx-lower",
            |r| r.uniform(),
            |r| (1.0 - 0.3) * sample_x(0.3, r).unwrap().powf(-0.3 / 0.7),
            n,
            47,
        );
        assert!(lower.pass, "cx lower endpoint: {}", lower.statistic);
        let upper = cx_dominance(
            "cx-upper",
            |r| (1.0 - 0.6) * sample_x(0.6, r).unwrap().powf(-0.6 / 0.4),
            |r| r.uniform() * sample_w(r),
            n,
            48,
        );
        assert!(upper.pass, "cx upper endpoint: {}", upper.statistic);
        // sanity: the chain means agree with the Mellin values
        let m = mellin_x(0.5, -0.5 / 0.5).unwrap();
        assert!(m.is_finite());
    }

    #[test]
    fn van_dantzig_products() {
        for &nu in &[0.0, 0.5, 1.0] {
            let rep = van_dantzig_check(nu, &[0.5, 1.0, 2.0], 400, 1e-8).unwrap();
            assert!(rep.pass, "nu = {nu}: residual {}", rep.statistic);
        }
        // nu = 1/2 reduces to (sin t/t)(t/sinh t) and its reciprocal
        let t: f64 = 1.3;
        let g = (t.sin() / t) / (t.sinh() / t);
        let git = (t.sinh() / t) / (t.sin() / t);
        assert_relative_eq!(g * git, 1.0, epsilon = 1e-14);
        // Hadamard partial vs series at nu = 1, t = 2 with 200 zeros
        let d = hadamard_vs_series(1.0, 2.0, 200).unwrap();
        assert!(d < 1e-4, "Hadamard deviation {d}");
        // error at a Bessel zero
        let j01 = bessel_j_zeros(0.0, 1).unwrap()[0];
        assert!(van_dantzig_check(0.0, &[j01], 10, 1e-8).is_err());
    }

    #[test]
    fn catalog_round_trip_and_unknown_entry() {
        let cat = default_catalog();
        let text = cat.to_json();
        let back = Catalog::from_json(&text).unwrap();
        assert_eq!(back.entries.len(), cat.entries.len());
        let bad = CatalogEntry {
            name: "does-not-exist".into(),
            method: "ks".into(),
            params: serde_json::Value::Null,
            seed: 1,
            threshold: None,
        };
        assert!(run_entry(&bad, 10_000).is_err());
    }

    #[test]
    fn default_catalog_fast_subset_runs() {
        let cat = default_catalog();
        // run the pure-Mellin entries (fast); the MC entries run in the
        // acceptance suite at full n
        for e in cat.entries.iter().filter(|e| e.method == "mellin") {
            let rep = run_entry(e, 10_000).unwrap();
            assert!(rep.pass, "{}: stat = {}", rep.name, rep.statistic);
        }
    }
}
