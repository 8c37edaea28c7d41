//! Command-line front end: evaluation, sampling, scanning and verification
//! with CSV/JSON output. All numeric output uses 17 significant digits and
//! fixed seeds, so identical invocations produce byte-identical files.

use clap::{Args, Parser, Subcommand};
use freestable::dist::{cdf, pdf, pdf_c, pdf_numeric, pdf_t};
use freestable::edge::{edge_coeffs, edge_coeffs_alpha1};
use freestable::ggc::{charfn_zero_scan, g_alpha, ggc_scan, re_f_cut, theta};
use freestable::identities::{self, default_catalog, Catalog, run_catalog};
use freestable::levy::{
    cm_jump_check, levy_density_c, levy_density_t, levy_reconstruct_t, log_mgf_t,
    sd_monotone_check,
};
use freestable::rng::RngStream;
use freestable::samplers::{
    sample_c, sample_k, sample_s, sample_t, sample_w, sample_x, sample_z, GeneralSampler,
    SigmaSampler,
};
use freestable::shape::{derivative_zero_counts, ShapeSupport};
use freestable::transforms::{charfn, mellin_k, mellin_x, neg_moment_k, neg_moment_x};
use freestable::{airy::airy_type, StableParams, Verdict};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "freestable",
    about = "Free stable distributions: densities, transforms, samplers, scans, verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output file (default: stdout)
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Output format for tabular data
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct GridArgs {
    /// Grid as min:max:points (linear); prefix log: for log spacing
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let (log, body) = match spec.strip_prefix("log:") {
        Some(rest) => (true, rest),
        None => (false, spec),
    };
    let parts: Vec<&str> = body.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{spec}' is not min:max:points"));
    }
    let min: f64 = parts[0].parse().map_err(|e| format!("grid min: {e}"))?;
    let max: f64 = parts[1].parse().map_err(|e| format!("grid max: {e}"))?;
    let n: usize = parts[2].parse().map_err(|e| format!("grid points: {e}"))?;
    if n == 0 || (log && (min <= 0.0 || max <= 0.0)) || max < min {
        return Err(format!("grid '{spec}' is degenerate"));
    }
    if n == 1 {
        return Ok(vec![min]);
    }
    Ok((0..n)
        .map(|i| {
            let t = i as f64 / (n - 1) as f64;
            if log {
                min * (max / min).powf(t)
            } else {
                min + (max - min) * t
            }
        })
        .collect())
}

#[derive(Subcommand)]
enum Command {
    /// Density values on a grid
    Pdf {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        rho: f64,
        #[command(flatten)]
        grid: GridArgs,
        /// Force numeric inversion even where a closed form exists
        #[arg(long)]
        numeric: bool,
    },
    /// Distribution function values on a grid
    Cdf {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        rho: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Characteristic function on a grid
    Charfn {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        rho: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Draw samples from one of the generators
    Sample {
        /// One of x, k, z, w, t, s, general, c, sigma
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
        /// a/b coefficients for kind = c
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b: f64,
        /// order/terms for kind = sigma
        #[arg(long, default_value_t = 0.5)]
        nu: f64,
        #[arg(long, default_value_t = 500)]
        terms: usize,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Mellin moments of X and K on an s-grid plus negative integer moments
    Moments {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// theta_alpha over a log grid with the monotonicity verdict
    ThetaScan {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value = "log:1e-3:1e3:200")]
        grid: String,
    },
    /// Boundary-function report: theta, Re F and the G integral
    GgcReport {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Generalized Airy function Ai_k on a grid
    Airy {
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Left-edge expansion coefficients a_n(alpha)
    EdgeCoeffs {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Lévy measure checks for the exceptional 1-stable family
    LevyCheck {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        b: f64,
    },
    /// Run a verification suite: identities, levy, scans, orderings,
    /// shape, zeros, or all
    Verify {
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Identity catalog JSON path (defaults to the built-in catalog)
        #[arg(long)]
        catalog: Option<std::path::PathBuf>,
        /// Monte-Carlo sample count per identity
        #[arg(long, default_value_t = 100_000)]
        n: usize,
    },
    /// Shape classification of a named density
    Shape {
        /// One of: half-stable, cauchy, semicircle, gamma, t, c
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 1.5)]
        t_param: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// van Dantzig pair residuals for the power-semicircle family
    Vandantzig {
        #[arg(long, default_value_t = 0.5)]
        nu: f64,
        #[arg(long, default_value = "0.5:2:4")]
        grid: String,
        #[arg(long, default_value_t = 400)]
        zeros: usize,
    },
}

/// 17 significant digits, locale-independent.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

struct Output {
    sink: Box<dyn Write>,
}

impl Output {
    fn new(path: &Option<std::path::PathBuf>) -> Result<Self, String> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(std::fs::File::create(p).map_err(|e| e.to_string())?),
            None => Box::new(std::io::stdout()),
        };
        Ok(Self { sink })
    }

    fn line(&mut self, s: &str) {
        writeln!(self.sink, "{s}").expect("write output");
    }
}

fn emit_table(out: &mut Output, format: Format, header: &[&str], rows: &[Vec<f64>]) {
    match format {
        Format::Csv => {
            out.line(&header.join(","));
            for row in rows {
                let cells: Vec<String> = row.iter().map(|v| fmt(*v)).collect();
                out.line(&cells.join(","));
            }
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut m = serde_json::Map::new();
                    for (k, v) in header.iter().zip(row) {
                        m.insert(k.to_string(), serde_json::Value::String(fmt(*v)));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            out.line(&serde_json::to_string_pretty(&objs).unwrap());
        }
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    let mut out = Output::new(&cli.out)?;
    let format = cli.format;
    let mut all_pass = true;
    match cli.command {
        Command::Pdf { alpha, rho, grid, numeric } => {
            let p = StableParams::new(alpha, rho).map_err(|e| e.to_string())?;
            let xs = parse_grid(&grid.grid)?;
            let rows: Vec<Vec<f64>> = xs
                .iter()
                .map(|&x| {
                    let f = if numeric { pdf_numeric(p, x).map(|e| e.value) } else { pdf(p, x) };
                    f.map(|v| vec![x, v]).map_err(|e| e.to_string())
                })
                .collect::<Result<_, _>>()?;
            emit_table(&mut out, format, &["x", "f"], &rows);
        }
        Command::Cdf { alpha, rho, grid } => {
            let p = StableParams::new(alpha, rho).map_err(|e| e.to_string())?;
            let xs = parse_grid(&grid.grid)?;
            let rows: Vec<Vec<f64>> = xs
                .iter()
                .map(|&x| cdf(p, x).map(|v| vec![x, v]).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            emit_table(&mut out, format, &["x", "F"], &rows);
        }
        Command::Charfn { alpha, rho, grid } => {
            let p = StableParams::new(alpha, rho).map_err(|e| e.to_string())?;
            let ts = parse_grid(&grid.grid)?;
            let rows: Vec<Vec<f64>> = ts
                .iter()
                .map(|&t| {
                    charfn(p, t)
                        .map(|e| vec![t, e.value.re, e.value.im])
                        .map_err(|e| e.to_string())
                })
                .collect::<Result<_, _>>()?;
            emit_table(&mut out, format, &["t", "re", "im"], &rows);
        }
        Command::Sample { kind, alpha, rho, a, b, nu, terms, n, seed } => {
            let mut rng = RngStream::new(seed);
            let mut draws = Vec::with_capacity(n);
            match kind.as_str() {
                "x" => {
                    for _ in 0..n {
                        draws.push(sample_x(alpha, &mut rng).map_err(|e| e.to_string())?);
                    }
                }
                "k" => {
                    for _ in 0..n {
                        draws.push(sample_k(alpha, &mut rng).map_err(|e| e.to_string())?);
                    }
                }
                "z" => {
                    for _ in 0..n {
                        draws.push(sample_z(alpha, &mut rng).map_err(|e| e.to_string())?);
                    }
                }
                "w" => (0..n).for_each(|_| draws.push(sample_w(&mut rng))),
                "t" => (0..n).for_each(|_| draws.push(sample_t(&mut rng))),
                "s" => (0..n).for_each(|_| draws.push(sample_s(&mut rng))),
                "general" => {
                    let p = StableParams::new(alpha, rho).map_err(|e| e.to_string())?;
                    let s = GeneralSampler::new(p).map_err(|e| e.to_string())?;
                    (0..n).for_each(|_| draws.push(s.sample(&mut rng)));
                }
                "c" => {
                    for _ in 0..n {
                        draws.push(sample_c(a, b, &mut rng).map_err(|e| e.to_string())?);
                    }
                }
                "sigma" => {
                    let s = SigmaSampler::new(nu, terms).map_err(|e| e.to_string())?;
                    (0..n).for_each(|_| draws.push(s.sample(&mut rng)));
                }
                other => return Err(format!("unknown sampler kind '{other}'")),
            }
            let rows: Vec<Vec<f64>> = draws.iter().map(|&d| vec![d]).collect();
            emit_table(&mut out, format, &["draw"], &rows);
        }
        Command::Moments { alpha, grid } => {
            let ss = parse_grid(&grid.grid)?;
            let mut rows = Vec::new();
            for &s in &ss {
                let mx = mellin_x(alpha, s).map_err(|e| e.to_string())?;
                let mk = if alpha < 1.0 {
                    mellin_k(alpha, s).map_err(|e| e.to_string())?
                } else {
                    f64::NAN
                };
                rows.push(vec![s, mx, mk]);
            }
            emit_table(&mut out, format, &["s", "mellin_x", "mellin_k"], &rows);
            let nm: Vec<Vec<f64>> = (0..=6)
                .map(|n| {
                    let x = neg_moment_x(alpha, n).unwrap_or(f64::NAN);
                    let k = if alpha < 1.0 {
                        neg_moment_k(alpha, n).unwrap_or(f64::NAN)
                    } else {
                        f64::NAN
                    };
                    vec![n as f64, x, k]
                })
                .collect();
            emit_table(&mut out, format, &["n", "neg_moment_x", "neg_moment_k"], &nm);
        }
        Command::ThetaScan { alpha, grid } => {
            let rs = parse_grid(&grid)?;
            let rep =
                ggc_scan(alpha, rs[0], *rs.last().unwrap(), rs.len()).map_err(|e| e.to_string())?;
            let rows: Vec<Vec<f64>> =
                rep.grid.iter().zip(&rep.values).map(|(&r, &th)| vec![r, th]).collect();
            emit_table(&mut out, format, &["r", "theta"], &rows);
            out.line(&format!(
                "# verdict: {:?}, violations: {}",
                rep.verdict,
                rep.violations.len()
            ));
        }
        Command::GgcReport { alpha, points } => {
            let rep = ggc_scan(alpha, 1e-3, 1e3, points).map_err(|e| e.to_string())?;
            let mut rows = Vec::with_capacity(points);
            for (&r, &th) in rep.grid.iter().zip(&rep.values) {
                let re = re_f_cut(alpha, r).map_err(|e| e.to_string())?.value;
                let g = if alpha < 0.5 {
                    g_alpha(alpha, r.powf((alpha - 1.0) / alpha)).map(|e| e.value).unwrap_or(f64::NAN)
                } else {
                    f64::NAN
                };
                rows.push(vec![r, th, re, g]);
            }
            emit_table(&mut out, format, &["r", "theta", "re_f", "g_alpha"], &rows);
            out.line(&format!(
                "# alpha = {alpha}: verdict {:?}, {} violation(s)",
                rep.verdict,
                rep.violations.len()
            ));
        }
        Command::Airy { k, grid } => {
            let xs = parse_grid(&grid.grid)?;
            let rows: Vec<Vec<f64>> = xs
                .iter()
                .map(|&x| airy_type(k, x).map(|v| vec![x, v]).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            emit_table(&mut out, format, &["x", "ai_k"], &rows);
        }
        Command::EdgeCoeffs { alpha, order } => {
            let e = if alpha == 1.0 {
                edge_coeffs_alpha1(order).map_err(|e| e.to_string())?
            } else {
                edge_coeffs(alpha, order).map_err(|e| e.to_string())?
            };
            match format {
                Format::Json => {
                    let vals: Vec<String> = e.coeffs.iter().map(|&c| fmt(c)).collect();
                    out.line(&serde_json::to_string_pretty(&vals).unwrap());
                }
                Format::Csv => {
                    let rows: Vec<Vec<f64>> =
                        e.coeffs.iter().enumerate().map(|(n, &c)| vec![n as f64, c]).collect();
                    emit_table(&mut out, format, &["n", "a_n"], &rows);
                }
            }
        }
        Command::LevyCheck { a, b } => {
            let mut reports = Vec::new();
            for &s in &[0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
                let lhs = levy_reconstruct_t(s).map_err(|e| e.to_string())?;
                let rhs = log_mgf_t(s);
                reports.push(serde_json::json!({
                    "name": format!("levy-reconstruct(s={s})"),
                    "statistic": (lhs - rhs).abs(),
                    "threshold": 1e-8,
                    "pass": (lhs - rhs).abs() <= 1e-8,
                }));
            }
            for &x in &[0.5, 1.0, 2.0] {
                let (lhs, rhs) = cm_jump_check(x).map_err(|e| e.to_string())?;
                reports.push(serde_json::json!({
                    "name": format!("cm-jump(x={x})"),
                    "statistic": (lhs - rhs).abs(),
                    "threshold": 1e-9,
                    "pass": (lhs - rhs).abs() <= 1e-9,
                }));
            }
            let sd = sd_monotone_check();
            reports.push(serde_json::json!({
                "name": "sd-witness-monotone",
                "statistic": sd.violations.len(),
                "threshold": 0,
                "pass": sd.verdict == Verdict::Monotone,
            }));
            let d1 = levy_density_t(-1.0).map_err(|e| e.to_string())?;
            let d2 = levy_density_c(a, b, -1.0).map_err(|e| e.to_string())?;
            reports.push(serde_json::json!({
                "name": "density-values",
                "statistic": d1 + d2,
                "threshold": 0,
                "pass": d1 > 0.0 && d2 >= 0.0,
            }));
            for r in &reports {
                all_pass &= r["pass"].as_bool().unwrap();
            }
            out.line(&serde_json::to_string_pretty(&reports).unwrap());
        }
        Command::Verify { suite, seed, catalog, n } => {
            let mut reports: Vec<serde_json::Value> = Vec::new();
            let run_identities = |reports: &mut Vec<serde_json::Value>,
                                      all: &mut bool|
             -> Result<(), String> {
                let mut cat = match &catalog {
                    Some(path) => {
                        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
                        Catalog::from_json(&text).map_err(|e| e.to_string())?
                    }
                    None => default_catalog(),
                };
                for e in cat.entries.iter_mut() {
                    e.seed = seed;
                }
                let (reps, ok) = run_catalog(&cat, n).map_err(|e| e.to_string())?;
                for r in &reps {
                    reports.push(serde_json::to_value(r).unwrap());
                }
                *all &= ok;
                Ok(())
            };
            match suite.as_str() {
                "identities" => run_identities(&mut reports, &mut all_pass)?,
                "orderings" => {
                    let st =
                        identities::st_order_check(0.6, 0.3, n, seed).map_err(|e| e.to_string())?;
                    let cx = identities::cx_order_check(0.6, 0.3, n, seed + 1)
                        .map_err(|e| e.to_string())?;
                    all_pass &= st.pass && cx.pass;
                    reports.push(serde_json::to_value(&st).unwrap());
                    reports.push(serde_json::to_value(&cx).unwrap());
                }
                "scans" => {
                    for alpha in [0.3, 0.5, 0.7] {
                        let rep = ggc_scan(alpha, 1e-3, 1e3, 200).map_err(|e| e.to_string())?;
                        let ok = rep.verdict == Verdict::Monotone;
                        all_pass &= ok;
                        reports.push(serde_json::json!({
                            "name": format!("theta-monotone({alpha})"),
                            "statistic": rep.violations.len(),
                            "threshold": 0,
                            "pass": ok,
                        }));
                    }
                    let th = theta(0.5, 1e3).map_err(|e| e.to_string())?.value;
                    let ok = (th - 0.5).abs() <= 0.01;
                    all_pass &= ok;
                    reports.push(serde_json::json!({
                        "name": "theta-limit(0.5, 1e3)",
                        "statistic": (th - 0.5).abs(),
                        "threshold": 0.01,
                        "pass": ok,
                    }));
                }
                "zeros" => {
                    let zs = charfn_zero_scan(1.5, 50.0).map_err(|e| e.to_string())?;
                    let ok = zs.len() >= 2;
                    all_pass &= ok;
                    reports.push(serde_json::json!({
                        "name": "charfn-zeros(1.5)",
                        "statistic": zs.len(),
                        "threshold": 2,
                        "pass": ok,
                    }));
                }
                "levy" => {
                    let mut ok = true;
                    for &s in &[0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
                        let d =
                            (levy_reconstruct_t(s).map_err(|e| e.to_string())? - log_mgf_t(s)).abs();
                        ok &= d <= 1e-8;
                    }
                    all_pass &= ok;
                    reports.push(serde_json::json!({
                        "name": "levy-reconstruction",
                        "statistic": if ok { 0 } else { 1 },
                        "threshold": 0,
                        "pass": ok,
                    }));
                }
                "shape" => {
                    let f_half = |x: f64| {
                        if x < 0.25 {
                            0.0
                        } else {
                            (4.0 * x - 1.0).sqrt() / (2.0 * std::f64::consts::PI * x * x)
                        }
                    };
                    let v = derivative_zero_counts(
                        f_half,
                        ShapeSupport::HalfLineRight(0.25),
                        6,
                        60.0,
                        40,
                    )
                    .map_err(|e| e.to_string())?;
                    let ok = v.counts.iter().all(|&c| c == 1);
                    all_pass &= ok;
                    reports.push(serde_json::json!({
                        "name": "half-stable-whale-shape",
                        "statistic": v.counts,
                        "threshold": 1,
                        "pass": ok,
                    }));
                }
                "all" => {
                    run_identities(&mut reports, &mut all_pass)?;
                    let st =
                        identities::st_order_check(0.6, 0.3, n, seed).map_err(|e| e.to_string())?;
                    all_pass &= st.pass;
                    reports.push(serde_json::to_value(&st).unwrap());
                }
                other => return Err(format!("unknown suite '{other}'")),
            }
            out.line(&serde_json::to_string_pretty(&reports).unwrap());
        }
        Command::Shape { which, t_param, a, b, n_max } => {
            let (verdict, name): (_, String) = match which.as_str() {
                "half-stable" => {
                    let f = |x: f64| {
                        if x < 0.25 {
                            0.0
                        } else {
                            (4.0 * x - 1.0).sqrt() / (2.0 * std::f64::consts::PI * x * x)
                        }
                    };
                    (
                        derivative_zero_counts(f, ShapeSupport::HalfLineRight(0.25), n_max, 60.0, 40),
                        "half-stable".into(),
                    )
                }
                "cauchy" => {
                    let f = |x: f64| 1.0 / (std::f64::consts::PI * (1.0 + x * x));
                    (derivative_zero_counts(f, ShapeSupport::Line, n_max, 60.0, 40), "cauchy".into())
                }
                "semicircle" => {
                    let f = |x: f64| {
                        if x.abs() >= 2.0 {
                            0.0
                        } else {
                            (4.0 - x * x).sqrt() / (2.0 * std::f64::consts::PI)
                        }
                    };
                    (
                        derivative_zero_counts(f, ShapeSupport::Interval(-2.0, 2.0), n_max, 4.0, 48),
                        "semicircle".into(),
                    )
                }
                "gamma" => {
                    let cls = freestable::shape::gamma_bs_class(t_param, n_max.max(1))
                        .map_err(|e| e.to_string())?;
                    out.line(
                        &serde_json::json!({"name": format!("gamma({t_param})"), "bs_class": cls})
                            .to_string(),
                    );
                    return Ok(true);
                }
                "t" => {
                    let f = |x: f64| pdf_t(x).value;
                    (
                        derivative_zero_counts(f, ShapeSupport::HalfLineLeft(1.0), n_max.min(3), 30.0, 32),
                        "exceptional-t".into(),
                    )
                }
                "c" => {
                    let f = move |x: f64| pdf_c(a, b, x).map(|e| e.value).unwrap_or(0.0);
                    (
                        derivative_zero_counts(f, ShapeSupport::Line, n_max.min(3), 30.0, 32),
                        format!("c({a},{b})"),
                    )
                }
                other => return Err(format!("unknown density '{other}'")),
            };
            let v = verdict.map_err(|e| e.to_string())?;
            out.line(
                &serde_json::json!({
                    "name": name,
                    "counts": v.counts,
                    "class": format!("{:?}", v.class),
                    "notes": v.notes,
                })
                .to_string(),
            );
        }
        Command::Vandantzig { nu, grid, zeros } => {
            let ts = parse_grid(&grid)?;
            let rep =
                identities::van_dantzig_check(nu, &ts, zeros, 1e-8).map_err(|e| e.to_string())?;
            all_pass &= rep.pass;
            out.line(&serde_json::to_string_pretty(&rep).unwrap());
        }
    }
    Ok(all_pass)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
