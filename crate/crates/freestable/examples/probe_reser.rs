use freestable::gamma::{ln_gamma, recip_gamma_ln};
use std::f64::consts::PI;

fn main() {
    let (alpha, r) = (0.3f64, 10.0f64);
    let ln_z = (1.0 - alpha) * r.ln();
    let mut s1 = 1.0f64; // reflection form
    let mut s2 = 1.0f64; // direct recip-gamma form
    for n in 1..60usize {
        let nf = n as f64;
        let s = (PI * nf * alpha).sin();
        let t1 = if s == 0.0 { 0.0 } else {
            let ln_mag = nf * ln_z + s.abs().ln() + ln_gamma(nf * alpha) - ln_gamma(nf + 1.0) - PI.ln();
            (PI * nf * alpha).cos() * s.signum() * ln_mag.exp()
        };
        let (lg, sg) = recip_gamma_ln(1.0 - nf * alpha);
        let t2 = sg * (nf * ln_z + lg - ln_gamma(nf + 1.0)).exp() * (PI * nf * alpha).cos();
        s1 += t1;
        s2 += t2;
        if n < 40 && (t1 - t2).abs() > 1e-12 * t1.abs().max(1e-12) {
            println!("n={n:3} t1={t1:.12e} t2={t2:.12e} diff={:.2e}", t1 - t2);
        }
    }
    println!("sum reflection = {s1:.12e}");
    println!("sum direct     = {s2:.12e}");
}
