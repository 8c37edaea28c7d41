// scratch probe, removed before delivery
use freestable::wright::*;
use num_complex::Complex64;

fn main() {
    // 1) F-cut regime: a = -alpha, z = r^{1-alpha} e^{i pi alpha}
    for alpha in [0.15f64, 0.3, 0.5, 0.7] {
        for r in [1.0f64, 10.0, 100.0, 1000.0] {
            let z = Complex64::from_polar(r.powf(1.0 - alpha), std::f64::consts::PI * alpha);
            let p = WrightParams::new(-alpha, 1.0).unwrap();
            let e = wright_phi(p, z).unwrap();
            let b1ma = (1.0 - alpha) * alpha.powf(alpha / (1.0 - alpha));
            let pred_ln = b1ma * r - 0.5 * r.ln();
            println!("cut a={:-5.2} r={:7.1} |F|={:12.5e} ln|F|={:9.3} pred={:9.3} th={:.4} flag={} err={:.2e}",
                -alpha, r, e.value.norm(), e.value.norm().ln(), pred_ln,
                e.value.arg()/std::f64::consts::PI, e.flagged, e.err);
        }
    }
    // 2) charfn regime alpha in (1,2]: a = alpha-1, z = -t^alpha (rho=1/2)
    for alpha in [1.5f64, 2.0] {
        for t in [5.0f64, 15.0, 30.0, 50.0] {
            let z = Complex64::new(-(t.powf(alpha)), 0.0);
            let p = WrightParams::new(alpha - 1.0, 2.0).unwrap();
            let e = wright_phi(p, z).unwrap();
            let kappa = alpha * (alpha - 1.0f64).powf(1.0/alpha - 1.0);
            let envelope = (std::f64::consts::PI / alpha).cos() * kappa * t;
            println!("chf a={:4.1} t={:5.1} phi={:13.6e} ln-env={:8.2} flag={} err={:.2e}",
                alpha-1.0, t, e.value.re, envelope, e.flagged, e.err);
        }
    }
    // 3) one-sided inversion regime: a=-1/2, z = -(it)^{1/2} e^{-i pi/2}, t rotated down
    let alpha = 0.5f64;
    for t_abs in [10.0f64, 100.0, 1000.0, 5000.0] {
        let delta = 0.6f64;
        let t = Complex64::from_polar(t_abs, -delta);
        let it = Complex64::new(0.0, 1.0) * t;
        let z = -(it.powf(alpha)) * Complex64::from_polar(1.0, -std::f64::consts::PI * alpha);
        let p = WrightParams::new(alpha - 1.0, 2.0).unwrap();
        let e = wright_phi(p, z).unwrap();
        // |phi_X| should be ~ e^{b_alpha * t sin(delta)} * |t|^{-3/2}-ish with b=1/4
        let pred = 0.25 * t_abs * delta.sin();
        println!("inv t={:7.1} |phi|={:12.5e} ln={:9.3} pred~{:9.3} flag={} err={:.2e}",
            t_abs, e.value.norm(), e.value.norm().ln(), pred, e.flagged, e.err);
    }
    // 4) laplace_X regime: a in (-1,0), z = -lambda^alpha real negative
    for alpha in [0.3f64, 0.5, 0.75] {
        for lam in [1.0f64, 10.0, 100.0] {
            let z = Complex64::new(-(lam.powf(alpha)), 0.0);
            let p = WrightParams::new(alpha - 1.0, 2.0).unwrap();
            let e = wright_phi(p, z).unwrap();
            println!("lap alpha={:4.2} lam={:6.1} phi={:13.6e} flag={} err={:.2e}",
                alpha, lam, e.value.re, e.flagged, e.err);
        }
    }
}
