use freestable::ggc::*;
use freestable::wright::{wright_phi, WrightParams};
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() {
    for &(alpha, r) in &[(0.3f64, 2.0f64), (0.3, 10.0), (0.3, 30.0), (0.5, 5.0), (0.7, 11.0), (0.2, 3.16227766), (0.2, 10.0)] {
        let z = Complex64::from_polar(r.powf(1.0 - alpha), PI * alpha);
        let direct = wright_phi(WrightParams::new(-alpha, 1.0).unwrap(), z).unwrap().value;
        let ln_im = ln_im_f_cut(alpha, r).unwrap();
        let re = re_f_cut(alpha, r).unwrap().value;
        let rei = re_f_cut_integral(alpha, r).unwrap().value;
        println!("a={alpha} r={r:9.4}: direct=({:.10e},{:.10e}) | im={:.10e} re_ser={:.10e} re_int={:.10e}",
            direct.re, direct.im, ln_im.exp(), re, rei);
    }
    for &alpha in &[0.2f64, 0.21, 0.25] {
        for &r in &[1e-6f64, 1e-4, 1e-2] {
            let g = g_alpha(alpha, r).unwrap();
            // third route: G(r) = Re F(r^{alpha/(alpha-1)})
            let rf = r.powf(alpha / (alpha - 1.0));
            let re = re_f_cut(alpha, rf).unwrap();
            println!("G_{alpha}({r:.0e}) = {:.8}  reF({rf:.3e}) = {:.8}  1/(2a) = {:.8}", g.value, re.value, 0.5/alpha);
        }
    }
}
