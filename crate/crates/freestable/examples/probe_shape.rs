use freestable::cheb::ChebSeries;
use std::f64::consts::PI;

fn f_half(x: f64) -> f64 {
    if x < 0.25 { 0.0 } else { (4.0 * x - 1.0).sqrt() / (2.0 * PI * x * x) }
}

fn main() {
    // mimic the window construction: x0 = 0.25, span 60, h0 = 0.06, ratio 1.7
    let mut cuts = vec![];
    let mut h = 0.06f64;
    let mut x = 0.25 + h;
    cuts.push(x);
    while x < 60.25 { h *= 1.7; x += h; cuts.push(x.min(60.25)); }
    println!("windows: {}", cuts.len() - 1);
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let deg = 40usize;
        let cheb = ChebSeries::fit(f_half, lo, hi, deg);
        let mut d = cheb.clone();
        for _ in 0..6 { d = d.derivative(); }
        let sup = d.sup_on_grid(160);
        let tail: f64 = cheb.c[30..].iter().map(|c| c.abs()).sum::<f64>();
        let c1: f64 = cheb.c.iter().map(|c| c.abs()).sum();
        // count ungated sign changes inside
        let mut changes = 0; let mut last = 0.0f64;
        for i in 0..=240 {
            let u = 0.02 + 0.96 * i as f64 / 240.0;
            let xx = lo + (hi - lo) * u;
            let v = d.eval(xx);
            if v.abs() < 1e-7 * sup { continue; }
            let s = v.signum();
            if last != 0.0 && s != last { changes += 1; }
            last = s;
        }
        println!("[{lo:9.4},{hi:9.4}] sup6={sup:11.3e} tail={tail:9.2e} c1={c1:9.2e} changes={changes}");
    }
}
