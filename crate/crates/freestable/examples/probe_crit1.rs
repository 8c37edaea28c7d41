use freestable::dist::{pdf, pdf_numeric_tol};
use freestable::StableParams;
use std::time::Instant;

fn main() {
    let sets = [
        (0.5f64, 1.0f64, 0.35f64, 8.0f64),
        (1.0, 0.3, -8.0, 8.0),
        (1.0, 0.5, -8.0, 8.0),
        (2.0, 0.5, -1.9, 1.9),
    ];
    let total = Instant::now();
    for (alpha, rho, lo, hi) in sets {
        let p = StableParams::new(alpha, rho).unwrap();
        let t0 = Instant::now();
        let mut sup = 0.0f64;
        let n = 200;
        for i in 0..n {
            let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            let closed = pdf(p, x).unwrap();
            let num = pdf_numeric_tol(p, x, 2e-8).unwrap().value;
            sup = sup.max((num - closed).abs());
        }
        println!("({alpha},{rho}): sup = {sup:.3e}  time = {:?}", t0.elapsed());
    }
    println!("total: {:?}", total.elapsed());
}
