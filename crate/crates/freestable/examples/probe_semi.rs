use freestable::dist::pdf_numeric;
use freestable::StableParams;
use std::time::Instant;

fn main() {
    let p = StableParams::new(2.0, 0.5).unwrap();
    let mut slow_pts = 0;
    let mut total = 0.0;
    for i in 0..200 {
        let x = -1.9 + 3.8 * i as f64 / 199.0;
        let t0 = Instant::now();
        let _ = pdf_numeric(p, x).unwrap();
        let dt = t0.elapsed().as_secs_f64();
        total += dt;
        if dt > 0.25 {
            slow_pts += 1;
            if slow_pts < 12 { println!("x = {x:7.4}: {dt:.2}s"); }
        }
    }
    println!("total {total:.1}s, slow points: {slow_pts}");
}
