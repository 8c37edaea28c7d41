use freestable::levy::levy_density_t;
fn main() {
    // log-convexity of y -> y * nu_T(-y) on the LINEAR axis
    let ys: Vec<f64> = (0..80).map(|i| 0.02 * 1.13f64.powi(i)).collect();
    let lv: Vec<f64> = ys.iter().map(|&y| (y * levy_density_t(-y).unwrap()).ln()).collect();
    let mut worst: f64 = f64::INFINITY;
    for w in 0..ys.len() - 2 {
        let (y0, y1, y2) = (ys[w], ys[w + 1], ys[w + 2]);
        let (f0, f1, f2) = (lv[w], lv[w + 1], lv[w + 2]);
        let dd = ((f2 - f1) / (y2 - y1) - (f1 - f0) / (y1 - y0)) / (y2 - y0);
        if dd < worst { worst = dd; }
        if dd < 0.0 { println!("dd = {dd:.3e} at y = {y0:.4}"); }
    }
    println!("worst linear-axis dd of log(y nu(-y)): {worst:.3e}");
    // and of the density itself (the honestly CM object)
    let lv2: Vec<f64> = ys.iter().map(|&y| levy_density_t(-y).unwrap().ln()).collect();
    let mut worst2: f64 = f64::INFINITY;
    for w in 0..ys.len() - 2 {
        let (y0, y1, y2) = (ys[w], ys[w + 1], ys[w + 2]);
        let (f0, f1, f2) = (lv2[w], lv2[w + 1], lv2[w + 2]);
        let dd = ((f2 - f1) / (y2 - y1) - (f1 - f0) / (y1 - y0)) / (y2 - y0);
        if dd < worst2 { worst2 = dd; }
    }
    println!("worst linear-axis dd of log(nu(-y)):   {worst2:.3e}");
}
