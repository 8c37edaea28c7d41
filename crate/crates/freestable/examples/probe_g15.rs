use freestable::airy::airy_type;
use freestable::ggc::g_alpha;
use freestable::quad;

fn main() {
    // G_{1/5}(r) = 1 + (5/2) int_0^s Ai_5(-z) dz, s = (5r)^{-1/5}
    for &r in &[1.0f64, 1e-2, 1e-4, 1e-6] {
        let s = (5.0 * r).powf(-0.2);
        let mut f = |z: f64| airy_type(5, -z).unwrap();
        let (integral, _) = quad::adaptive(&mut f, 0.0, s, 1e-10, 1e-10);
        let airy_route = 1.0 + 2.5 * integral;
        let direct = g_alpha(0.2, r).unwrap().value;
        println!("r={r:8.0e}: s={s:7.3} airy_route={airy_route:.8} g_alpha={direct:.8} diff={:.2e}",
            (airy_route - direct).abs());
    }
    // G_{1/3}(r) = 1 + (3/2) int_0^s Ai(z) dz, s = (3r)^{-1/3}
    for &r in &[1.0f64, 10.0] {
        let s = (3.0 * r).powf(-1.0 / 3.0);
        let mut f = |z: f64| airy_type(3, z).unwrap();
        let (integral, _) = quad::adaptive(&mut f, 0.0, s, 1e-10, 1e-10);
        let airy_route = 1.0 + 1.5 * integral;
        let direct = g_alpha(1.0 / 3.0, r).unwrap().value;
        println!("r={r:5.1}: G_1/3 airy={airy_route:.10} g_alpha={direct:.10} diff={:.2e}",
            (airy_route - direct).abs());
    }
}
