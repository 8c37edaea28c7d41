use freestable::airy::airy_type;
fn main() {
    for i in 0..=60 {
        let x = 12.0 * i as f64 / 60.0;
        match airy_type(5, -x) {
            Ok(v) => println!("{x:6.2} {v:14.6e}"),
            Err(e) => println!("{x:6.2} ERR {e}"),
        }
    }
}
