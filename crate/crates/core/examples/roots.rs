//! Exact arithmetic on roots of unity `e^{2πi k/n}`.

use cyclotsum::Root;

fn main() {
    let w = Root::new(1, 6);
    let z = Root::new(3, 4);
    println!("w = {w}, z = {z}");
    println!("w z = {}", w.mul(z));
    println!("w⁻¹ = {}, sqrt(w) = {}", w.inv(), w.sqrt());
    println!("w^9 = {}", w.pow(9));
    println!("order of w z: {}", w.mul(z).order());
    println!("w as a complex number: {}", w.to_complex());
    let parsed: Root = "2/8".parse().unwrap();
    println!("2/8 reduces to {parsed}");
}
