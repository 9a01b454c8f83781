//! Laurent coefficients of the kernel functions at integer and half-integer points.

use cyclotsum::identities::{laurent_coeff_Phi, laurent_coeff_phi, Around};
use cyclotsum::Root;
use num_rational::Rational64;

fn main() {
    for k in -2..=2 {
        let c = laurent_coeff_phi(0, 2, k, Root::MINUS_ONE, Around::IntegerSide).unwrap();
        println!("phi' about 0, x = -1, (s)^{k}: {c}");
    }
    let c = laurent_coeff_phi(1, 1, 0, Root::I, Around::HalfShifted).unwrap();
    println!("half-shifted constant term at n = 1, x = i: {c}");
    for m in -1..=1 {
        let c = laurent_coeff_Phi(Rational64::new(1, 2), m, Root::MINUS_ONE).unwrap();
        println!("Phi about 1/2, x = -1, order {m}: {c}");
    }
}
