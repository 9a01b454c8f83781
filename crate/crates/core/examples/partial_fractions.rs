//! Kernels in partial-fraction form: evaluation, derivatives and stripping
//! the pole at the special point.

use cyclotsum::ratfrac::{
    strip_special_pole, validate_kernel, KernelVariant, PartialFraction, Pole,
};
use num_complex::Complex64 as C;

fn main() {
    // r(s) = 1/(s + 1/2)^2 + 2/(s - 1/3)
    let r = PartialFraction::new(vec![
        Pole {
            at: C::new(-0.5, 0.0),
            coeffs: vec![C::new(0.0, 0.0), C::new(1.0, 0.0)],
        },
        Pole {
            at: C::new(1.0 / 3.0, 0.0),
            coeffs: vec![C::new(2.0, 0.0)],
        },
    ]);
    let s = C::new(0.25, 0.5);
    println!("r({s}) = {}", r.eval(s).unwrap());
    println!("r'({s}) = {}", r.derivative(1).eval(s).unwrap());
    println!(
        "class: {:?}",
        validate_kernel(&r, KernelVariant::R1).unwrap()
    );
    let at = KernelVariant::R1.special_point();
    let g = strip_special_pole(&r, at, 2).unwrap();
    println!("(s + 1/2)^2 r(s) at {s}: {}", g.eval(s).unwrap());

    let bad = PartialFraction::power(C::new(2.0, 0.0), 1, C::new(1.0, 0.0));
    println!(
        "pole at 2: {}",
        validate_kernel(&bad, KernelVariant::R1).unwrap_err()
    );
}
