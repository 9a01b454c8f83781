//! Parity for sums weighted by a rational kernel, built from a TOML kernel
//! description and checked along both routes.

use cyclotsum::identities::{general_sides, Evaluator, KernelRoute, KernelSpec};
use cyclotsum::ratfrac::KernelVariant;
use cyclotsum::Root;

const KERNELS: &str = r#"
r1 = { poles = [{ pole = "-0.5,0", coeffs = [0.0, 1.0] }, { pole = "0.3333333333333333,0", coeffs = [1.2] }] }
r2 = { poles = [{ pole = "0,1", coeffs = ["0,-0.5"] }, { pole = "0,-1", coeffs = ["0,0.5"] }] }
"#;

fn main() {
    let table: std::collections::BTreeMap<String, KernelSpec> = toml::from_str(KERNELS).unwrap();
    let ev = Evaluator::default();
    for (name, variant) in [("r1", KernelVariant::R1), ("r2", KernelVariant::R2)] {
        let spec = &table[name];
        let r = spec.to_partial_fraction().unwrap();
        println!("{name}: {spec}");
        for route in [KernelRoute::Auto, KernelRoute::Generic] {
            let sides = general_sides(variant, 2, Root::I, Root::MINUS_ONE, &r, route).unwrap();
            let (l, rhs) = sides.evaluate(&ev).unwrap();
            println!("  {route:?}: lhs {l}, residual {:.1e}", (l - rhs).abs());
        }
    }
}
