//! `T_{1,1,1;q}` parity, and how the literal reading of the formula fails.

use cyclotsum::identities::cubic::{cubic_ones_parity_sides_with, CubicReading};
use cyclotsum::identities::Evaluator;
use cyclotsum::Root;

fn main() {
    let ev = Evaluator::default();
    let xs = [Root::I, Root::MINUS_ONE, Root::new(1, 3)];
    for q in 2..=3 {
        for (name, reading) in [
            ("corrected", CubicReading::CORRECTED),
            ("literal", CubicReading::LITERAL),
        ] {
            let sides = cubic_ones_parity_sides_with(q, Root::MINUS_I, xs, reading).unwrap();
            let (l, r) = sides.evaluate(&ev).unwrap();
            println!("q={q} {name:9}: residual {:.1e}", (l - r).abs());
        }
    }
}
