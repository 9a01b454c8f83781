//! Multiple T-values written through S̃-sums, in depth two and three.

use cyclotsum::identities::{mtv_relations_sides, Evaluator, MtvVariant};
use cyclotsum::Root;

fn main() {
    let ev = Evaluator::default();
    let cases: [(MtvVariant, &[u32], &[Root]); 3] = [
        (MtvVariant::Depth2, &[1, 2], &[Root::ONE, Root::ONE]),
        (MtvVariant::Depth2, &[2, 2], &[Root::I, Root::MINUS_ONE]),
        (
            MtvVariant::Depth3,
            &[1, 1, 2],
            &[Root::MINUS_ONE, Root::ONE, Root::I],
        ),
    ];
    for (variant, exps, twists) in cases {
        let sides = mtv_relations_sides(variant, exps, twists).unwrap();
        let (l, r) = sides.evaluate(&ev).unwrap();
        println!("{variant:?} {exps:?}: {l}, residual {:.1e}", (l - r).abs());
    }
}
