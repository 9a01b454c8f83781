//! Parity of depth-three multiple t-values, through the closed fixtures and
//! through the generic reduction.

use cyclotsum::identities::{triple_t_parity_sides, Evaluator, TripleRoute};
use cyclotsum::Root;

fn main() {
    let ev = Evaluator::default();
    let twists = (Root::I, Root::MINUS_ONE, Root::new(1, 3));
    for exps in [(1, 2, 1), (2, 2, 2)] {
        for route in [TripleRoute::Tabulated, TripleRoute::Generic] {
            let sides = triple_t_parity_sides(exps, twists, route).unwrap();
            let (l, r) = sides.evaluate(&ev).unwrap();
            println!("{exps:?} {route:?}: {l} vs {r}");
        }
    }
    let sides = triple_t_parity_sides(
        (1, 1, 2),
        (Root::I, Root::MINUS_ONE, Root::MINUS_I),
        TripleRoute::Generic,
    )
    .unwrap();
    let (l, r) = sides.evaluate(&ev).unwrap();
    println!("(1,1,2) twisted: residual {:.1e}", (l - r).abs());
}
