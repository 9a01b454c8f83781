//! The depth-two parity relation for `T_{p1,p2;q}`.

use cyclotsum::identities::{quadratic_parity_sides, Evaluator};
use cyclotsum::Root;

fn main() {
    let ev = Evaluator::default();
    for (p1, p2, q) in [(1, 1, 2), (1, 2, 2), (2, 1, 3)] {
        let (x, x1, x2) = (Root::I, Root::MINUS_ONE, Root::new(1, 3));
        match quadratic_parity_sides(p1, p2, q, x, x1, x2).and_then(|s| s.evaluate(&ev)) {
            Ok((l, r)) => println!("({p1},{p2};{q}): lhs {l}, residual {:.1e}", (l - r).abs()),
            Err(e) => println!("({p1},{p2};{q}): {e}"),
        }
    }
}
