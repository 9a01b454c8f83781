//! The linear parity relation for `T_{p;q}(x;y)` over a few twists, plus the
//! untwisted closed forms.

use cyclotsum::identities::{linear_parity_corollary, linear_parity_sides, Evaluator};
use cyclotsum::Root;

fn main() {
    let ev = Evaluator::default();
    for (p, q, x, y) in [
        (2, 2, Root::MINUS_ONE, Root::MINUS_ONE),
        (1, 2, Root::I, Root::MINUS_ONE),
        (3, 2, Root::new(1, 3), Root::new(1, 5)),
    ] {
        let sides = linear_parity_sides(p, q, x, y).unwrap();
        let (l, r) = sides.evaluate(&ev).unwrap();
        println!(
            "p={p} q={q} x={x} y={y}: residual {:.1e} (budget {:.1e})",
            (l - r).abs(),
            l.err + r.err
        );
    }
    let sides = linear_parity_corollary(2, 3).unwrap();
    println!("T_{{2;3}}(1;1) = {}", sides.rhs);
    let (l, r) = sides.evaluate(&ev).unwrap();
    println!("  numerically {} vs {}", l, r);
}
