//! The residue sum behind the parity relations vanishes; its truncation
//! shrinks as the cutoff grows.

use cyclotsum::identities::residue::residue_head_sum;
use cyclotsum::identities::residue_sum_zero;
use cyclotsum::Root;

fn main() {
    let (p, q, x, y) = (2, 3, Root::I, Root::new(1, 3));
    for cutoff in [10, 100, 1000] {
        let head = residue_head_sum(p, q, x, y, cutoff).unwrap();
        println!("cutoff {cutoff:5}: head {:.3e}", head.abs());
    }
    let total = residue_sum_zero(p, q, x, y, 50).unwrap();
    println!("head plus tail: {total}");
}
