//! Rewrites a T-sum as a sum of multiple t-values and checks the values agree.

use cyclotsum::numkernel::euler_sum;
use cyclotsum::quasishuffle::{eval_formal, stuffle_expand, term_count};
use cyclotsum::{Comp, Root};

fn main() {
    let inner = Comp::new(vec![(1, Root::I), (2, Root::MINUS_ONE)]);
    let (q, x) = (2, Root::new(1, 3));
    let sum = stuffle_expand(&inner, q, x);
    println!("{} terms (generic count {})", sum.len(), term_count(2));
    for t in &sum.terms {
        println!("  {:+} {}", t.coeff, t.spec());
    }
    let spec = cyclotsum::SeriesSpec::t_sum(inner, q, x);
    let direct = euler_sum(&spec).unwrap();
    let formal = eval_formal(&sum, 1e-10).unwrap();
    println!("{spec} = {direct}");
    println!("expanded  = {formal}");
    println!("difference {:.1e}", (direct - formal).abs());
}
