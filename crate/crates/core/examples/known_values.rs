//! Named values with closed forms, evaluated both ways.

use cyclotsum::identities::known::{known_expr, known_ids, known_series};
use cyclotsum::identities::Evaluator;
use cyclotsum::numkernel::evaluate;
use cyclotsum::SeriesSpec;

fn main() {
    let ev = Evaluator::default();
    for id in known_ids() {
        let series = known_series(&id).unwrap();
        let spec: SeriesSpec = series.parse().unwrap();
        let direct = evaluate(&spec, ev.options()).unwrap().value;
        let closed = ev.expr(&known_expr(&id).unwrap()).unwrap();
        println!(
            "{id:10} {series:22} {direct}  closed form {:.1e} away",
            (direct - closed).abs()
        );
    }
}
