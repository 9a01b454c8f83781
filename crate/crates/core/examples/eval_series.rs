//! Evaluates a few series from their text form, with error bounds.
//!
//! `cargo run --example eval_series -- "T[1,2;3](1/4,1/2;0/1)"`

use cyclotsum::numkernel::evaluate;
use cyclotsum::{EvalOptions, SeriesSpec};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        vec![
            "t[2](0/1)".into(),
            "t[2,2,2](0/1,0/1,0/1)".into(),
            "T[2;3](0/1;0/1)".into(),
            "S[1;2](1/2;1/4)".into(),
        ]
    } else {
        args
    };
    let opts = EvalOptions::default();
    for text in specs {
        let spec: SeriesSpec = match text.parse() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        match evaluate(&spec, &opts) {
            Ok(e) => println!("{spec} = {}  ({} terms)", e.value, e.terms),
            Err(e) => println!("{spec}: {e}"),
        }
    }
}
