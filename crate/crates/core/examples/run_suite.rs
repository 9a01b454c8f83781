//! Runs the bundled suite, or a TOML suite given on the command line, and
//! prints the summary.

use cyclotsum::cli::{load_suite, render, run_suite, Format};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "standard".into());
    let cfg = load_suite(&name).unwrap_or_else(|e| panic!("{e}"));
    let result = run_suite(&cfg, None).unwrap();
    let s = &result.summary;
    println!(
        "{name}: {} pass, {} fail, {} skipped",
        s.pass, s.fail, s.skipped
    );
    let slowest = result.wall_time.iter().max_by(|a, b| a.1.total_cmp(b.1));
    if let Some((id, secs)) = slowest {
        println!("slowest family: {id} ({secs:.2}s)");
    }
    if s.fail > 0 {
        print!("{}", render(&result, Format::Text).unwrap());
        std::process::exit(1);
    }
}
