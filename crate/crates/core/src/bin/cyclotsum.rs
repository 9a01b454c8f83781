use clap::Parser;

fn main() {
    let cli = cyclotsum::cli::Cli::parse();
    let code = match cyclotsum::cli::run(&cli, &mut std::io::stdout(), &mut std::io::stderr()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    };
    std::process::exit(code);
}
