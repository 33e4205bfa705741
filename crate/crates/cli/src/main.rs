use clap::Parser;

fn main() {
    let cli = qmersenne_cli::Cli::parse();
    if let Err(err) = qmersenne_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
