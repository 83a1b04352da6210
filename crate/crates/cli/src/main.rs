use clap::Parser;

fn main() {
    let cli = congrlab_cli::Cli::parse();
    std::process::exit(congrlab_cli::run(&cli));
}
