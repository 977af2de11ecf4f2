use clap::Parser;

fn main() {
    let cli = classnum_cli::Cli::parse();
    std::process::exit(classnum_cli::run(cli));
}
