use clap::Parser;

use ggf::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
