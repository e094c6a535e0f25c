mod cli;
mod cmd;
mod error;

use clap::Parser;

use crate::cli::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => cmd::verify(args),
        Command::Dephase(args) => cmd::dephase(args),
        Command::Blocks(args) => cmd::blocks(args),
        Command::Search(args) => cmd::search(args),
        Command::GenT(args) => cmd::gen_t(args),
        Command::Decompose(args) => cmd::decompose(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
