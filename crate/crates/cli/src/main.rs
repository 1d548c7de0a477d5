#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod app;
mod args;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match app::run(cli, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("wright: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
