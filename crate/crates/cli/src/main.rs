//! `grothlab`: expand refined (dual) Grothendieck polynomials, run the
//! verification sweeps, work with last-passage percolation and check the
//! Yang-Baxter equation for the bundled vertex models.
//!
//! Exit status: 0 when everything checked passes, 1 on a verification
//! failure, 2 on a usage or input error.

mod args;
mod expand;
mod lpp;
mod report;
mod verify;
mod ybe;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand(a) => expand::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Lpp(a) => lpp::run(a),
        Command::Ybe(a) => ybe::run(a),
    };
    match result {
        Ok(report) => {
            report.print(cli.format);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
