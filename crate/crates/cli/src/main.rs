use bcast_cli::args::{Cli, Command};
use bcast_cli::{commands, sweep, CliError};
use clap::Parser;

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(a) => commands::compute(&a.resolve()?, a.timings, a.common.out.as_deref()),
        Command::Verify(a) => commands::verify(&a.resolve()?, a.common.out.as_deref()),
        Command::Witness(a) => commands::witness(&a.resolve()?, a.timings, a.common.out.as_deref()),
        Command::Generate(a) => commands::generate(&a.resolve()?, a.graph_out.as_deref(), a.common.out.as_deref()),
        Command::Sweep(a) => sweep::sweep(&a.resolve()?, a.summary.as_deref(), a.common.out.as_deref()),
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        if !matches!(e, CliError::Verification(_)) {
            eprintln!("error: {e}");
        }
        std::process::exit(e.exit_code());
    }
}
