use std::process::ExitCode;

use clap::Parser;
use penta_cli::{run, write_output, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ERROR as u8) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = run(&cli).and_then(|out| {
        write_output(cli.common.out.as_deref(), &out.text)?;
        if let Some(side) = &out.side_report {
            if cli.common.out.is_some() {
                write_output(None, side)?;
            } else {
                eprint!("{side}");
            }
        }
        Ok(out.exit_code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("penta: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
