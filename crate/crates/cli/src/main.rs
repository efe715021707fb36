//! `spexlab` command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails or a numerical
//! routine gives up, 2 on usage and input errors.

mod args;
mod commands;
mod io;

use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use io::{CliError, CliResult};

/// Requested format, recovered from raw arguments when parsing fails.
fn raw_format(argv: &[String]) -> Format {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        let value = if a == "--format" {
            it.next().map(String::as_str)
        } else {
            a.strip_prefix("--format=")
        };
        match value {
            Some("csv") => return Format::Csv,
            Some("g6") => return Format::G6,
            _ => {}
        }
    }
    Format::Json
}

fn jobs(flag: Option<usize>) -> CliResult<usize> {
    if let Some(j) = flag {
        return Ok(j);
    }
    match std::env::var("SPEXLAB_JOBS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("SPEXLAB_JOBS must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn format(cli: &Cli) -> Format {
    cli.format.unwrap_or(match cli.command {
        Command::Construct(_) => Format::G6,
        _ => Format::Json,
    })
}

fn run(cli: &Cli) -> CliResult<commands::Finished> {
    let format = format(cli);
    match &cli.command {
        Command::Construct(a) => commands::construct(a, format),
        Command::Spectrum(a) => commands::spectrum(a, format, cli.seed),
        Command::Check(a) => commands::check(a, format),
        Command::Search(s) => commands::search(s, format, jobs(cli.jobs)?),
        Command::Verify(v) => commands::verify(v, format, cli.seed),
        Command::Scan(a) => commands::scan(a, format, jobs(cli.jobs)?),
    }
}

fn fail(err: &CliError, format: Format) -> i32 {
    eprintln!("spexlab: {}", err.message());
    if format == Format::Json {
        println!("{}", err.to_json());
    }
    err.exit_code()
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            std::process::exit(0);
        }
        Err(e) => {
            let msg = e.render().to_string();
            let code = fail(&CliError::Usage(msg.trim_end().to_string()), raw_format(&argv));
            std::process::exit(code);
        }
    };
    let code = match run(&cli) {
        Ok(finished) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(finished.text.as_bytes());
            let _ = stdout.flush();
            if finished.passed {
                0
            } else {
                1
            }
        }
        Err(e) => fail(&e, format(&cli)),
    };
    std::process::exit(code);
}
