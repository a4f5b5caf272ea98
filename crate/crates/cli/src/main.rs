use std::io;
use std::process::ExitCode;

use clap::Parser;
use possclust_cli::config::Args;
use possclust_cli::{run, RunConfig};

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = RunConfig::try_from(args).and_then(|cfg| run(&cfg, &mut io::stdout().lock()));
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("possclust: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
