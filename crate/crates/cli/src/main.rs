//! `rsimple`: seeded experiments and certificates for Ramsey simplicity.
//!
//! Every run prints one JSON report `{schema, config, result}`. The config
//! is the full command, so `rsimple replay REPORT` regenerates the report.
//! Exit status: 0 success, 1 input or verification error, 2 budget exceeded.

mod args;
mod commands;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command};
use commands::{run, Ctx};

pub const SCHEMA: &str = "rsimple.report/1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] ramsey_simple::Error),
    #[error("{0}: {1}")]
    Input(String, ramsey_simple::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// A verification step failed; the partial result is still reported.
    #[error("verification failed")]
    Failed(Value),
}

impl CliError {
    fn input(path: &Path, e: ramsey_simple::Error) -> Self {
        CliError::Input(path.display().to_string(), e)
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_budget() => 2,
            _ => 1,
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema: &'static str,
    config: &'a Command,
    result: Value,
}

fn render(config: &Command, result: Value) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(&Report {
        schema: SCHEMA,
        config,
        result,
    })?;
    text.push('\n');
    Ok(text)
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.report {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<u8, CliError> {
    let ctx = Ctx { timing: cli.timing };
    let (config, check) = match &cli.command {
        Command::Replay(r) => {
            let text = fs::read_to_string(&r.report)
                .map_err(|e| CliError::Io(format!("{}: {e}", r.report.display())))?;
            let mut report: Value = serde_json::from_str(&text)?;
            if report.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
                return Err(CliError::Usage(format!(
                    "{} is not a {SCHEMA} report",
                    r.report.display()
                )));
            }
            let config: Command = serde_json::from_value(report["config"].take())?;
            (config, r.check.then_some(text))
        }
        other => (other.clone(), None),
    };
    let (result, code) = match run(&config, &ctx) {
        Ok(o) => (o.result, if o.budget_hit { 2 } else { 0 }),
        Err(CliError::Failed(partial)) => (partial, 1),
        Err(e) => return Err(e),
    };
    let text = render(&config, result)?;
    emit(cli, &text)?;
    if let Some(original) = check {
        if original != text {
            eprintln!("replayed report differs from the original");
            return Ok(1);
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
