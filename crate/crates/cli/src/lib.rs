//! Argument parsing and dispatch for the `critloc` binary.
//!
//! Every invocation produces one [`CommandResult`], printed as `key=value`
//! lines or, with `--json`, as a single JSON object. `g2 kummer mesh` prints
//! CSV instead. Exit codes: 0 success, 2 usage or precondition error, 1
//! internal failure.
//!
//! Points are taken in the affine chart `(u0, u1, u2, eta0, eta1, eta2)` of
//! `T*P^3`; points at infinity are not representable.

mod g2;
mod local;
pub mod output;

use std::panic::{self, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand};

pub use output::{CommandResult, Status};

#[derive(Debug, Parser)]
#[command(
    name = "critloc",
    version,
    about = "Genus-2 Hitchin system and local Higgs-field computations"
)]
pub struct Cli {
    /// Emit one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Top,
}

#[derive(Debug, Subcommand)]
pub enum Top {
    /// Genus-2 Hamiltonians, ranks, fibers and the Kummer surface.
    #[command(subcommand)]
    G2(g2::G2Cmd),
    /// Local models of a Higgs field near a zero.
    #[command(subcommand)]
    Local(local::LocalCmd),
}

/// Options shared by the randomized commands.
#[derive(Debug, Clone, Args)]
pub struct RandomArgs {
    /// Number of random starting points.
    #[arg(long)]
    pub seeds: Option<usize>,
    /// Acceptance tolerance on residuals.
    #[arg(long)]
    pub tol: Option<f64>,
    /// RNG seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code with the text to print on stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let json = cli.json;
    let name = command_name(&cli.command);
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli.command, &name)));
    let (code, result) = match outcome {
        Ok(Ok(Reply::Record(r))) => {
            let code = if r.status == Status::Ok { 0 } else { 2 };
            (code, r)
        }
        Ok(Ok(Reply::Raw(text))) => return (0, text),
        Ok(Err(e)) => {
            let mut r = CommandResult::new(name);
            r.fail(e.to_string());
            (2, r)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let mut r = CommandResult::new(name);
            r.fail(format!("internal error: {msg}"));
            (1, r)
        }
    };
    let text = if json {
        result.to_json() + "\n"
    } else {
        result.to_text()
    };
    (code, text)
}

pub(crate) enum Reply {
    Record(CommandResult),
    /// Printed verbatim (CSV).
    Raw(String),
}

fn command_name(cmd: &Top) -> String {
    match cmd {
        Top::G2(c) => format!("g2 {}", c.name()),
        Top::Local(c) => format!("local {}", c.name()),
    }
}

fn dispatch(cmd: &Top, name: &str) -> critloc::Result<Reply> {
    match cmd {
        Top::G2(c) => g2::run(c, name),
        Top::Local(c) => local::run(c, name).map(Reply::Record),
    }
}

/// Splits `text` on commas and parses exactly `n` rationals.
pub(crate) fn rationals(text: &str, n: usize, what: &str) -> critloc::Result<Vec<critloc::Rational>> {
    let vals = text
        .split(',')
        .map(str::parse)
        .collect::<critloc::Result<Vec<critloc::Rational>>>()?;
    if vals.len() != n {
        return Err(critloc::Error::InvalidInput(format!(
            "{what} needs {n} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}
