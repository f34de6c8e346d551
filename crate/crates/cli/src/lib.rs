//! Command-line driver for `ncm-core`: argument handling, caches, report
//! formats and the acceptance verification suite.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod cache;
pub mod commands;
pub mod degree_data;
pub mod error;
pub mod report;
pub mod verify;
pub mod wire;

pub use error::{CliError, CliResult};
pub use report::{Format, Report};

pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable holding the default cache directory.
pub const CACHE_DIR_ENV: &str = "NCM_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "ncm", version, about = "m-divisible noncrossing partitions of finite reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Group label: A1..A5, B2..B4, D4, I2(3)..I2(12), H3. `formulas` also
    /// accepts H4, F4, E6..E8, G(d,1,n) and G(e,e,n).
    #[arg(long, global = true)]
    pub group: Option<String>,

    /// Divisibility parameter (for `formulas`, the largest m checked).
    #[arg(long, global = true, default_value_t = 1)]
    pub m: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for group and poset caches.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = ncm_core::DEFAULT_MAX_ELEMENTS)]
    pub max_elements: u64,

    #[arg(long, global = true, default_value_t = ncm_core::DEFAULT_MAX_SIMPLICES)]
    pub max_simplices: u64,

    /// Criteria to run: `all`, or a comma-separated list of numbers or names.
    #[arg(long, global = true, default_value = "all")]
    pub suite: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List NC^(m)(W) and check its cardinality.
    Enumerate,
    /// Reduced Euler characteristic, direct and closed form.
    Euler,
    /// f-vector, multichain counts and the rank-selected table.
    Chains,
    /// Reduced integral homology of the truncated poset.
    Homology,
    /// Fuss-Catalan numbers and the identity suite for a degree table.
    Formulas,
    /// Run the acceptance criteria.
    Verify,
}

impl Cli {
    pub fn case_spec(&self) -> commands::CaseSpec {
        commands::CaseSpec {
            group: self.group.clone(),
            m: self.m,
            cache: cache::Cache::new(self.cache_dir.clone()),
            max_elements: self.max_elements,
            max_simplices: self.max_simplices,
            suite: self.suite.clone(),
        }
    }
}

pub fn execute(command: Command, case: &commands::CaseSpec) -> CliResult<Report> {
    match command {
        Command::Enumerate => commands::enumerate(case),
        Command::Euler => commands::euler(case),
        Command::Chains => commands::chains(case),
        Command::Homology => commands::homology(case),
        Command::Formulas => commands::formulas(case),
        Command::Verify => commands::verify(case),
    }
}

/// Parses `args`, runs the command and writes the report to `out`.
/// Returns the process exit code: 0 success, 1 mismatch, 2 invalid input or
/// size guard.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, &cli.case_spec()) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.ok {
                0
            } else {
                let _ = writeln!(err, "verification mismatch in `{}`", report.command);
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
