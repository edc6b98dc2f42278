//! The `two-loop` command line.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 when an input file fails
//! to read, parse or validate, 3 when an internal identity breaks (including
//! a failing `verify`).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cabling;
use crate::error::Error;
use crate::knotio;
use crate::tables;
use crate::torus::{self, TorusParams};
use crate::vassiliev::{self, VassilievValues};
use crate::verify::Verifier;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "two-loop",
    version,
    about = "2-loop polynomials of torus knots and cable knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an invariant of the torus knot T(P,Q).
    Torus {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Print the coefficients of the 2-loop polynomial of T(P,Q) as a table.
    Table {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum)]
        layout: Layout,
    },
    /// Cable the knot in a .knot file and write the resulting record.
    Cable {
        input: PathBuf,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-derive the golden tables and all cross-identities.
    Verify {
        #[arg(long)]
        pmax: i64,
        #[arg(long)]
        qmax: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Alexander,
    Theta,
    ThetaHat,
    V2,
    V3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    Grid,
    Domain,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidParams(_) | Error::UnknownBuiltin(_) => EXIT_USAGE,
            Error::Syntax { .. } | Error::Validation(_) => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Self {
            code: EXIT_INPUT,
            message: err.to_string(),
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn params(p: i64, q: i64) -> Result<TorusParams, Failure> {
    TorusParams::new(p, q).map_err(|e| Failure::usage(e.to_string()))
}

fn execute(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Torus { p, q, what } => {
            let t = params(p, q)?;
            let text = match what {
                What::Alexander => torus::alexander(t)?.to_string(),
                What::Theta => torus::theta(t)?
                    .fundamental_domain()?
                    .into_iter()
                    .map(|(n, m, c)| format!("{n} {m} {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                What::ThetaHat => torus::theta_hat(t)?.to_string(),
                What::V2 => vassiliev::v2(&cabling::KnotRecord::torus(t)?).to_string(),
                What::V3 => vassiliev::v3(&cabling::KnotRecord::torus(t)?)?.to_string(),
            };
            writeln!(stdout, "{text}")?;
        }
        Command::Table { p, q, layout } => {
            let t = params(p, q)?;
            let theta = torus::theta(t)?;
            let text = match layout {
                Layout::Grid => tables::render_grid(&theta)?,
                Layout::Domain => tables::render_domain(t, &theta)?,
            };
            write!(stdout, "{text}")?;
        }
        Command::Cable {
            input,
            p,
            q,
            output,
        } => {
            params(p, q)?;
            let shown = input.display();
            let text = fs::read_to_string(&input).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{shown}: {e}"),
            })?;
            let record = knotio::parse_record(&text).map_err(|e| {
                let mut f = Failure::from(e.clone());
                f.message = match e {
                    Error::Syntax {
                        line,
                        column,
                        message,
                    } => {
                        format!("{shown}:{line}:{column}: {message}")
                    }
                    other => format!("{shown}: {other}"),
                };
                f
            })?;
            let cabled = cabling::cable_record(&record, p, q)?;
            let values = VassilievValues::of(&cabled)?;
            let serialized = knotio::serialize_record(&cabled);
            let summary = format!("{}: v2 = {}, v3 = {}", cabled.name(), values.v2, values.v3);
            match output {
                Some(path) => {
                    fs::write(&path, serialized).map_err(|e| Failure {
                        code: EXIT_INPUT,
                        message: format!("{}: {e}", path.display()),
                    })?;
                    writeln!(stdout, "{summary}")?;
                }
                None => {
                    write!(stdout, "{serialized}")?;
                    writeln!(stderr, "{summary}")?;
                }
            }
        }
        Command::Verify { pmax, qmax } => {
            let verifier = Verifier::new(pmax, qmax).map_err(|e| Failure::usage(e.to_string()))?;
            let report = verifier.run();
            write!(stdout, "{report}")?;
            if !report.all_passed() {
                return Ok(EXIT_INTERNAL);
            }
        }
    }
    Ok(EXIT_OK)
}
