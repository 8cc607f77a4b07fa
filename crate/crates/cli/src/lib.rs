//! Command-line front end: gardens, towers, numeration conversions,
//! verification suites and OEIS cross-checks.

pub mod bfile;
pub mod oeis;
pub mod render;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ostro_core::towers::{locate, locate_left};
use ostro_core::{DualWord, NumerationContext, OstrowskiWord};
use thiserror::Error;

use crate::bfile::{BFile, BFileError};
use crate::oeis::SequenceId;
use crate::render::{Format, RenderSpec};
use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "ostro",
    version,
    about = "Exact Ostrowski numeration, towers and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DArg {
    /// Recurrence parameter in X(n+1) = d X(n) + X(n-1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub d: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The wall column and the columns to its right.
    Garden {
        #[command(flatten)]
        d: DArg,
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        cols: i64,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Columns on both sides of the wall with the right (|), red (:) and
    /// left (!) walls marked; # where red and left walls coincide.
    Tower {
        #[command(flatten)]
        d: DArg,
        #[arg(long)]
        rows: usize,
        /// Show columns 1-LEFT ..= 0.
        #[arg(long, default_value_t = 7)]
        left: i64,
        /// Show columns 1 ..= COLS.
        #[arg(long, default_value_t = 1)]
        cols: i64,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Append the row label (least significant digit first).
        #[arg(long)]
        labels: bool,
        /// Underline palindromic rows from the red wall rightward.
        #[arg(long)]
        underline_palindromes: bool,
    },
    /// Ostrowski word of N >= 0, most significant digit first.
    Encode(Convert),
    /// Value of an Ostrowski word.
    Decode(Convert),
    /// Dual Ostrowski word of an integer.
    DualEncode(Convert),
    /// Value of a dual Ostrowski word.
    DualDecode(Convert),
    /// Row and column of N right of the wall and left of the red wall.
    Locate {
        #[command(flatten)]
        d: DArg,
        #[arg(allow_negative_numbers = true)]
        n: i128,
    },
    /// Run a verification suite; exit 1 on any counterexample.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        d_min: u32,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        /// Suite-specific range: values/rows for numeration and towers,
        /// index bound for identities, largest block for blocks.
        #[arg(long)]
        limit: Option<i128>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare a generated sequence with a b-file.
    Oeis {
        #[arg(long)]
        id: String,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        fixture: PathBuf,
        /// Download the b-file from oeis.org into FIXTURE first.
        #[arg(long)]
        fetch: bool,
    },
}

#[derive(Debug, Args)]
pub struct Convert {
    #[command(flatten)]
    pub d: DArg,
    #[arg(allow_hyphen_values = true)]
    pub value: String,
    /// Read and write words least significant digit first.
    #[arg(long)]
    pub lsd: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ostro_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    BFile { path: PathBuf, source: BFileError },
    #[error("fetching {id}: {message}")]
    Fetch { id: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use ostro_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::BFile { .. } => 2,
            CliError::Core(E::Domain(_) | E::InvalidWord(_) | E::Unsupported { .. } | E::UnknownIdentity(_)) => 2,
            CliError::Core(_) | CliError::Fetch { .. } => 1,
        }
    }
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
    /// Whether `text` is an error message rather than a result.
    pub error: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self::with_code(text, 0)
    }

    fn with_code(text: String, code: u8) -> Self {
        Self {
            text,
            code,
            error: false,
        }
    }

    fn failure(text: String, code: u8) -> Self {
        Self {
            text,
            code,
            error: true,
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Garden { d, rows, cols, format } => {
            let ctx = NumerationContext::new(d.d)?;
            Ok(Output::ok(render::render(
                &ctx,
                &RenderSpec::garden(d.d, rows, cols, format),
            )?))
        }
        Command::Tower {
            d,
            rows,
            left,
            cols,
            format,
            labels,
            underline_palindromes,
        } => {
            let ctx = NumerationContext::new(d.d)?;
            let mut spec = RenderSpec::tower(d.d, rows, left, cols, format);
            spec.labels = labels;
            spec.underline_palindromes = underline_palindromes;
            Ok(Output::ok(render::render(&ctx, &spec)?))
        }
        Command::Encode(c) => {
            let ctx = NumerationContext::new(c.d.d)?;
            let w = ctx.encode(parse_int(&c.value)?)?;
            Ok(Output::ok(line(if c.lsd {
                w.to_lsd_string()
            } else {
                w.to_msd_string()
            })))
        }
        Command::Decode(c) => {
            let ctx = NumerationContext::new(c.d.d)?;
            let w = if c.lsd {
                OstrowskiWord::parse_lsd(c.d.d, &c.value)?
            } else {
                OstrowskiWord::parse_msd(c.d.d, &c.value)?
            };
            Ok(Output::ok(line(ctx.decode(&w)?)))
        }
        Command::DualEncode(c) => {
            let ctx = NumerationContext::new(c.d.d)?;
            let w = ctx.dual_encode(parse_int(&c.value)?)?;
            Ok(Output::ok(line(if c.lsd {
                w.to_lsd_string()
            } else {
                w.to_msd_string()
            })))
        }
        Command::DualDecode(c) => {
            let ctx = NumerationContext::new(c.d.d)?;
            let w = if c.lsd {
                DualWord::parse_lsd(c.d.d, &c.value)?
            } else {
                DualWord::parse_msd(c.d.d, &c.value)?
            };
            Ok(Output::ok(line(ctx.dual_decode(&w)?)))
        }
        Command::Locate { d, n } => locate_cmd(d.d, n),
        Command::Verify {
            suite,
            d_min,
            d_max,
            limit,
            format,
        } => {
            let report = verify::run_suite(suite, d_min..=d_max, limit)?;
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            };
            Ok(Output::with_code(text, if report.passed { 0 } else { 1 }))
        }
        Command::Oeis {
            id,
            terms,
            fixture,
            fetch,
        } => {
            let id: SequenceId = id
                .parse()
                .map_err(|e: oeis::UnknownSequence| CliError::Usage(e.to_string()))?;
            if fetch {
                let body = oeis::fetch(id).map_err(|e| CliError::Fetch {
                    id: id.to_string(),
                    message: e.to_string(),
                })?;
                std::fs::write(&fixture, body).map_err(|source| CliError::Io {
                    path: fixture.clone(),
                    source,
                })?;
            }
            let text = std::fs::read_to_string(&fixture).map_err(|source| CliError::Io {
                path: fixture.clone(),
                source,
            })?;
            let bfile: BFile = text.parse().map_err(|source| CliError::BFile {
                path: fixture.clone(),
                source,
            })?;
            let diff = oeis::diff(id, &oeis::generate(id, terms)?, &bfile);
            Ok(Output::with_code(line(&diff), if diff.matched() { 0 } else { 1 }))
        }
    }
}

fn line(x: impl std::fmt::Display) -> String {
    format!("{x}\n")
}

fn parse_int(s: &str) -> Result<i128, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("expected an integer, got {s:?}")))
}

fn locate_cmd(d: u32, n: i128) -> Result<Output, CliError> {
    let ctx = NumerationContext::new(d)?;
    let mut text = String::new();
    let describe = |m: usize| -> Result<String, CliError> {
        let w = ctx.trimmed_word(m)?;
        Ok(format!("word={} block={}", w.to_lsd_string(), w.len().div_ceil(2)))
    };
    if n >= 1 {
        let (m, col) = locate(&ctx, n)?;
        text += &format!("right: m={m} n={col} {}\n", describe(m)?);
    }
    if n != 0 && d >= 2 {
        let (m, col) = locate_left(&ctx, n)?;
        let red = 1 - ctx.trimmed_word(m)?.len() as i64;
        text += &format!("left: m={m} n={col} column={} {}\n", red - col, describe(m)?);
    }
    if n == 0 {
        text += "wall: m=1 n=0\n";
    }
    Ok(Output::ok(text))
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// come back as clap's rendered message with exit code 2.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(cli) {
            Ok(out) => out,
            Err(e) => Output::failure(format!("error: {e}\n"), e.exit_code()),
        },
        Err(e) if e.use_stderr() => Output::failure(e.render().to_string(), 2),
        Err(e) => Output::ok(e.render().to_string()),
    }
}
