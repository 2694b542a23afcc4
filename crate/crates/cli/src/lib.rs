//! Command-line front end: `harvest`, `scan` and `stats`.
//!
//! Standard output carries only the requested rendering; warnings and errors
//! go to standard error. Exit codes: 0 success (possibly with warnings),
//! 1 usage error, 2 I/O or not-a-PDF error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use harvester_core::corpus::{classify, scan, FileKind, ScanOptions};
use harvester_core::export::{export_record_json, export_stats_json, render, render_stats};
use harvester_core::record::build_record;
use harvester_core::{CorpusStats, Error, ExportFormat, HarvestRecord, ReferenceDate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

/// Environment variable read for the worker count when `--workers` is absent.
pub const WORKERS_ENV: &str = "HARVESTER_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "pdf-harvester",
    version,
    about = "Harvest bibliographic metadata from PDF articles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Harvest one PDF and print its record.
    Harvest {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Harvest every PDF under a directory and print the records.
    Scan {
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        walk: Walk,
    },
    /// Print file-type shares and field coverage for a directory.
    Stats {
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        walk: Walk,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(short, long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Date recency is measured against: YYYY-MM-DD or YYYY. Defaults to today.
    #[arg(short = 'r', long, value_parser = parse_reference_date)]
    reference_date: Option<ReferenceDate>,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Walk {
    /// Only scan the top-level directory.
    #[arg(long)]
    no_recursive: bool,
    /// Classify by extension only, skipping the %PDF- header check.
    #[arg(long)]
    no_magic: bool,
    /// Worker threads (default: available CPUs).
    #[arg(short, long, env = WORKERS_ENV)]
    workers: Option<NonZeroUsize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
    Ris,
    Bibtex,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ExportFormat::Table,
            Format::Csv => ExportFormat::Csv,
            Format::Json => ExportFormat::Json,
            Format::Ris => ExportFormat::Ris,
            Format::Bibtex => ExportFormat::BibTex,
        }
    }
}

fn parse_reference_date(s: &str) -> Result<ReferenceDate, String> {
    s.parse()
        .map_err(|_| format!("expected YYYY-MM-DD or YYYY, got {s:?}"))
}

impl Walk {
    fn options(&self) -> ScanOptions {
        ScanOptions {
            recursive: !self.no_recursive,
            magic: !self.no_magic,
            workers: self.workers,
        }
    }
}

enum Failure {
    Usage(String),
    Failed(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Failed(e)
    }
}

/// Runs the tool with process stdio.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the tool, writing to the given streams. `argv[0]` is the program
/// name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, err) {
        Ok((text, target)) => match emit(&text, target.as_deref(), out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAILURE
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn emit(text: &str, target: Option<&Path>, out: &mut dyn Write) -> Result<(), Error> {
    match target {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io {
            path: path.to_owned(),
            source: e,
        }),
        None => out
            .write_all(text.as_bytes())
            .and_then(|()| out.flush())
            .map_err(|e| Error::Io {
                path: PathBuf::from("<stdout>"),
                source: e,
            }),
    }
}

fn report_warnings(records: &[HarvestRecord], err: &mut dyn Write) {
    for r in records {
        for w in &r.warnings {
            let _ = writeln!(err, "warning: {}: {w}", r.file_name);
        }
    }
}

fn execute(cli: Cli, err: &mut dyn Write) -> Result<(String, Option<PathBuf>), Failure> {
    match cli.command {
        Command::Harvest { file, common } => {
            let reference = common.reference_date.unwrap_or_else(ReferenceDate::today);
            let meta = fs::metadata(&file).map_err(|_| Error::NotAFile(file.clone()))?;
            if !meta.is_file() {
                return Err(Error::NotAFile(file).into());
            }
            if classify(&file)?.kind != FileKind::Pdf {
                return Err(Error::NotPdf(file).into());
            }
            let record = build_record(&file, 1, reference)?;
            report_warnings(std::slice::from_ref(&record), err);
            let text = match common.format {
                Format::Json => export_record_json(&record),
                f => {
                    let mut stats = CorpusStats::empty(reference);
                    stats.records.push(record);
                    render(f.into(), &stats)
                }
            };
            Ok((text, common.output))
        }
        Command::Scan { dir, common, walk } => {
            let stats = scan_dir(&dir, &common, &walk, err)?;
            Ok((render(common.format.into(), &stats), common.output))
        }
        Command::Stats { dir, common, walk } => {
            let text_format = match common.format {
                Format::Table | Format::Json => common.format,
                other => {
                    return Err(Failure::Usage(format!(
                        "stats supports table and json output, not {}",
                        ExportFormat::from(other)
                    )))
                }
            };
            let stats = scan_dir(&dir, &common, &walk, err)?;
            let text = if text_format == Format::Json {
                export_stats_json(&stats)
            } else {
                render_stats(&stats)
            };
            Ok((text, common.output))
        }
    }
}

fn scan_dir(
    dir: &Path,
    common: &Common,
    walk: &Walk,
    err: &mut dyn Write,
) -> Result<CorpusStats, Failure> {
    let reference = common.reference_date.unwrap_or_else(ReferenceDate::today);
    let stats = scan(dir, reference, &walk.options())?;
    for w in &stats.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    report_warnings(&stats.records, err);
    Ok(stats)
}
