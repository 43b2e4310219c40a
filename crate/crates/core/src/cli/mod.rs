//! The `dhat` command line front end.
//!
//! Inputs ending in `.json` are read as precubical sets in the format of
//! [`PrecubicalSet::to_json`]; anything else is parsed as a PV program and
//! replaced by its model.
//!
//! Exit codes: 0 on success, 2 when `analyze` finds a deadlock, 1 on any
//! error (including usage errors).

mod render;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::freeomega::{glob, realize, FreeOmegaError, Limits};
use crate::homology::{
    chain_from_augmented, chain_from_precubical, homology_report, theory_table, ChainMode, HomologyError,
    ReportOptions, Theory,
};
use crate::nerves::{branching_nerve, globular_nerve, merging_nerve, NerveError, PointMode};
use crate::precubical::{PrecubicalError, PrecubicalSet};
use crate::pvlang::{build_model, parse_pv, PvError, PvProgram};
use crate::FORMAT_VERSION;

pub use render::render_svg;

/// Environment variable overriding the default cell cap.
pub const MAX_CELLS_ENV: &str = "DHAT_MAX_CELLS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DEADLOCK: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}:{source}")]
    Program { path: String, source: PvError },
    #[error("{path}: {source}")]
    Complex { path: String, source: PrecubicalError },
    #[error("{path}: not a precubical set: {violation}")]
    InvalidComplex { path: String, violation: String },
    #[error(transparent)]
    Pv(#[from] PvError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    FreeOmega(#[from] FreeOmegaError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "dhat", version, about = "Directed homotopy analysis of PV programs and precubical sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report deadlocks, unreachable and unsafe states of a PV program.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Homology groups in one theory.
    Homology {
        file: PathBuf,
        #[arg(long, default_value = "cube", value_parser = parse_theory)]
        theory: Theory,
        /// Degrees to report (repeatable). Defaults to all computable degrees.
        #[arg(long = "degree")]
        degrees: Vec<usize>,
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        json: bool,
    },
    /// List the cells of the free ω-category on the input.
    Cells {
        file: PathBuf,
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        json: bool,
    },
    /// Write the model, cell table, nerve or chain complex.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Theory for the nerve and sparse formats.
        #[arg(long, default_value = "gl", value_parser = parse_theory)]
        theory: Theory,
        #[command(flatten)]
        table: TableArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw the state space of a two-process PV program as SVG.
    Render {
        file: PathBuf,
        /// Output path; standard output when omitted.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Highest cell dimension to generate.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    max_dim: u64,
    /// Cell cap; overrides DHAT_MAX_CELLS.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_cells: Option<u64>,
    /// Keep a partial table instead of failing when the cap is hit.
    #[arg(long)]
    allow_truncation: bool,
    /// Apply the globe construction to the cell table.
    #[arg(long)]
    glob: bool,
    /// Level -1 of the globular nerve.
    #[arg(long, value_enum, default_value_t = Points::Full)]
    points: Points,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Points {
    Full,
    Realized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// The precubical set as JSON.
    Json,
    /// The cell table as JSON.
    Cells,
    /// The nerve of the chosen theory as JSON.
    Nerve,
    /// Differentials as `degree row col value` triplets.
    Sparse,
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse()
}

impl TableArgs {
    fn options(&self) -> Result<ReportOptions, CliError> {
        let max_cells = match self.max_cells {
            Some(c) => c as usize,
            None => match std::env::var(MAX_CELLS_ENV) {
                Ok(v) => v
                    .trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&c| c > 0)
                    .ok_or_else(|| CliError::Usage(format!("{MAX_CELLS_ENV} must be a positive integer, got {v:?}")))?,
                Err(_) => Limits::DEFAULT_MAX_CELLS,
            },
        };
        Ok(ReportOptions {
            limits: Limits::new(self.max_dim as usize)
                .max_cells(max_cells)
                .allow_truncation(self.allow_truncation),
            points: match self.points {
                Points::Full => PointMode::Full,
                Points::Realized => PointMode::Realized,
            },
            glob: self.glob,
        })
    }
}

/// A loaded input file.
struct Input {
    complex: PrecubicalSet,
    program: Option<PvProgram>,
}

fn load(path: &Path) -> Result<Input, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    if path.extension().is_some_and(|e| e == "json") {
        let complex = PrecubicalSet::from_json(&text).map_err(|source| CliError::Complex {
            path: shown.clone(),
            source,
        })?;
        if let Some(v) = complex.validate().first() {
            return Err(CliError::InvalidComplex {
                path: shown,
                violation: v.to_string(),
            });
        }
        return Ok(Input { complex, program: None });
    }
    let program = parse_pv(&text).map_err(|source| CliError::Program { path: shown, source })?;
    let complex = build_model(&program)?.grid.complex;
    Ok(Input {
        complex,
        program: Some(program),
    })
}

fn need_program(input: Input, path: &Path, what: &str) -> Result<PvProgram, CliError> {
    input
        .program
        .ok_or_else(|| CliError::Usage(format!("{}: {what} needs a PV program, not a precubical set", path.display())))
}

fn write_to(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    match cli.command {
        Command::Analyze { file, json } => {
            let prog = need_program(load(&file)?, &file, "analyze")?;
            let report = build_model(&prog)?.analyze();
            text = if json { report.to_json() } else { report.to_text() };
            if !report.deadlocks.is_empty() {
                code = EXIT_DEADLOCK;
            }
        }
        Command::Homology {
            file,
            theory,
            degrees,
            table,
            json,
        } => {
            let input = load(&file)?;
            let degrees = if !degrees.is_empty() {
                degrees
            } else if theory == Theory::Cube {
                (0..=input.complex.dim().unwrap_or(0)).collect()
            } else {
                vec![0, 1]
            };
            let report = homology_report(&input.complex, theory, &degrees, &table.options()?)?;
            text = if json { report.to_json() } else { report.to_text() };
        }
        Command::Cells { file, table, json } => {
            let input = load(&file)?;
            let t = theory_table(&input.complex, &table.options()?)?;
            text = if json { t.to_json() } else { t.listing() };
        }
        Command::Export {
            file,
            format,
            theory,
            table,
            output,
        } => {
            let input = load(&file)?;
            let opts = table.options()?;
            text = match (format, theory) {
                (Format::Json, _) => input.complex.to_json(),
                (Format::Cells, _) => theory_table(&input.complex, &opts)?.to_json(),
                (Format::Sparse, Theory::Cube) => {
                    if opts.glob {
                        return Err(HomologyError::UnsupportedTheory(theory).into());
                    }
                    sparse_header(theory) + &chain_from_precubical(&input.complex)?.export_sparse()
                }
                (Format::Nerve, Theory::Cube) => {
                    return Err(CliError::Usage("the nerve format needs a nerve theory (gl, gl- or gl+)".into()))
                }
                (Format::Nerve | Format::Sparse, _) => {
                    let t = realize(&input.complex, opts.limits)?.table;
                    let t = if opts.glob { glob(&t) } else { t };
                    let nerve = match theory {
                        Theory::Globular => globular_nerve(&t, 1, opts.points)?,
                        Theory::Branching => branching_nerve(&t, 1)?,
                        _ => merging_nerve(&t, 1)?,
                    };
                    if format == Format::Nerve {
                        nerve.to_json(&t)
                    } else {
                        sparse_header(theory)
                            + &chain_from_augmented(&nerve.set, ChainMode::Unnormalized).export_sparse()
                    }
                }
            };
            if let Some(path) = output {
                write_to(&path, &text)?;
                text.clear();
            }
        }
        Command::Render { file, svg } => {
            let prog = need_program(load(&file)?, &file, "render")?;
            let model = build_model(&prog)?;
            let drawing = render_svg(&model)?;
            match svg {
                Some(path) => write_to(&path, &drawing)?,
                None => text = drawing,
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(code)
}

fn sparse_header(theory: Theory) -> String {
    format!("# dhat sparse version {FORMAT_VERSION} theory {theory}\n")
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(shown.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(shown.as_bytes());
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
