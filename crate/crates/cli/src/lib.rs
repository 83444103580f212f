//! `geomlab` command-line front end.

pub mod markdown;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use geomlab_core::fields::FieldError;
use geomlab_core::model::{builtin, parse_model_json, Model, ModelError};
use geomlab_core::rational::{parse_rational, Rational};
use geomlab_core::GeometryError;

use report::{build_report, AnalysisReport, FieldRequest, Sections};

#[derive(Debug, Parser)]
#[command(name = "geomlab", version, about = "Exact geometry of left-invariant metrics on Lie groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every analysis; adds a field report when --coeffs is given
    Analyze(CommonArgs),
    /// Levi-Civita connection
    Connection(CommonArgs),
    /// Curvature, Ricci, Weyl, ledger conditions and bi-invariance
    Curvature(CommonArgs),
    /// Einstein, invariant and algebraic Ricci soliton verdicts
    Solitons(CommonArgs),
    /// Parallel null line fields and parallel vector fields
    Walker(CommonArgs),
    /// Harmonic sections and harmonic maps among invariant fields
    Classify(CommonArgs),
    /// Report for a single invariant vector field (requires --coeffs)
    Field(CommonArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["builtin", "model"]))]
pub struct CommonArgs {
    /// Built-in model name
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Model file (JSON)
    #[arg(long, value_name = "PATH")]
    pub model: Option<PathBuf>,
    /// Re-express the model in its shipped pseudo-orthonormal frame first
    #[arg(long)]
    pub frame: bool,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Vector field coefficients in basis order, e.g. `0,1,0,-1/2`
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Domain volume for the energy; defaults to the model's volume, then 1
    #[arg(long, value_name = "RATIONAL")]
    pub volume: Option<String>,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read model file {path}: {source}")]
    ReadModel { path: PathBuf, source: std::io::Error },
    #[error("model {source_name}: {error}")]
    Model { source_name: String, error: ModelError },
    #[error("model has no shipped frame")]
    NoFrame,
    #[error("frame change failed: {0}")]
    Frame(#[from] GeometryError),
    #[error("--coeffs: malformed rational {0:?}")]
    Coefficient(String),
    #[error("--volume: malformed rational {0:?}")]
    Volume(String),
    #[error("the field subcommand requires --coeffs")]
    MissingCoefficients,
    #[error("field: {0}")]
    Field(#[from] FieldError),
    #[error("cannot write report to {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

pub fn load(args: &CommonArgs) -> Result<Model, CliError> {
    let model = match (&args.builtin, &args.model) {
        (Some(name), _) => {
            builtin(name).map_err(|error| CliError::Model { source_name: format!("builtin {name}"), error })?
        }
        (None, Some(path)) => load_file(path)?,
        (None, None) => unreachable!("clap requires a model source"),
    };
    if args.frame {
        return model.in_frame().ok_or(CliError::NoFrame)?.map_err(CliError::from);
    }
    Ok(model)
}

fn load_file(path: &Path) -> Result<Model, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::ReadModel { path: path.to_path_buf(), source })?;
    parse_model_json(&text).map_err(|error| CliError::Model { source_name: path.display().to_string(), error })
}

pub fn parse_coefficients(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',').map(|s| parse_rational(s.trim()).map_err(|_| CliError::Coefficient(s.to_string()))).collect()
}

fn field_request(args: &CommonArgs, model: &Model) -> Result<Option<FieldRequest>, CliError> {
    let Some(text) = &args.coeffs else { return Ok(None) };
    let coefficients = parse_coefficients(text)?;
    let volume = match &args.volume {
        Some(v) => parse_rational(v).map_err(|_| CliError::Volume(v.clone()))?,
        None => model.volume.clone().unwrap_or_else(|| Rational::from_integer(1.into())),
    };
    Ok(Some(FieldRequest { coefficients, volume }))
}

/// Builds the report for a parsed command line.
pub fn report_for(command: &Command) -> Result<(AnalysisReport, &CommonArgs), CliError> {
    let (args, sections) = match command {
        Command::Analyze(a) => (a, Sections::all()),
        Command::Connection(a) => (a, Sections { connection: true, ..Sections::default() }),
        Command::Curvature(a) => (a, Sections { curvature: true, ..Sections::default() }),
        Command::Solitons(a) => (a, Sections { solitons: true, ..Sections::default() }),
        Command::Walker(a) => (a, Sections { walker: true, ..Sections::default() }),
        Command::Classify(a) => (a, Sections { harmonic: true, ..Sections::default() }),
        Command::Field(a) => {
            if a.coeffs.is_none() {
                return Err(CliError::MissingCoefficients);
            }
            (a, Sections::default())
        }
    };
    let model = load(args)?;
    let field = field_request(args, &model)?;
    let report = build_report(&model, sections, field.as_ref())?;
    Ok((report, args))
}

pub fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Markdown => markdown::render(report),
    }
}

/// Runs a parsed command and writes its report.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let (report, args) = report_for(&cli.command)?;
    let text = render(&report, args.format);
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
