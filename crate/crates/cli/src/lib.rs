//! The `maxplus` command-line tool: JSON documents in, JSON results out.

pub mod commands;
pub mod document;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use maxplus::DEFAULT_VERTEX_BUDGET;

/// Everything that can stop a command. The exit code depends on the variant.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or missing input.
    Input(String),
    Io(String),
    Lib(maxplus::Error),
}

impl From<maxplus::Error> for CliError {
    fn from(e: maxplus::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    /// 1 for bad input, 2 for an exhausted budget, 3 for a violated precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 1,
            CliError::Lib(e) => match e {
                maxplus::Error::Parse(_) | maxplus::Error::Shape(_) => 1,
                maxplus::Error::Resource { .. } => 2,
                maxplus::Error::Domain(_) | maxplus::Error::Degenerate(_) => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "bad input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Lib(maxplus::Error::Domain(m)) => write!(f, "precondition violated: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "maxplus",
    version,
    about = "Exact max-plus cones, half-spaces, cells and polar cones",
    after_help = "Documents are JSON with 1-based indices; scalars are strings such as \"-7/2\" or \"-inf\".\n\
                  Exit codes: 1 bad input, 2 budget exceeded, 3 precondition violated."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input document (default: stdin).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Output file (default: stdout).
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Cap on enumerated candidates for vertex-based commands.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: u64,

    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Second operand: a point, halfspaces or polar document.
    #[arg(long = "with", global = true, value_name = "FILE")]
    pub with: Option<PathBuf>,

    /// Second operand as a comma-separated point, e.g. "0,-7/2,-inf".
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LIST")]
    pub point: Option<String>,

    /// Add coordinates with the first entry pinned to 0, for plotting.
    #[arg(long = "emit-plot-data", global = true)]
    pub emit_plot_data: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Cone → halfspaces cutting it out.
    Vrep2hrep,
    /// Halfspaces → generators of their intersection.
    Hrep2vrep,
    /// Cone → one generator per extreme ray.
    Reduce,
    /// Membership of a point (--point/--with) in a cone or polyhedron.
    Member,
    /// Type of a point (--point/--with) relative to the cone generators.
    Type,
    /// Minimality of halfspaces (--with) with respect to the cone.
    MinimalCheck,
    /// Minimal coverings and their halfspaces at an apex (--point/--with).
    MinimalAtApex,
    /// Vertices of the cell decomposition.
    Vertices,
    /// Separates a point (--point/--with) from the cone.
    Separate,
    /// Polyhedron → extreme points and extreme rays.
    Decompose,
    /// Polyhedron → recession cone.
    Recession,
    /// Cone → extreme vectors of its polar.
    PolarExtremes,
    /// Extremality of polar vectors (--with) for the cone.
    PolarCheck,
    /// Face cut out by a halfspace (--with) containing the cone.
    Face,
    /// Padovan number P(n).
    Padovan {
        #[arg(long)]
        n: usize,
    },
    /// Sperner bound C(n, floor(n/2)).
    Sperner {
        #[arg(long)]
        n: usize,
    },
}

/// Runs the tool and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(shown.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(shown.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "maxplus: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    let value = commands::dispatch(cli, &mut || read_input(cli, stdin))?;
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    }
    .map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    match &cli.input {
        Some(path) => read_file(path),
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

pub(crate) fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
