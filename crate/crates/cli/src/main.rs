//! `cap`: conformal invariants of planar domains from the command line.
//!
//! Every subcommand reads a JSON domain file, runs one computation and
//! writes JSON or CSV to stdout (or `--out`). Errors go to stderr as one JSON
//! object; the exit status is 0 on success, 2 for bad input, 3 for invalid
//! geometry and 4 for solver failures, including a ν-constancy deviation
//! above 1e-4.

mod commands;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use cap_core::geometry::GRADING_P;
use cap_core::CapError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use output::{to_json, Report};

/// Largest ν-constancy deviation accepted before the run counts as failed.
const NU_GUARDRAIL: f64 = 1e-4;

#[derive(Parser, Debug)]
#[command(name = "cap", version, about = "Conformal invariants of planar domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Domain description (JSON)
    #[arg(long)]
    domain: PathBuf,
    /// Nodes per boundary component (even, at least 8; powers of two recommended)
    #[arg(long, default_value_t = 1024)]
    n: usize,
    /// Grading exponent at corners
    #[arg(long, default_value_t = GRADING_P)]
    grading: u32,
    /// Write the result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Leave wall_time_s out of JSON output, making it reproducible byte for byte
    #[arg(long)]
    no_timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// Condenser potential u (uses --levels)
    Condenser,
    /// Harmonic measure σ_k of a boundary component (uses --component)
    Sigma,
    /// Harmonic measure of boundary arcs (uses --arcs)
    Hmeasure,
    /// Re ψ of the map onto the rectangle (uses --vertices)
    PsiRe,
    /// Im ψ of the map onto the rectangle (uses --vertices)
    PsiIm,
    /// Reduced modulus m(G, z) at each grid point
    Redmod,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capacity of the condenser whose plates are the holes of the domain
    Condenser {
        #[command(flatten)]
        common: Common,
        /// Plate levels δ_1,…,δ_m (all 1 by default)
        #[arg(long, allow_hyphen_values = true)]
        levels: Option<String>,
    },
    /// Logarithmic capacity of the complement of an unbounded domain
    Logcap {
        #[command(flatten)]
        common: Common,
    },
    /// Hyperbolic capacity of the plate E given as the only component
    Hypcap {
        #[command(flatten)]
        common: Common,
        /// Auxiliary point of B² \ E
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Elliptic capacity of the plate E given as the only component
    Ellcap {
        #[command(flatten)]
        common: Common,
    },
    /// Reduced modulus of a simply connected domain at α (at ∞ if unbounded)
    Redmod {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Reduced modulus of a multiply connected domain at α
    Genredmod {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Modulus of a quadrilateral
    Quadmod {
        #[command(flatten)]
        common: Common,
        /// Four vertices in positive order: `t1,t2,t3,t4` boundary parameters
        /// or `x1,y1;x2,y2;x3,y3;x4,y4` points
        #[arg(long, allow_hyphen_values = true)]
        vertices: String,
        /// Also report the reciprocity error |h·h' − 1|
        #[arg(long)]
        reciprocity: bool,
    },
    /// Harmonic measure at points
    Hmeasure {
        #[command(flatten)]
        common: Common,
        /// Arc endpoints `x,y;x,y;…`, pairs in boundary order (simply connected domains)
        #[arg(long, allow_hyphen_values = true)]
        arcs: Option<String>,
        /// Boundary component k (multiply connected domains)
        #[arg(long)]
        component: Option<usize>,
        /// Evaluation points `x,y;x,y;…`
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Harmonic-measure distribution function h(r) about z₀
    Hfun {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        z0: String,
        /// Radii as a:step:b
        #[arg(long)]
        rgrid: String,
    },
    /// Hyperbolic distance between two points
    Hdist {
        #[command(flatten)]
        common: Common,
        /// `x1,y1;x2,y2`
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Hyperbolic geodesic between two points
    Geodesic {
        #[command(flatten)]
        common: Common,
        /// `x1,y1;x2,y2`
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
    /// Hyperbolic circle about z₀
    Hcircle {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        z0: String,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 128)]
        samples: usize,
    },
    /// A scalar field on a rectangular grid, masked near and outside the boundary
    PotentialGrid {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        field: Field,
        /// Points per direction, NX,NY
        #[arg(long, default_value = "101,101")]
        grid: String,
        /// x0,y0,x1,y1 (the domain's bounding box by default)
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        levels: Option<String>,
        #[arg(long)]
        component: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        arcs: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        vertices: Option<String>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Condenser { common, .. }
            | Command::Logcap { common }
            | Command::Hypcap { common, .. }
            | Command::Ellcap { common }
            | Command::Redmod { common, .. }
            | Command::Genredmod { common, .. }
            | Command::Quadmod { common, .. }
            | Command::Hmeasure { common, .. }
            | Command::Hfun { common, .. }
            | Command::Hdist { common, .. }
            | Command::Geodesic { common, .. }
            | Command::Hcircle { common, .. }
            | Command::PotentialGrid { common, .. } => common,
        }
    }
}

/// Why a run failed, with its exit status.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Core(CapError),
}

impl From<CapError> for Failure {
    fn from(e: CapError) -> Self {
        Failure::Core(e)
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Config(msg)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) | Failure::Core(CapError::Config(_) | CapError::Domain(_)) => 2,
            Failure::Core(CapError::Geometry(_)) => 3,
            Failure::Core(CapError::Solver { .. } | CapError::Numerical(_)) => 4,
        }
    }

    fn to_json(&self) -> String {
        let v = match self {
            Failure::Config(msg) => json!({"error": "config", "message": msg}),
            Failure::Core(e) => {
                let kind = match e {
                    CapError::Domain(_) => "domain",
                    CapError::Geometry(_) => "geometry",
                    CapError::Solver { .. } => "solver",
                    CapError::Numerical(_) => "numerical",
                    CapError::Config(_) => "config",
                };
                let mut v = json!({"error": kind, "message": e.to_string()});
                if let CapError::Solver { residuals, .. } = e {
                    v["final_residual"] = output::num(residuals.last().copied().unwrap_or(f64::NAN));
                    v["iterations"] = json!(residuals.len());
                }
                v
            }
        };
        to_json(&v)
    }
}

fn execute(command: &Command) -> Result<Report, Failure> {
    use commands::*;
    match command {
        Command::Condenser { common, levels } => condenser(common, levels.as_deref()),
        Command::Logcap { common } => logcap(common),
        Command::Hypcap { common, alpha } => hypcap(common, alpha.as_deref()),
        Command::Ellcap { common } => ellcap(common),
        Command::Redmod { common, alpha } => redmod(common, alpha.as_deref(), false),
        Command::Genredmod { common, alpha } => redmod(common, alpha.as_deref(), true),
        Command::Quadmod { common, vertices, reciprocity } => quadmod(common, vertices, *reciprocity),
        Command::Hmeasure { common, arcs, component, points } => {
            hmeasure(common, arcs.as_deref(), *component, points)
        }
        Command::Hfun { common, z0, rgrid } => hfun(common, z0, rgrid),
        Command::Hdist { common, points } => hdist(common, points),
        Command::Geodesic { common, points, samples } => geodesic(common, points, *samples),
        Command::Hcircle { common, z0, radius, samples } => hcircle(common, z0, *radius, *samples),
        Command::PotentialGrid { common, field, grid, bbox, levels, component, arcs, vertices } => {
            potential_grid(
                common,
                *field,
                &GridRequest {
                    grid,
                    bbox: bbox.as_deref(),
                    levels: levels.as_deref(),
                    component: *component,
                    arcs: arcs.as_deref(),
                    vertices: vertices.as_deref(),
                },
            )
        }
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", f.to_json());
    ExitCode::from(f.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&Failure::Config(e.to_string().trim().to_string())),
    };
    let common = cli.command.common().clone();
    if !common.n.is_power_of_two() {
        eprintln!("{}", to_json(&json!({"warning": format!("n = {} is not a power of two", common.n)})));
    }
    let start = Instant::now();
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(f) => return fail(&f),
    };
    let elapsed = start.elapsed().as_secs_f64();
    let text = match common.format {
        Format::Json => report.to_json((!common.no_timing).then_some(elapsed)),
        Format::Csv => report.table.to_csv(),
    };
    let written = match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        return fail(&Failure::Config(msg));
    }
    if !(report.nu_deviation <= NU_GUARDRAIL) {
        return fail(&Failure::Core(CapError::Numerical(format!(
            "nu deviation {:e} exceeds {NU_GUARDRAIL:e}",
            report.nu_deviation
        ))));
    }
    ExitCode::SUCCESS
}
