//! Command-line front end: classification, volume sweeps, and mesh export.
//!
//! Exit codes are a stable contract: `0` Separable, `1` Entangled,
//! `2` Boundary for `classify`; `0` success for the other commands;
//! `64` usage or validation errors; `74` I/O errors; `70` internal
//! consistency failures. Data goes to stdout or `--out`, diagnostics to
//! stderr, and every command is deterministic for fixed flags and seeds.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sepgeo::{
    basis_entanglement, classification_grid_with, classify_with, cone_mesh, is_fixed_point,
    mixture, octahedron_mesh, separable_volume_fraction, stella_octangula_mesh, tetrahedron_mesh,
    weights_to_point, Alpha, ConeSelector, Label, SimplexWeights, SurfaceMesh,
};

/// Environment variable overriding the default classification band.
const EPS_ENV: &str = "SEP_EPS";

#[derive(Parser)]
#[command(
    name = "sepgeo",
    version,
    about = "Separability geometry of two-qubit basis-tetrahedron mixtures",
    after_help = "The classification band defaults to 1e-9 and can be overridden \
                  with --eps or the SEP_EPS environment variable (flag wins)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one mixture as Separable / Entangled / Boundary.
    ///
    /// Exit code encodes the label: 0 Separable, 1 Entangled, 2 Boundary.
    Classify(ClassifyArgs),
    /// Monte Carlo estimate of the separable volume fraction.
    Volume(VolumeArgs),
    /// Volume fractions over evenly spaced alphas, as CSV.
    Sweep(SweepArgs),
    /// Export a surface mesh as ASCII OBJ.
    Mesh(MeshArgs),
    /// Classify a barycentric grid and export it as CSV.
    Grid(GridArgs),
}

/// Basis parameter, either in radians or as a fraction of pi/4.
#[derive(Args, Clone)]
struct AlphaArg {
    /// Basis parameter alpha in radians, in [0, pi/4].
    #[arg(long, value_name = "RADIANS", conflicts_with = "alpha_frac")]
    alpha: Option<f64>,
    /// Basis parameter as a fraction of pi/4 (1.0 is the Bell basis).
    #[arg(long, value_name = "FRACTION")]
    alpha_frac: Option<f64>,
}

impl AlphaArg {
    fn parse(&self) -> Result<Alpha, CliError> {
        let alpha = match (self.alpha, self.alpha_frac) {
            (Some(radians), None) => Alpha::new(radians),
            (None, Some(fraction)) => Alpha::from_fraction(fraction),
            (None, None) => return Err(CliError::usage("missing --alpha or --alpha-frac")),
            (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
        };
        alpha.map_err(CliError::from_validation)
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    alpha: AlphaArg,
    /// Mixture weights w1,w2,w3,w4 (must sum to 1).
    #[arg(long, value_name = "W1,W2,W3,W4", allow_hyphen_values = true)]
    weights: String,
    /// Boundary band on the closed-form factors.
    #[arg(long, value_name = "EPS")]
    eps: Option<f64>,
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VolumeArgs {
    #[command(flatten)]
    alpha: AlphaArg,
    /// Number of Monte Carlo samples.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// PRNG seed; identical seeds reproduce identical estimates.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of evenly spaced alphas in [0, pi/4] (endpoints included).
    #[arg(long, value_name = "K")]
    alpha_steps: usize,
    /// Number of Monte Carlo samples per alpha.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// PRNG seed, shared by all rows so the sample set is common.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report the entropy column in bits instead of nats.
    #[arg(long)]
    bits: bool,
    /// Output CSV path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeshKind {
    /// The mixture tetrahedron.
    #[value(name = "tetra")]
    Tetra,
    /// Boundary cone with apex at +1/(2 sqrt 2).
    #[value(name = "coneA")]
    ConeA,
    /// Boundary cone with apex at -1/(2 sqrt 2).
    #[value(name = "coneB")]
    ConeB,
    /// Tetrahedron plus its point reflection.
    #[value(name = "stella")]
    Stella,
    /// Intersection octahedron of the stella.
    #[value(name = "octahedron")]
    Octahedron,
}

#[derive(Args)]
struct MeshArgs {
    #[command(flatten)]
    alpha: AlphaArg,
    /// Which surface to export.
    #[arg(long, value_enum)]
    what: MeshKind,
    /// Radial segments for cone meshes.
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    /// Rings between apex and base for cone meshes.
    #[arg(long, default_value_t = 8)]
    height_segments: usize,
    /// Keep the full parametric cone instead of clipping to the tetrahedron.
    #[arg(long)]
    no_clip: bool,
    /// Output OBJ path.
    #[arg(long, value_name = "PATH")]
    out: String,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    alpha: AlphaArg,
    /// Barycentric lattice resolution (C(R+3, 3) points).
    #[arg(long, value_name = "R")]
    resolution: usize,
    /// Boundary band on the closed-form factors.
    #[arg(long, value_name = "EPS")]
    eps: Option<f64>,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    out: String,
}

/// Command failures mapped to exit codes.
enum CliError {
    /// Bad flags or invalid domain values: exit 64.
    Usage(String),
    /// Filesystem or stream failure: exit 74.
    Io(String),
    /// Oracle disagreement or solver failure: exit 70.
    Internal(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn from_validation(e: sepgeo::Error) -> Self {
        match e {
            sepgeo::Error::OracleDisagreement { .. } | sepgeo::Error::NoConvergence { .. } => {
                CliError::Internal(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Io(_) => 74,
            CliError::Internal(_) => 70,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    // Usage errors share the validation exit code.
                    ExitCode::from(64)
                }
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Classify(args) => cmd_classify(args),
        Command::Volume(args) => cmd_volume(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Mesh(args) => cmd_mesh(args),
        Command::Grid(args) => cmd_grid(args),
    }
}

/// Band from the flag, the SEP_EPS variable, or the library default.
fn resolve_eps(flag: Option<f64>) -> Result<f64, CliError> {
    let eps = match flag {
        Some(e) => e,
        None => match std::env::var(EPS_ENV) {
            Ok(text) => text
                .parse::<f64>()
                .map_err(|_| CliError::usage(format!("{EPS_ENV} is not a number: {text}")))?,
            Err(_) => sepgeo::tol::BOUNDARY_BAND,
        },
    };
    if !(eps.is_finite() && eps > 0.0) {
        return Err(CliError::usage(format!(
            "classification band must be positive, got {eps}"
        )));
    }
    Ok(eps)
}

fn parse_weights(text: &str) -> Result<SimplexWeights, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::usage(format!(
            "expected four comma-separated weights, got {}",
            parts.len()
        )));
    }
    let mut w = [0.0_f64; 4];
    for (slot, part) in w.iter_mut().zip(parts.iter()) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::usage(format!("weight is not a number: {part}")))?;
    }
    SimplexWeights::new(w).map_err(CliError::from_validation)
}

#[derive(Serialize)]
struct JsonPoint {
    x: f64,
    y: f64,
    z: f64,
}

#[derive(Serialize)]
struct ClassifyReport {
    label: String,
    f1: f64,
    f2: f64,
    det: f64,
    min_eig: f64,
    point: JsonPoint,
    fixed_point: bool,
}

fn cmd_classify(args: ClassifyArgs) -> Result<u8, CliError> {
    let alpha = args.alpha.parse()?;
    let weights = parse_weights(&args.weights)?;
    let eps = resolve_eps(args.eps)?;

    // Validate the state itself, then classify.
    mixture(&weights, alpha).map_err(CliError::from_validation)?;
    let c = classify_with(&weights, alpha, eps).map_err(CliError::from_validation)?;
    let point = weights_to_point(&weights);
    let fixed = is_fixed_point(&weights, alpha, eps);

    let report = ClassifyReport {
        label: c.label.to_string(),
        f1: c.factors.f1,
        f2: c.factors.f2,
        det: c.factors.det(),
        min_eig: c.witness,
        point: JsonPoint {
            x: point.x,
            y: point.y,
            z: point.z,
        },
        fixed_point: fixed,
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.json {
        let doc = serde_json::to_string(&report).expect("report serializes");
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "label: {}", report.label)?;
        writeln!(out, "f1: {}", report.f1)?;
        writeln!(out, "f2: {}", report.f2)?;
        writeln!(out, "det: {}", report.det)?;
        writeln!(out, "min_eig: {}", report.min_eig)?;
        writeln!(
            out,
            "point: ({}, {}, {})",
            report.point.x, report.point.y, report.point.z
        )?;
        writeln!(out, "fixed_point: {}", report.fixed_point)?;
    }

    Ok(match c.label {
        Label::Separable => 0,
        Label::Entangled => 1,
        Label::Boundary => 2,
    })
}

#[derive(Serialize)]
struct VolumeReport {
    alpha: f64,
    fraction: f64,
    std_error: f64,
    samples: u64,
    seed: u64,
}

fn cmd_volume(args: VolumeArgs) -> Result<u8, CliError> {
    let alpha = args.alpha.parse()?;
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let est = separable_volume_fraction(alpha, args.samples, args.seed);
    let report = VolumeReport {
        alpha: alpha.radians(),
        fraction: est.fraction,
        std_error: est.std_error,
        samples: est.samples,
        seed: est.seed,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.json {
        let doc = serde_json::to_string(&report).expect("report serializes");
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "alpha: {}", report.alpha)?;
        writeln!(out, "fraction: {}", report.fraction)?;
        writeln!(out, "std_error: {}", report.std_error)?;
        writeln!(out, "samples: {}", report.samples)?;
        writeln!(out, "seed: {}", report.seed)?;
    }
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, CliError> {
    if args.alpha_steps < 2 {
        return Err(CliError::usage("--alpha-steps must be at least 2"));
    }
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let mut rows = String::from("alpha,fraction,stderr,entropy\n");
    for step in 0..args.alpha_steps {
        let radians = Alpha::MAX * step as f64 / (args.alpha_steps - 1) as f64;
        let alpha = Alpha::new(radians.min(Alpha::MAX)).map_err(CliError::from_validation)?;
        let est = separable_volume_fraction(alpha, args.samples, args.seed);
        let mut entropy = basis_entanglement(alpha).map_err(CliError::from_validation)?;
        if args.bits {
            entropy /= std::f64::consts::LN_2;
        }
        rows.push_str(&format!(
            "{},{},{},{}\n",
            alpha.radians(),
            est.fraction,
            est.std_error,
            entropy
        ));
    }
    write_text_output(args.out.as_deref(), rows.as_bytes())?;
    Ok(0)
}

fn cmd_mesh(args: MeshArgs) -> Result<u8, CliError> {
    let mesh: SurfaceMesh = match args.what {
        MeshKind::Tetra => tetrahedron_mesh(),
        MeshKind::Stella => stella_octangula_mesh(),
        MeshKind::Octahedron => octahedron_mesh(),
        MeshKind::ConeA | MeshKind::ConeB => {
            let alpha = args.alpha.parse()?;
            if args.resolution < 3 {
                return Err(CliError::usage("--resolution must be at least 3"));
            }
            if args.height_segments < 1 {
                return Err(CliError::usage("--height-segments must be at least 1"));
            }
            let which = match args.what {
                MeshKind::ConeA => ConeSelector::ConeA,
                _ => ConeSelector::ConeB,
            };
            let k = alpha.k();
            if k <= f64::EPSILON || (0.25 - k).abs() <= f64::EPSILON {
                eprintln!(
                    "warning: cone is degenerate at alpha = {}; writing the limiting \
                     plane triangles instead",
                    alpha.radians()
                );
            }
            cone_mesh(
                alpha,
                which,
                args.resolution,
                args.height_segments,
                !args.no_clip,
            )
            .map_err(CliError::from_validation)?
        }
    };
    let mut bytes = Vec::new();
    sepgeo::write_obj(&mesh, &mut bytes)?;
    write_file(&args.out, &bytes)?;
    Ok(0)
}

fn cmd_grid(args: GridArgs) -> Result<u8, CliError> {
    let alpha = args.alpha.parse()?;
    if args.resolution < 2 {
        return Err(CliError::usage("--resolution must be at least 2"));
    }
    let eps = resolve_eps(args.eps)?;
    let cloud =
        classification_grid_with(alpha, args.resolution, eps).map_err(CliError::from_validation)?;
    let mut bytes = Vec::new();
    sepgeo::write_csv(&cloud, &mut bytes)?;
    write_file(&args.out, &bytes)?;
    Ok(0)
}

fn write_file(path: &str, bytes: &[u8]) -> Result<(), CliError> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    writer.write_all(bytes)?;
    writer.flush()?;
    Ok(())
}

fn write_text_output(path: Option<&str>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(path) => write_file(path, bytes),
        None => {
            io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}
