//! `kp`: critical points of the planar Kirchhoff-Plateau energy.
//!
//! Exit codes: 0 success, 2 no admissible solution, 3 invalid
//! configuration, 1 IO failure.

use clap::{Args, Parser, Subcommand};
use kp_cli::config::{
    default_n_nodes, load_config, CaseName, Range, RunConfig, SweepParam, SweepSpec,
};
use kp_cli::output::{write_text, OutFormat};
use kp_cli::run::{run_emit, run_region, run_solve, run_sweep, CliError, RunOutcome};
use kp_cli::shapes::ShapeKind;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kp",
    about = "Equilibrium cross-sections of an elastic ring spanned by a soap film",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one case and optionally verify stationarity.
    Solve(SolveArgs),
    /// Sweep one parameter and tabulate the solutions.
    Sweep(SweepArgs),
    /// Map the admissibility region of the oval case over (sigma, area).
    Region(RegionArgs),
    /// Export solved geometry: cross-section, midline, film curve or tube.
    Emit(EmitArgs),
}

#[derive(Args)]
struct ParamFlags {
    /// Cross-section family.
    #[arg(long, value_enum)]
    case: Option<CaseName>,
    /// Surface tension.
    #[arg(long)]
    sigma: Option<f64>,
    /// Shape-penalty weight.
    #[arg(long)]
    beta: Option<f64>,
    /// Cross-section area.
    #[arg(long)]
    area: Option<f64>,
    /// Midline radius.
    #[arg(long)]
    radius: Option<f64>,
    /// Bending weight (enters only the multiplier).
    #[arg(long)]
    alpha: Option<f64>,
    /// Base semi-axis for the dilation case; solved from the ellipse case
    /// when omitted.
    #[arg(long)]
    a0: Option<f64>,
    /// JSON configuration file; explicit flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl ParamFlags {
    /// Merges flags over an optional config file into a complete run
    /// configuration.
    fn resolve(&self) -> Result<RunConfig, String> {
        let base = match &self.config {
            Some(path) => Some(load_config(path)?),
            None => None,
        };
        let case = self
            .case
            .or(base.as_ref().map(|c| c.case))
            .ok_or("missing --case (or a config file providing it)")?;
        let require = |flag: Option<f64>, from_config: Option<f64>, name: &str| {
            flag.or(from_config)
                .ok_or(format!("missing --{name} (or a config file providing it)"))
        };
        let b = base.as_ref();
        Ok(RunConfig {
            case,
            alpha: self.alpha.or(b.map(|c| c.alpha)).unwrap_or(1.0),
            beta: require(self.beta, b.map(|c| c.beta), "beta")?,
            sigma: require(self.sigma, b.map(|c| c.sigma), "sigma")?,
            area: require(self.area, b.map(|c| c.area), "area")?,
            radius: require(self.radius, b.map(|c| c.radius), "radius")?,
            a0: self.a0.or(b.and_then(|c| c.a0)),
            verify: b.map(|c| c.verify).unwrap_or(false),
            n_nodes: b.and_then(|c| c.n_nodes),
            sweep: b.and_then(|c| c.sweep),
            output: b.and_then(|c| c.output.clone()),
        })
    }
}

#[derive(Args)]
struct OutputFlags {
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Run the discretized-functional verification.
    #[arg(long)]
    verify: bool,
    /// Quadrature node count (power of two, at least 64).
    #[arg(long)]
    n_nodes: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Parameter to sweep.
    #[arg(long, value_enum)]
    param: Option<SweepParam>,
    /// Sweep grid LO:HI:N.
    #[arg(long)]
    range: Option<Range>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
struct RegionArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Surface tension grid LO:HI:N.
    #[arg(long)]
    sigma_range: Range,
    /// Area grid LO:HI:N.
    #[arg(long)]
    area_range: Range,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
struct EmitArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Geometry to export.
    #[arg(long, value_enum)]
    shape: ShapeKind,
    /// Sample count along each closed curve.
    #[arg(long, default_value_t = 256)]
    samples: usize,
    /// Export even when the solution violates admissibility.
    #[arg(long)]
    allow_inadmissible: bool,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[command(flatten)]
    output: OutputFlags,
}

/// Output destination and format: flags beat the config block, which
/// beats the per-command default.
fn resolve_output(
    flag_out: Option<PathBuf>,
    flag_format: Option<OutFormat>,
    config: &mut RunConfig,
    default_format: OutFormat,
) -> (Option<PathBuf>, OutFormat) {
    let block = config.output.take();
    let path = flag_out.or_else(|| block.as_ref().and_then(|b| b.path.clone()));
    let format = flag_format
        .or_else(|| block.as_ref().and_then(|b| b.format))
        .unwrap_or(default_format);
    (path, format)
}

fn resolve_n_nodes(flag: Option<usize>, config: &RunConfig) -> Result<usize, String> {
    let n = match flag.or(config.n_nodes) {
        Some(n) => n,
        None => default_n_nodes()?,
    };
    if n < 64 || !n.is_power_of_two() {
        return Err(format!("n_nodes must be a power of two >= 64, got {n}"));
    }
    Ok(n)
}

fn dispatch(command: Command) -> Result<(RunOutcome, Option<PathBuf>), CliError> {
    match command {
        Command::Solve(args) => {
            let mut config = args.params.resolve().map_err(CliError::Config)?;
            if args.verify {
                config.verify = true;
            }
            let n_nodes =
                resolve_n_nodes(args.n_nodes, &config).map_err(CliError::Config)?;
            let (out, format) =
                resolve_output(args.output.out, args.format, &mut config, OutFormat::Json);
            let outcome = run_solve(config, n_nodes, format)?;
            Ok((outcome, out))
        }
        Command::Sweep(mut args) => {
            // The swept parameter needs no base value; seed it from the
            // range start so resolution passes.
            if let (Some(param), Some(range)) = (args.param, args.range) {
                let slot = match param {
                    SweepParam::Sigma => &mut args.params.sigma,
                    SweepParam::Beta => &mut args.params.beta,
                    SweepParam::Area => &mut args.params.area,
                    SweepParam::Radius => &mut args.params.radius,
                };
                slot.get_or_insert(range.lo.max(f64::MIN_POSITIVE));
            }
            let mut config = args.params.resolve().map_err(CliError::Config)?;
            match (args.param, args.range) {
                (Some(param), Some(range)) => config.sweep = Some(SweepSpec { param, range }),
                (None, None) => {}
                _ => {
                    return Err(CliError::Config(
                        "sweep needs both --param and --range (or a config sweep block)".into(),
                    ))
                }
            }
            let (out, format) =
                resolve_output(args.output.out, args.format, &mut config, OutFormat::Csv);
            let outcome = run_sweep(config, format)?;
            Ok((outcome, out))
        }
        Command::Region(mut args) => {
            // Both grid parameters come from their ranges.
            args.params
                .sigma
                .get_or_insert(args.sigma_range.lo.max(f64::MIN_POSITIVE));
            args.params
                .area
                .get_or_insert(args.area_range.lo.max(f64::MIN_POSITIVE));
            let mut config = args.params.resolve().map_err(CliError::Config)?;
            let (out, format) =
                resolve_output(args.output.out, args.format, &mut config, OutFormat::Csv);
            let outcome = run_region(config, args.sigma_range, args.area_range, format)?;
            Ok((outcome, out))
        }
        Command::Emit(args) => {
            let mut config = args.params.resolve().map_err(CliError::Config)?;
            let (out, format) =
                resolve_output(args.output.out, args.format, &mut config, OutFormat::Json);
            let outcome = run_emit(
                config,
                args.shape,
                args.samples,
                args.allow_inadmissible,
                format,
            )?;
            Ok((outcome, out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not configuration errors.
            use clap::error::ErrorKind;
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            };
        }
    };

    match dispatch(cli.command) {
        Ok((outcome, out_path)) => {
            if let Err(err) = write_text(out_path.as_deref(), &outcome.text) {
                eprintln!("error: {err}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(CliError::Config(message)) => {
            eprintln!("configuration error: {message}");
            ExitCode::from(3)
        }
        Err(CliError::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
