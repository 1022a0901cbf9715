//! Command orchestration: solving cases, wiring verification, parameter
//! sweeps, region maps and shape export.

use crate::config::{CaseName, Range, RunConfig, SweepParam};
use crate::output::{csv_f64, svg_document, OutFormat};
use crate::shapes::{self, SectionOutline, ShapeKind, ShapeSample};
use kp_core::params::{CaseKind, Params};
use kp_core::variational::{ConstantProfile, DiscreteFunctional, BASIS_DIRECTIONS};
use kp_core::{dilation, ellipse, oval, variational};
use serde::Serialize;

/// Failures that abort a run. Everything else is reported inside the
/// output document.
#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration; exit code 3.
    Config(String),
    /// Filesystem problems; exit code 1.
    Io(String),
}

/// Rendered output plus the process exit code (0 success, 2 when the
/// requested case has no admissible solution).
pub struct RunOutcome {
    pub text: String,
    pub exit: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionOut {
    pub a: f64,
    pub b: f64,
    pub tangent: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SolutionBody {
    Ellipse {
        a_bar: f64,
        b_bar: f64,
        lambda_bar: f64,
        a_star: f64,
        admissible: bool,
        elongated_horizontal: bool,
    },
    Dilation {
        a0: f64,
        theta_bar: f64,
        dilated_axis: f64,
        lambda_bar: f64,
        is_dilatation: bool,
    },
    Oval {
        a: f64,
        b: f64,
        lambda_bar: f64,
        long_semi_axis: f64,
        short_semi_axis: f64,
        n_intersections: u32,
        tau: f64,
        xi2: f64,
        intersections: Vec<IntersectionOut>,
        admissible: bool,
    },
}

impl SolutionBody {
    pub fn admissible(&self) -> bool {
        match self {
            SolutionBody::Ellipse { admissible, .. } => *admissible,
            SolutionBody::Dilation { .. } => true,
            SolutionBody::Oval { admissible, .. } => *admissible,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub n_nodes: usize,
    pub n_directions: usize,
    pub max_directional_derivative: f64,
    pub el_residual: ElResidualOut,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElResidualOut {
    pub eq1: f64,
    pub eq2: f64,
    pub eq3: f64,
}

#[derive(Debug, Serialize)]
pub struct SolveDocument {
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub solution: SolutionBody,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

#[derive(Debug, Serialize)]
pub struct RejectedOut {
    pub a: f64,
    pub b: f64,
    pub well_defined: bool,
    pub cusp_free: bool,
    pub no_interpenetration: bool,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<RejectedOut>,
}

#[derive(Debug, Serialize)]
pub struct ErrorDocument {
    pub config: RunConfig,
    pub error: ErrorBody,
}

fn warnings_for(params: &Params) -> Vec<String> {
    if params.sigma_above_physical() {
        vec![format!(
            "surface tension sigma = {} above the physical range [0, 1]",
            params.sigma
        )]
    } else {
        Vec::new()
    }
}

/// Resolves the base semi-axis for the dilation case: explicit when
/// given, otherwise wired from the elliptical equilibrium of the same
/// parameters (which must be admissible for the pipeline to mean
/// anything).
fn resolve_a0(config: &RunConfig, params: &Params) -> Result<f64, String> {
    if let Some(a0) = config.a0 {
        if !a0.is_finite() || a0 <= 0.0 {
            return Err(format!("a0 must be positive, got {a0}"));
        }
        return Ok(a0);
    }
    let base = ellipse::solve_equilibrium(params);
    if !base.admissible {
        return Err(format!(
            "base elliptical equilibrium a = {:.6} interpenetrates the midline (radius {}); \
             pass an explicit a0 to override",
            base.a_bar, params.radius
        ));
    }
    Ok(base.a_bar)
}

enum CaseOutcome {
    Solved(SolutionBody, CaseKind, f64),
    Failed(ErrorBody),
}

fn solve_case(config: &RunConfig, params: &Params) -> Result<CaseOutcome, CliError> {
    match config.case {
        CaseName::Ellipse => {
            let s = ellipse::solve_equilibrium(params);
            Ok(CaseOutcome::Solved(
                SolutionBody::Ellipse {
                    a_bar: s.a_bar,
                    b_bar: s.b_bar,
                    lambda_bar: s.lambda_bar,
                    a_star: s.a_star,
                    admissible: s.admissible,
                    elongated_horizontal: s.elongated_horizontal,
                },
                CaseKind::Ellipse,
                s.a_bar,
            ))
        }
        CaseName::Dilation => {
            let a0 = match resolve_a0(config, params) {
                Ok(a0) => a0,
                Err(message) => {
                    return Ok(CaseOutcome::Failed(ErrorBody {
                        kind: "inadmissible_base".into(),
                        message,
                        rejected: Vec::new(),
                    }))
                }
            };
            let s = dilation::solve_dilation(params, a0)
                .map_err(|e| CliError::Config(e.to_string()))?;
            Ok(CaseOutcome::Solved(
                SolutionBody::Dilation {
                    a0,
                    theta_bar: s.theta_bar,
                    dilated_axis: s.dilated_axis,
                    lambda_bar: s.lambda_bar,
                    is_dilatation: s.is_dilatation,
                },
                CaseKind::Dilation { a0 },
                s.theta_bar,
            ))
        }
        CaseName::Oval => match oval::solve_oval(params) {
            Ok(s) => Ok(CaseOutcome::Solved(
                SolutionBody::Oval {
                    a: s.shape.a,
                    b: s.shape.b,
                    lambda_bar: s.lambda_bar,
                    long_semi_axis: s.shape.long_semi_axis(),
                    short_semi_axis: s.shape.short_semi_axis(),
                    n_intersections: s.n_intersections,
                    tau: s.tau,
                    xi2: s.xi2,
                    intersections: s
                        .intersections
                        .iter()
                        .map(|p| IntersectionOut {
                            a: p.a,
                            b: p.b,
                            tangent: p.tangent,
                        })
                        .collect(),
                    admissible: true,
                },
                CaseKind::Oval,
                s.shape.a,
            )),
            Err(oval::OvalError::NoAdmissibleIntersection { rejected }) => {
                Ok(CaseOutcome::Failed(ErrorBody {
                    kind: "no_admissible_intersection".into(),
                    message: "no intersection satisfies the admissibility constraints".into(),
                    rejected: rejected
                        .iter()
                        .map(|r| RejectedOut {
                            a: r.a,
                            b: r.b,
                            well_defined: r.flags.well_defined,
                            cusp_free: r.flags.cusp_free,
                            no_interpenetration: r.flags.no_interpenetration,
                        })
                        .collect(),
                }))
            }
            Err(oval::OvalError::AmbiguousIntersections { points }) => {
                Ok(CaseOutcome::Failed(ErrorBody {
                    kind: "ambiguous_intersections".into(),
                    message: format!("{} admissible intersections, expected one", points.len()),
                    rejected: Vec::new(),
                }))
            }
            Err(oval::OvalError::DegenerateHyperbola) => Err(CliError::Config(
                "the oval case requires sigma > 0".into(),
            )),
            Err(e) => Err(CliError::Config(e.to_string())),
        },
    }
}

fn verify(
    config: &RunConfig,
    params: &Params,
    case: CaseKind,
    state: f64,
    lambda: f64,
    n_nodes: usize,
) -> Result<Verification, CliError> {
    let df = DiscreteFunctional::new(case, *params, n_nodes)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let max_directional_derivative = df
        .stationarity_check(&ConstantProfile(state), lambda, BASIS_DIRECTIONS)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let residual = variational::el_residual(case, params, state, lambda)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let _ = config;
    Ok(Verification {
        n_nodes,
        n_directions: BASIS_DIRECTIONS,
        max_directional_derivative,
        el_residual: ElResidualOut {
            eq1: residual.eq1,
            eq2: residual.eq2,
            eq3: residual.eq3,
        },
    })
}

fn lambda_of(solution: &SolutionBody) -> f64 {
    match solution {
        SolutionBody::Ellipse { lambda_bar, .. }
        | SolutionBody::Dilation { lambda_bar, .. }
        | SolutionBody::Oval { lambda_bar, .. } => *lambda_bar,
    }
}

pub fn run_solve(
    mut config: RunConfig,
    n_nodes: usize,
    format: OutFormat,
) -> Result<RunOutcome, CliError> {
    let params = config.params().map_err(CliError::Config)?;
    let warnings = warnings_for(&params);
    for w in &warnings {
        eprintln!("warning: {w}");
    }

    match solve_case(&config, &params)? {
        CaseOutcome::Solved(solution, case, state) => {
            // Embed the fully resolved configuration so the output
            // re-ingests as an identical run.
            if let CaseKind::Dilation { a0 } = case {
                config.a0 = Some(a0);
            }
            config.n_nodes = Some(n_nodes);
            let verification = if config.verify {
                Some(verify(
                    &config,
                    &params,
                    case,
                    state,
                    lambda_of(&solution),
                    n_nodes,
                )?)
            } else {
                None
            };
            let exit = if solution.admissible() { 0 } else { 2 };
            let text = match format {
                OutFormat::Json => {
                    let doc = SolveDocument {
                        config,
                        warnings,
                        solution,
                        verification,
                    };
                    to_json(&doc)?
                }
                OutFormat::Csv => {
                    format!("{}\n{}\n", csv_header(config.case), csv_row(&config, &solution))
                }
                OutFormat::Svg => {
                    let set = solution_shapes(&params, &solution, 256)
                        .map_err(CliError::Config)?;
                    svg_document(&set).map_err(CliError::Config)?
                }
            };
            Ok(RunOutcome { text, exit })
        }
        CaseOutcome::Failed(error) => {
            let doc = ErrorDocument { config, error };
            Ok(RunOutcome {
                text: to_json(&doc)?,
                exit: 2,
            })
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Io(e.to_string()))
}

// ---------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------

pub fn csv_header(case: CaseName) -> &'static str {
    match case {
        CaseName::Ellipse => "sigma,beta,area,radius,a_bar,b_bar,lambda_bar,admissible",
        CaseName::Dilation => {
            "sigma,beta,area,radius,a0,theta_bar,dilated_axis,lambda_bar,is_dilatation"
        }
        CaseName::Oval => "sigma,beta,area,radius,a,b,lambda_bar,n_intersections,admissible",
    }
}

fn csv_row(config: &RunConfig, solution: &SolutionBody) -> String {
    let prefix = format!(
        "{},{},{},{}",
        csv_f64(config.sigma),
        csv_f64(config.beta),
        csv_f64(config.area),
        csv_f64(config.radius)
    );
    match solution {
        SolutionBody::Ellipse {
            a_bar,
            b_bar,
            lambda_bar,
            admissible,
            ..
        } => format!(
            "{prefix},{},{},{},{admissible}",
            csv_f64(*a_bar),
            csv_f64(*b_bar),
            csv_f64(*lambda_bar)
        ),
        SolutionBody::Dilation {
            a0,
            theta_bar,
            dilated_axis,
            lambda_bar,
            is_dilatation,
        } => format!(
            "{prefix},{},{},{},{},{is_dilatation}",
            csv_f64(*a0),
            csv_f64(*theta_bar),
            csv_f64(*dilated_axis),
            csv_f64(*lambda_bar)
        ),
        SolutionBody::Oval {
            a,
            b,
            lambda_bar,
            n_intersections,
            admissible,
            ..
        } => format!(
            "{prefix},{},{},{},{n_intersections},{admissible}",
            csv_f64(*a),
            csv_f64(*b),
            csv_f64(*lambda_bar)
        ),
    }
}

fn failed_csv_row(config: &RunConfig, n_intersections: usize) -> String {
    let prefix = format!(
        "{},{},{},{}",
        csv_f64(config.sigma),
        csv_f64(config.beta),
        csv_f64(config.area),
        csv_f64(config.radius)
    );
    let nan = csv_f64(f64::NAN);
    match config.case {
        CaseName::Ellipse => format!("{prefix},{nan},{nan},{nan},false"),
        CaseName::Dilation => format!("{prefix},{nan},{nan},{nan},{nan},false"),
        CaseName::Oval => format!("{prefix},{nan},{nan},{nan},{n_intersections},false"),
    }
}

fn with_swept(config: &RunConfig, param: SweepParam, value: f64) -> RunConfig {
    let mut point = config.clone();
    match param {
        SweepParam::Sigma => point.sigma = value,
        SweepParam::Beta => point.beta = value,
        SweepParam::Area => point.area = value,
        SweepParam::Radius => point.radius = value,
    }
    point.sweep = None;
    point
}

/// Evaluates grid points concurrently; solver calls are pure, so plain
/// scoped threads over chunks suffice.
fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(items.len().max(1));
    let mut out: Vec<Option<U>> = (0..items.len()).map(|_| None).collect();
    if threads <= 1 {
        for (slot, item) in out.iter_mut().zip(items) {
            *slot = Some(f(item));
        }
    } else {
        let chunk = items.len().div_ceil(threads);
        let f = &f;
        std::thread::scope(|scope| {
            for (inputs, outputs) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
                scope.spawn(move || {
                    for (slot, item) in outputs.iter_mut().zip(inputs) {
                        *slot = Some(f(item));
                    }
                });
            }
        });
    }
    out.into_iter().map(|v| v.expect("all chunks filled")).collect()
}

#[derive(Serialize)]
struct SweepDocument {
    config: RunConfig,
    rows: Vec<serde_json::Value>,
}

pub fn run_sweep(config: RunConfig, format: OutFormat) -> Result<RunOutcome, CliError> {
    let Some(sweep) = config.sweep else {
        return Err(CliError::Config("sweep requires a sweep block".into()));
    };
    sweep.range.validate().map_err(CliError::Config)?;
    if matches!(format, OutFormat::Svg) {
        return Err(CliError::Config("sweeps render as csv or json, not svg".into()));
    }

    let points = sweep.range.points();
    let rows = par_map(&points, |&value| {
        let point = with_swept(&config, sweep.param, value);
        let params = match point.params() {
            Ok(p) => p,
            Err(_) => return (point, None),
        };
        match solve_case(&point, &params) {
            Ok(CaseOutcome::Solved(solution, ..)) => (point, Some(Ok(solution))),
            Ok(CaseOutcome::Failed(error)) => (point, Some(Err(error.rejected.len()))),
            Err(_) => (point, None),
        }
    });

    let text = match format {
        OutFormat::Csv => {
            let mut out = String::from(csv_header(config.case));
            out.push('\n');
            for (point, result) in &rows {
                let line = match result {
                    Some(Ok(solution)) => csv_row(point, solution),
                    Some(Err(n)) => failed_csv_row(point, *n),
                    None => failed_csv_row(point, 0),
                };
                out.push_str(&line);
                out.push('\n');
            }
            out
        }
        OutFormat::Json => {
            let rows = rows
                .iter()
                .map(|(point, result)| {
                    let mut row = serde_json::json!({
                        "sigma": point.sigma,
                        "beta": point.beta,
                        "area": point.area,
                        "radius": point.radius,
                    });
                    match result {
                        Some(Ok(solution)) => {
                            row["solution"] =
                                serde_json::to_value(solution).unwrap_or_default();
                        }
                        Some(Err(_)) | None => {
                            row["solution"] = serde_json::Value::Null;
                        }
                    }
                    row
                })
                .collect();
            to_json(&SweepDocument { config, rows })?
        }
        OutFormat::Svg => unreachable!("rejected above"),
    };
    Ok(RunOutcome { text, exit: 0 })
}

// ---------------------------------------------------------------------
// Region maps
// ---------------------------------------------------------------------

pub const REGION_HEADER: &str =
    "sigma,beta,area,radius,area_ratio,tau,n_intersections,a,b,lambda_bar,admissible";

pub fn run_region(
    config: RunConfig,
    sigma_range: Range,
    area_range: Range,
    format: OutFormat,
) -> Result<RunOutcome, CliError> {
    if config.case != CaseName::Oval {
        return Err(CliError::Config("region maps are defined for the oval case".into()));
    }
    if matches!(format, OutFormat::Svg) {
        return Err(CliError::Config("region maps render as csv or json, not svg".into()));
    }
    sigma_range.validate().map_err(CliError::Config)?;
    area_range.validate().map_err(CliError::Config)?;

    let mut grid = Vec::new();
    for sigma in sigma_range.points() {
        for area in area_range.points() {
            let mut point = config.clone();
            point.sigma = sigma;
            point.area = area;
            grid.push(point);
        }
    }

    let nan = csv_f64(f64::NAN);
    let rows = par_map(&grid, |point| {
        let prefix = format!(
            "{},{},{},{}",
            csv_f64(point.sigma),
            csv_f64(point.beta),
            csv_f64(point.area),
            csv_f64(point.radius)
        );
        let ratio = point.area / (std::f64::consts::PI * point.radius * point.radius);
        let params = match point.params() {
            Ok(p) if point.sigma > 0.0 => p,
            _ => {
                return format!("{prefix},{},{nan},0,{nan},{nan},{nan},false", csv_f64(ratio))
            }
        };
        let tau = match oval::tau_limit(&params) {
            Ok(t) => t,
            Err(_) => {
                return format!("{prefix},{},{nan},0,{nan},{nan},{nan},false", csv_f64(ratio))
            }
        };
        match oval::solve_oval(&params) {
            Ok(solution) => format!(
                "{prefix},{},{},{},{},{},{},true",
                csv_f64(ratio),
                csv_f64(tau),
                solution.n_intersections,
                csv_f64(solution.shape.a),
                csv_f64(solution.shape.b),
                csv_f64(solution.lambda_bar)
            ),
            Err(oval::OvalError::NoAdmissibleIntersection { rejected }) => format!(
                "{prefix},{},{},{},{nan},{nan},{nan},false",
                csv_f64(ratio),
                csv_f64(tau),
                rejected.len()
            ),
            Err(_) => format!(
                "{prefix},{},{},0,{nan},{nan},{nan},false",
                csv_f64(ratio),
                csv_f64(tau)
            ),
        }
    });

    let text = match format {
        OutFormat::Csv => {
            let mut out = String::from(REGION_HEADER);
            out.push('\n');
            for row in rows {
                out.push_str(&row);
                out.push('\n');
            }
            out
        }
        OutFormat::Json => {
            let parsed: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let fields: Vec<&str> = row.split(',').collect();
                    serde_json::json!({
                        "sigma": fields[0].parse::<f64>().unwrap_or(f64::NAN),
                        "beta": fields[1].parse::<f64>().unwrap_or(f64::NAN),
                        "area": fields[2].parse::<f64>().unwrap_or(f64::NAN),
                        "radius": fields[3].parse::<f64>().unwrap_or(f64::NAN),
                        "area_ratio": fields[4].parse::<f64>().unwrap_or(f64::NAN),
                        "tau": fields[5].parse::<f64>().unwrap_or(f64::NAN),
                        "n_intersections": fields[6].parse::<u32>().unwrap_or(0),
                        "admissible": fields[10] == "true",
                    })
                })
                .collect();
            to_json(&serde_json::json!({ "config": config, "rows": parsed }))?
        }
        OutFormat::Svg => unreachable!("rejected above"),
    };
    Ok(RunOutcome { text, exit: 0 })
}

// ---------------------------------------------------------------------
// Shape export
// ---------------------------------------------------------------------

fn section_outline(params: &Params, solution: &SolutionBody) -> SectionOutline {
    match solution {
        SolutionBody::Ellipse { a_bar, b_bar, .. } => SectionOutline::Ellipse {
            a: *a_bar,
            b: *b_bar,
        },
        SolutionBody::Dilation {
            a0, dilated_axis, ..
        } => SectionOutline::Ellipse {
            a: *dilated_axis,
            b: params.area / (std::f64::consts::PI * a0),
        },
        SolutionBody::Oval { a, b, .. } => SectionOutline::Limacon { a: *a, b: *b },
    }
}

fn solution_shapes(
    params: &Params,
    solution: &SolutionBody,
    samples: usize,
) -> Result<Vec<ShapeSample>, String> {
    let outline = section_outline(params, solution);
    Ok(vec![
        shapes::midline_circle(params, samples),
        shapes::film_curve(params, outline.film_thickness(), samples)?,
        shapes::cross_section(&outline, samples),
    ])
}

pub fn run_emit(
    config: RunConfig,
    shape: ShapeKind,
    samples: usize,
    allow_inadmissible: bool,
    format: OutFormat,
) -> Result<RunOutcome, CliError> {
    let params = config.params().map_err(CliError::Config)?;
    let (solution, exit) = match solve_case(&config, &params)? {
        CaseOutcome::Solved(solution, ..) => {
            if !solution.admissible() && !allow_inadmissible {
                let doc = ErrorDocument {
                    config,
                    error: ErrorBody {
                        kind: "inadmissible".into(),
                        message: "solution is inadmissible; pass --allow-inadmissible to export anyway"
                            .into(),
                        rejected: Vec::new(),
                    },
                };
                return Ok(RunOutcome {
                    text: to_json(&doc)?,
                    exit: 2,
                });
            }
            let exit = if solution.admissible() { 0 } else { 2 };
            (solution, exit)
        }
        CaseOutcome::Failed(error) => {
            let doc = ErrorDocument { config, error };
            return Ok(RunOutcome {
                text: to_json(&doc)?,
                exit: 2,
            });
        }
    };

    let outline = section_outline(&params, &solution);
    let sample = match shape {
        ShapeKind::CrossSection => shapes::cross_section(&outline, samples),
        ShapeKind::Midline => shapes::midline_circle(&params, samples),
        ShapeKind::ScaledCurve => shapes::film_curve(&params, outline.film_thickness(), samples)
            .map_err(CliError::Config)?,
        ShapeKind::Tube => shapes::tube_cloud(
            &params,
            &outline,
            samples.max(16),
            (samples / 2).max(16),
        ),
    };

    let text = match format {
        OutFormat::Json => to_json(&serde_json::json!({
            "config": config,
            "shapes": [sample],
        }))?,
        OutFormat::Csv => {
            let mut out = String::new();
            match &sample.points {
                shapes::SamplePoints::TwoD(points) => {
                    out.push_str("x,y\n");
                    for p in points {
                        out.push_str(&format!("{},{}\n", csv_f64(p[0]), csv_f64(p[1])));
                    }
                }
                shapes::SamplePoints::ThreeD(points) => {
                    out.push_str("x,y,z\n");
                    for p in points {
                        out.push_str(&format!(
                            "{},{},{}\n",
                            csv_f64(p[0]),
                            csv_f64(p[1]),
                            csv_f64(p[2])
                        ));
                    }
                }
            }
            out
        }
        OutFormat::Svg => svg_document(std::slice::from_ref(&sample)).map_err(CliError::Config)?,
    };
    Ok(RunOutcome { text, exit })
}
