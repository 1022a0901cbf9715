//! Independent verification layer.
//!
//! Discretizes the full planar energy on the circular midline with the
//! periodic trapezoid rule (spectrally accurate for smooth periodic
//! integrands) and checks first-order stationarity of computed equilibria
//! by central finite differences along low-frequency periodic shape
//! perturbations. The midline itself is never varied. Also evaluates the
//! reduced Euler-Lagrange residuals for constant shape profiles; the
//! fourth (inextensibility) equation holds structurally because the rod
//! length is `2πR` by construction. Gravity plays no role in the plane
//! and is omitted.

// Inherent std methods shadow the shim when the test harness links std.
#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::params::{CaseKind, Params};
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Shape profile over arc length, evaluable together with its derivative.
/// Profiles must be `L`-periodic.
pub trait Profile {
    fn value(&self, s: f64) -> f64;
    fn derivative(&self, s: f64) -> f64;
}

/// Constant profile; the equilibrium states of all three cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantProfile(pub f64);

impl Profile for ConstantProfile {
    fn value(&self, _s: f64) -> f64 {
        self.0
    }

    fn derivative(&self, _s: f64) -> f64 {
        0.0
    }
}

/// Energy term values; `total` weights them as
/// `α·e_el + e_f + e_c + β·e_sh`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown {
    /// Bending integral `∫κ² dl` (unweighted).
    pub e_el: f64,
    /// Film energy `σ∮(u v' - v u') ds` of the scaled curve.
    pub e_f: f64,
    /// Inextensibility term `λ∫(|r'| - 1) ds`.
    pub e_c: f64,
    /// Shape-penalty integral (unweighted).
    pub e_sh: f64,
    pub total: f64,
}

/// Quadrature-sampled energy of one case on the circular midline.
///
/// The film sees a case-specific thickness: the elliptical semi-axis `a`,
/// the dilated axis `Θ·a0`, or the long oval semi-axis `a + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteFunctional {
    pub case: CaseKind,
    pub params: Params,
    pub n_nodes: usize,
}

/// Number of perturbation basis directions: the constant mode plus the
/// first eight Fourier modes in both phases.
pub const BASIS_DIRECTIONS: usize = 17;

impl DiscreteFunctional {
    /// Requires a power-of-two node count of at least 64.
    pub fn new(
        case: CaseKind,
        params: Params,
        n_nodes: usize,
    ) -> Result<Self, VariationalError> {
        if n_nodes < 64 || !n_nodes.is_power_of_two() {
            return Err(VariationalError::BadNodeCount { n_nodes });
        }
        if let CaseKind::Dilation { a0 } = case {
            if !a0.is_finite() || a0 <= 0.0 {
                return Err(VariationalError::StateOutOfDomain { value: a0 });
            }
        }
        Ok(Self {
            case,
            params,
            n_nodes,
        })
    }

    /// Film thickness and its arc-length derivative for a profile sample.
    fn film_offset(&self, s: f64, value: f64, slope: f64) -> Result<(f64, f64), VariationalError> {
        match self.case {
            CaseKind::Ellipse => {
                if value <= 0.0 {
                    return Err(VariationalError::NonPositiveProfile { s, value });
                }
                Ok((value, slope))
            }
            CaseKind::Dilation { a0 } => {
                if value <= 0.0 {
                    return Err(VariationalError::NonPositiveProfile { s, value });
                }
                Ok((value * a0, slope * a0))
            }
            CaseKind::Oval => {
                if value <= 0.0 {
                    return Err(VariationalError::NonPositiveProfile { s, value });
                }
                let radicand = (2.0 / PI) * (self.params.area - PI * value * value);
                if radicand < -1e-12 * (2.0 * self.params.area / PI) {
                    return Err(VariationalError::AreaExceeded { s, value });
                }
                let b = radicand.max(0.0).sqrt();
                let db = if slope == 0.0 {
                    0.0
                } else if b > 0.0 {
                    -2.0 * value / b * slope
                } else {
                    return Err(VariationalError::AreaExceeded { s, value });
                };
                Ok((value + b, slope + db))
            }
        }
    }

    /// Shape-penalty density (before the line element).
    fn shape_density(&self, value: f64) -> f64 {
        match self.case {
            CaseKind::Ellipse => {
                let ratio = self.params.area / (PI * value);
                value * value + ratio * ratio
            }
            CaseKind::Dilation { a0 } => {
                let shift = value - 1.0;
                shift * shift * a0 * a0
            }
            CaseKind::Oval => (2.0 / PI) * (self.params.area - PI * value * value),
        }
    }

    /// Integrates the energy terms with the composite trapezoid rule on the
    /// periodic grid. The film term uses the shoelace integrand of the
    /// scaled curve, differentiated through the midline and the profile.
    pub fn energy(
        &self,
        profile: &dyn Profile,
        lambda: f64,
    ) -> Result<EnergyBreakdown, VariationalError> {
        let n = self.n_nodes;
        let radius = self.params.radius;
        let length = self.params.length();
        let h = length / n as f64;

        let (mut el, mut film, mut constraint, mut shape) = (0.0, 0.0, 0.0, 0.0);
        for i in 0..n {
            let s = i as f64 * h;
            let t = s / radius;
            let (sin_t, cos_t) = (t.sin(), t.cos());
            let x = radius * cos_t;
            let y = radius * sin_t;
            let dx = -sin_t;
            let dy = cos_t;
            let ddx = -cos_t / radius;
            let ddy = -sin_t / radius;
            let speed_sq = dx * dx + dy * dy;
            let speed = speed_sq.sqrt();

            let cross = dx * ddy - ddx * dy;
            el += cross * cross / (speed_sq * speed_sq * speed_sq) * speed;

            let value = profile.value(s);
            let slope = profile.derivative(s);
            let (w, dw) = self.film_offset(s, value, slope)?;
            let speed_slope = (dx * ddx + dy * ddy) / speed;
            let u = x - w * dy / speed;
            let v = y + w * dx / speed;
            let du = dx - (dw * dy + w * ddy) / speed + w * dy * speed_slope / speed_sq;
            let dv = dy + (dw * dx + w * ddx) / speed - w * dx * speed_slope / speed_sq;
            film += u * dv - v * du;

            constraint += speed - 1.0;
            shape += self.shape_density(value) * speed;
        }

        let e_el = el * h;
        let e_f = self.params.sigma * film * h;
        let e_c = lambda * constraint * h;
        let e_sh = shape * h;
        Ok(EnergyBreakdown {
            e_el,
            e_f,
            e_c,
            e_sh,
            total: self.params.alpha * e_el + e_f + e_c + self.params.beta * e_sh,
        })
    }

    /// Maximum normalized directional derivative of the energy at the given
    /// profile over `n_directions` periodic perturbations. The first
    /// seventeen directions are the Fourier basis itself; any further ones
    /// are deterministic random combinations of it. Central differences
    /// with step `ε^(1/3)·scale` balance truncation against round-off.
    /// Large return values diagnose a non-equilibrium state; no error is
    /// raised for them.
    pub fn stationarity_check(
        &self,
        profile: &dyn Profile,
        lambda: f64,
        n_directions: usize,
    ) -> Result<f64, VariationalError> {
        let base = self.energy(profile, lambda)?;
        let energy_scale = ((self.params.alpha * base.e_el).abs()
            + base.e_f.abs()
            + base.e_c.abs()
            + (self.params.beta * base.e_sh).abs())
        .max(1.0);

        let n = self.n_nodes;
        let length = self.params.length();
        let h = length / n as f64;
        let mut profile_scale = 0.0f64;
        for i in 0..n {
            profile_scale = profile_scale.max(profile.value(i as f64 * h).abs());
        }
        let step = f64::EPSILON.cbrt() * profile_scale.max(1.0);

        let mut worst = 0.0f64;
        for direction in direction_set(n_directions) {
            let mut norm = 0.0f64;
            for i in 0..n {
                norm = norm.max(direction.value(i as f64 * h, length).abs());
            }
            if norm == 0.0 {
                continue;
            }
            let plus = self.energy(
                &PerturbedProfile {
                    base: profile,
                    direction: &direction,
                    amplitude: step,
                    length,
                },
                lambda,
            )?;
            let minus = self.energy(
                &PerturbedProfile {
                    base: profile,
                    direction: &direction,
                    amplitude: -step,
                    length,
                },
                lambda,
            )?;
            let derivative = (plus.total - minus.total) / (2.0 * step);
            worst = worst.max(derivative.abs() / (norm * energy_scale));
        }
        Ok(worst)
    }
}

/// Perturbation direction as coefficients over the Fourier basis
/// `[1, cos(t), sin(t), ..., cos(8t), sin(8t)]` with `t = 2πs/L`.
#[derive(Debug, Clone)]
struct Direction {
    coeffs: [f64; BASIS_DIRECTIONS],
}

impl Direction {
    fn value(&self, s: f64, length: f64) -> f64 {
        let t = core::f64::consts::TAU * s / length;
        let mut acc = self.coeffs[0];
        for k in 1..=8usize {
            let kt = k as f64 * t;
            acc += self.coeffs[2 * k - 1] * kt.cos() + self.coeffs[2 * k] * kt.sin();
        }
        acc
    }

    fn derivative(&self, s: f64, length: f64) -> f64 {
        let omega = core::f64::consts::TAU / length;
        let t = omega * s;
        let mut acc = 0.0;
        for k in 1..=8usize {
            let kw = k as f64 * omega;
            let kt = k as f64 * t;
            acc += -self.coeffs[2 * k - 1] * kw * kt.sin() + self.coeffs[2 * k] * kw * kt.cos();
        }
        acc
    }
}

fn direction_set(n_directions: usize) -> Vec<Direction> {
    let mut out = Vec::with_capacity(n_directions);
    for i in 0..n_directions.min(BASIS_DIRECTIONS) {
        let mut coeffs = [0.0; BASIS_DIRECTIONS];
        coeffs[i] = 1.0;
        out.push(Direction { coeffs });
    }
    // Extra directions: deterministic pseudo-random basis combinations.
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    while out.len() < n_directions {
        let mut coeffs = [0.0; BASIS_DIRECTIONS];
        for c in &mut coeffs {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            *c = (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0;
        }
        out.push(Direction { coeffs });
    }
    out
}

struct PerturbedProfile<'a> {
    base: &'a dyn Profile,
    direction: &'a Direction,
    amplitude: f64,
    length: f64,
}

impl Profile for PerturbedProfile<'_> {
    fn value(&self, s: f64) -> f64 {
        self.base.value(s) + self.amplitude * self.direction.value(s, self.length)
    }

    fn derivative(&self, s: f64) -> f64 {
        self.base.derivative(s) + self.amplitude * self.direction.derivative(s, self.length)
    }
}

/// Normalized residuals of the reduced Euler-Lagrange system at a constant
/// state: the `cos t`/`sin t` coefficients of the two midline equations and
/// the full shape equation, each scaled by its largest term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElResidual {
    pub eq1: f64,
    pub eq2: f64,
    pub eq3: f64,
}

fn normalized_residual(terms: &[f64]) -> f64 {
    let sum: f64 = terms.iter().sum();
    let scale = terms
        .iter()
        .fold(0.0f64, |m, t| m.max(t.abs()))
        .max(f64::MIN_POSITIVE);
    sum.abs() / scale
}

/// Euler-Lagrange residuals for a constant shape state (`a` for the
/// ellipse and oval cases, `Θ` for the dilation case) and multiplier.
pub fn el_residual(
    case: CaseKind,
    params: &Params,
    state: f64,
    lambda: f64,
) -> Result<ElResidual, VariationalError> {
    if !state.is_finite() || state <= 0.0 {
        return Err(VariationalError::StateOutOfDomain { value: state });
    }
    let eq3_terms = eq3_terms(case, params, state)?;
    let eq3 = normalized_residual(&eq3_terms);

    let Params {
        alpha,
        beta,
        sigma,
        area,
        radius,
    } = *params;
    let r2 = radius * radius;

    let (eq1, eq2) = match case {
        CaseKind::Ellipse => {
            let a = state;
            // cos t coefficient of the first equation at a' = a'' = 0.
            let terms = [
                beta * a * a,
                -2.0 * sigma * a,
                beta * area * area / (PI * PI * a * a),
                lambda,
                -alpha / r2,
                2.0 * radius * sigma,
            ];
            // The sin t coefficient of the second equation carries the same
            // constant-state terms.
            (normalized_residual(&terms), normalized_residual(&terms))
        }
        CaseKind::Dilation { a0 } => {
            let theta = state;
            let terms = [
                2.0 * beta * a0 * a0 * theta,
                2.0 * a0 * sigma * theta,
                -beta * a0 * a0 * theta * theta,
                -beta * a0 * a0,
                -lambda,
                alpha / r2,
                -2.0 * radius * sigma,
            ];
            (normalized_residual(&terms), normalized_residual(&terms))
        }
        CaseKind::Oval => {
            let a = state;
            let gap = area - PI * a * a;
            if gap <= 0.0 {
                return Err(VariationalError::AreaExceeded { s: 0.0, value: a });
            }
            let root_gap = gap.sqrt();
            let sqrt_pi = PI.sqrt();
            let r3 = r2 * radius;
            let stress = -alpha + lambda * r2 + 2.0 * sigma * r3;
            let terms = [
                sqrt_pi * gap * PI * a * a * (stress - 2.0 * r2 * a * (beta * a + sigma)),
                sqrt_pi * gap * (2.0 * area * r2 * a * (2.0 * beta * a + sigma) - area * stress),
                2.0 * 2.0f64.sqrt()
                    * sigma
                    * r2
                    * root_gap
                    * (PI * a * a * (PI * a * a - 2.0 * area) + area * area),
                -2.0 * beta * area * area * r2 * gap / sqrt_pi,
            ];
            (normalized_residual(&terms), normalized_residual(&terms))
        }
    };

    Ok(ElResidual { eq1, eq2, eq3 })
}

/// Unnormalized left-hand side of the third (shape) equation at a constant
/// state. For the ellipse this equals `2Γ(a)/(π²a³)` with `Γ` the
/// equilibrium quartic.
pub fn el_eq3_raw(case: CaseKind, params: &Params, state: f64) -> Result<f64, VariationalError> {
    Ok(eq3_terms(case, params, state)?.iter().sum())
}

fn eq3_terms(
    case: CaseKind,
    params: &Params,
    state: f64,
) -> Result<[f64; 4], VariationalError> {
    if !state.is_finite() || state <= 0.0 {
        return Err(VariationalError::StateOutOfDomain { value: state });
    }
    let Params {
        beta,
        sigma,
        area,
        radius,
        ..
    } = *params;
    match case {
        CaseKind::Ellipse => {
            let a = state;
            Ok([
                2.0 * a * sigma,
                -2.0 * radius * sigma,
                -2.0 * beta * area * area * radius / (PI * PI * a * a * a),
                2.0 * a * beta * radius,
            ])
        }
        CaseKind::Dilation { a0 } => {
            let theta = state;
            Ok([
                2.0 * a0 * a0 * theta * (beta * radius + sigma),
                -2.0 * a0 * radius * (beta * a0 + sigma),
                0.0,
                0.0,
            ])
        }
        CaseKind::Oval => {
            let a = state;
            let gap = area - PI * a * a;
            if gap <= 0.0 {
                return Err(VariationalError::AreaExceeded { s: 0.0, value: a });
            }
            let root_gap = gap.sqrt();
            let sqrt_pi = PI.sqrt();
            Ok([
                2.0f64.sqrt() * sigma * (PI * a * (2.0 * a - radius) - area) / root_gap,
                2.0 * sqrt_pi * beta * radius * a,
                sqrt_pi * sigma * (a + radius),
                0.0,
            ])
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VariationalError {
    /// Node count not a power of two or below 64.
    BadNodeCount { n_nodes: usize },
    /// Profile value not positive at a node.
    NonPositiveProfile { s: f64, value: f64 },
    /// Oval profile exceeding the fixed-area bound at a node.
    AreaExceeded { s: f64, value: f64 },
    /// Constant state outside its domain.
    StateOutOfDomain { value: f64 },
}

impl fmt::Display for VariationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariationalError::BadNodeCount { n_nodes } => {
                write!(f, "node count {n_nodes} must be a power of two >= 64")
            }
            VariationalError::NonPositiveProfile { s, value } => {
                write!(f, "profile value {value} at s = {s} must be positive")
            }
            VariationalError::AreaExceeded { s, value } => {
                write!(f, "profile value {value} at s = {s} exceeds the area bound")
            }
            VariationalError::StateOutOfDomain { value } => {
                write!(f, "constant state {value} outside its domain")
            }
        }
    }
}
