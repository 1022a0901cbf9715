//! Horizontal dilation of the equilibrium elliptical section.
//!
//! Starting from a base semi-axis `a0` (case-1 equilibrium), the dilation
//! coefficient has the closed form `Θ̄ = R(βa0+σ)/(a0(βR+σ))`; it exceeds 1
//! exactly when the base section clears the midline (`a0 < R`, σ > 0).
//! Only the horizontal axis dilates: stretching the vertical one does not
//! change the energy, and a two-axis transform is equivalent to a single
//! horizontal one.

use crate::params::Params;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilationSolution {
    /// Dilation coefficient of the horizontal semi-axis.
    pub theta_bar: f64,
    /// Inextensibility multiplier.
    pub lambda_bar: f64,
    /// Base semi-axis the dilation acts on.
    pub a0: f64,
    /// Dilated horizontal semi-axis `Θ̄·a0`.
    pub dilated_axis: f64,
    /// Whether the transform actually dilates (`Θ̄ > 1`).
    pub is_dilatation: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DilationError {
    NonPositiveBaseAxis { a0: f64 },
}

impl fmt::Display for DilationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DilationError::NonPositiveBaseAxis { a0 } => {
                write!(f, "base semi-axis must be positive, got {a0}")
            }
        }
    }
}

/// Solves the reduced dilation system for a given base semi-axis. `a0` is
/// an explicit input rather than an internal re-solve so the operation is
/// testable in isolation; pipelines wire the case-1 result into it.
pub fn solve_dilation(params: &Params, a0: f64) -> Result<DilationSolution, DilationError> {
    if !a0.is_finite() || a0 <= 0.0 {
        return Err(DilationError::NonPositiveBaseAxis { a0 });
    }
    let Params {
        alpha,
        beta,
        sigma,
        radius,
        ..
    } = *params;

    let theta_bar = radius * (beta * a0 + sigma) / (a0 * (beta * radius + sigma));
    let shift = theta_bar - 1.0;
    let lambda_bar = alpha / (radius * radius) - 2.0 * radius * sigma
        + 2.0 * a0 * sigma * theta_bar
        - beta * a0 * a0 * shift * shift;

    Ok(DilationSolution {
        theta_bar,
        lambda_bar,
        a0,
        dilated_axis: theta_bar * a0,
        is_dilatation: theta_bar > 1.0,
    })
}

/// Residual of the reduced stationarity equation
/// `2a0(a0·Θ(βR+σ) - R(βa0+σ))` at a given `Θ`, normalized by the larger
/// of its two terms.
pub fn reduced_equation_residual(params: &Params, a0: f64, theta: f64) -> f64 {
    let t1 = 2.0 * a0 * a0 * theta * (params.beta * params.radius + params.sigma);
    let t2 = -2.0 * a0 * params.radius * (params.beta * a0 + params.sigma);
    (t1 + t2).abs() / t1.abs().max(t2.abs()).max(f64::MIN_POSITIVE)
}
