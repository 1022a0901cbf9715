//! Equilibrium of the fixed-area elliptical cross-section.
//!
//! The horizontal semi-axis at equilibrium is the unique positive root of a
//! quartic; the vertical semi-axis follows from the fixed area and the
//! inextensibility multiplier from the first reduced equation. A solution
//! is physical only when the section stays inside the midline circle,
//! which is equivalent to `R > √(Π/π)`.

// Inherent std methods shadow the shim when the test harness links std.
#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::params::Params;
use crate::quartic::QuarticPoly;
use core::f64::consts::PI;

/// Relative margin used to decide strict admissibility `ā < R`.
const BOUNDARY_MARGIN: f64 = 1e-9;

/// Equilibrium data for the elliptical section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseSolution {
    /// Horizontal semi-axis at equilibrium.
    pub a_bar: f64,
    /// Vertical semi-axis `Π/(π·ā)`.
    pub b_bar: f64,
    /// Inextensibility multiplier.
    pub lambda_bar: f64,
    /// Semi-axis above which the equilibrium quartic is strictly
    /// increasing, `3σR/(4(βR+σ))`; always below `R`.
    pub a_star: f64,
    /// Non-interpenetration: `ā < R`, equivalently `R > √(Π/π)`.
    pub admissible: bool,
    /// `ā` within margin of the midline radius.
    pub at_boundary: bool,
    /// Section elongated along the horizontal axis (`ā > b̄`).
    pub elongated_horizontal: bool,
}

/// Quartic whose unique positive root is the equilibrium semi-axis:
/// `(σπ² + βπ²R)a⁴ - π²σR a³ - βΠ²R = 0`.
pub fn equilibrium_quartic(params: &Params) -> QuarticPoly {
    let Params {
        beta,
        sigma,
        area,
        radius,
        ..
    } = *params;
    let pi2 = PI * PI;
    QuarticPoly::new([
        sigma * pi2 + beta * pi2 * radius,
        -pi2 * sigma * radius,
        0.0,
        0.0,
        -beta * area * area * radius,
    ])
    .expect("leading coefficient is positive for valid parameters")
}

/// Threshold semi-axis `3σR/(4(βR+σ))` above which the equilibrium quartic
/// increases monotonically.
pub fn a_star(params: &Params) -> f64 {
    3.0 * params.sigma * params.radius / (4.0 * (params.beta * params.radius + params.sigma))
}

/// Solves the reduced equilibrium system: the unique positive quartic root,
/// the multiplier from the first reduced equation and the admissibility
/// flags. Inadmissibility is reported, not raised: the root always exists
/// and is useful when sweeping across the admissibility boundary.
pub fn solve_equilibrium(params: &Params) -> EllipseSolution {
    let quartic = equilibrium_quartic(params);
    // The quartic is negative at 0 and positive past max(R, √(Π/π)), so
    // twice that bound always brackets the unique positive root.
    let hi = 2.0 * params.radius.max(2.0 * (params.area / PI).sqrt());
    let report = quartic
        .isolate_real_roots(0.0, hi)
        .expect("bracket is non-degenerate");
    let a_bar = report
        .real_roots
        .iter()
        .rev()
        .find(|r| r.value > 0.0)
        .map(|r| r.value)
        .expect("the equilibrium quartic has one positive root");

    let b_bar = params.area / (PI * a_bar);
    let lambda_bar = lambda_from_axis(params, a_bar);

    let margin = BOUNDARY_MARGIN * params.radius;
    let admissible = a_bar < params.radius - margin;
    let at_boundary = (a_bar - params.radius).abs() <= margin;

    EllipseSolution {
        a_bar,
        b_bar,
        lambda_bar,
        a_star: a_star(params),
        admissible,
        at_boundary,
        // Relative slack keeps the circle limit (ā = b̄ at σ = 0) from
        // flipping the flag on rounding noise.
        elongated_horizontal: a_bar > b_bar * (1.0 + 1e-12),
    }
}

/// Multiplier from the first reduced equation:
/// `λ = α/R² - 2σR + 2σa - βa² - βΠ²/(π²a²)`.
pub fn lambda_from_axis(params: &Params, a: f64) -> f64 {
    let Params {
        alpha,
        beta,
        sigma,
        area,
        radius,
    } = *params;
    alpha / (radius * radius) - 2.0 * sigma * radius + 2.0 * sigma * a
        - beta * a * a
        - beta * area * area / (PI * PI * a * a)
}
