//! Shared geometric primitives: the circular midline, the inward-offset
//! film curve and the tube map lifting cross-section coordinates to 3D.
//!
//! Arc length `s ∈ [0, L]` is the canonical parameter everywhere; the
//! polar angle `t = 2πs/L = s/R` is internal. The director frame on the
//! circle is fixed once: `d` is the inward radial unit vector and `z` the
//! vertical unit vector, so case-specific offsets are unambiguous.

// Inherent std methods shadow the shim when the test harness links std.
#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::params::Params;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Midline point `(R cos(s/R), R sin(s/R))`.
pub fn midline_point(params: &Params, s: f64) -> Result<Point2, GeometryError> {
    let length = params.length();
    if !s.is_finite() || s < 0.0 || s > length {
        return Err(GeometryError::ArcLengthOutOfRange { s, length });
    }
    let t = s / params.radius;
    Ok(Point2 {
        x: params.radius * t.cos(),
        y: params.radius * t.sin(),
    })
}

/// Trace of the film on the rod boundary: the midline offset inward by
/// `thickness` along the normal, `u = x - a y'/|r'|`, `v = y + a x'/|r'|`.
/// On the circular midline this is the concentric circle of radius
/// `R - thickness`.
pub fn scaled_curve_point(
    params: &Params,
    s: f64,
    thickness: f64,
) -> Result<Point2, GeometryError> {
    if !thickness.is_finite() || thickness <= 0.0 {
        return Err(GeometryError::NonPositiveThickness { thickness });
    }
    if thickness >= params.radius {
        return Err(GeometryError::Interpenetration {
            thickness,
            radius: params.radius,
        });
    }
    let base = midline_point(params, s)?;
    let t = s / params.radius;
    // Unit-speed derivatives of the arc-length parametrized circle.
    let dx = -t.sin();
    let dy = t.cos();
    let speed = dx.hypot(dy);
    Ok(Point2 {
        x: base.x - thickness * dy / speed,
        y: base.y + thickness * dx / speed,
    })
}

/// Position of a rod point, `p = r + ζ₁ d + ζ₂ z`, with `d` the inward
/// in-plane normal and `z` the vertical director. Pure map; membership of
/// `(ζ₁, ζ₂)` in the cross-section is the caller's responsibility.
pub fn tube_point(params: &Params, s: f64, zeta1: f64, zeta2: f64) -> Point3 {
    let t = s / params.radius;
    let (cos_t, sin_t) = (t.cos(), t.sin());
    let d = (-cos_t, -sin_t);
    Point3 {
        x: params.radius * cos_t + zeta1 * d.0,
        y: params.radius * sin_t + zeta1 * d.1,
        z: zeta2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeometryError {
    ArcLengthOutOfRange { s: f64, length: f64 },
    NonPositiveThickness { thickness: f64 },
    Interpenetration { thickness: f64, radius: f64 },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::ArcLengthOutOfRange { s, length } => {
                write!(f, "arc length {s} outside [0, {length}]")
            }
            GeometryError::NonPositiveThickness { thickness } => {
                write!(f, "film thickness must be positive, got {thickness}")
            }
            GeometryError::Interpenetration { thickness, radius } => write!(
                f,
                "film thickness {thickness} reaches the midline radius {radius}"
            ),
        }
    }
}
