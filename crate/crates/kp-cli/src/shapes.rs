//! Shape sampling: cross-section outlines, the midline circle, the film
//! attachment curve and tube surface point clouds.

use kp_core::geometry;
use kp_core::Params;
use serde::Serialize;
use std::f64::consts::TAU;

/// Cross-sections are sampled at no fewer points than this.
pub const MIN_SECTION_SAMPLES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    #[value(name = "midline")]
    Midline,
    /// Film attachment curve.
    #[value(name = "film")]
    ScaledCurve,
    #[value(name = "section")]
    CrossSection,
    #[value(name = "tube")]
    Tube,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SamplePoints {
    TwoD(Vec<[f64; 2]>),
    ThreeD(Vec<[f64; 3]>),
}

impl SamplePoints {
    pub fn len(&self) -> usize {
        match self {
            SamplePoints::TwoD(v) => v.len(),
            SamplePoints::ThreeD(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Ordered polyline samples of one geometric object. Closed polylines
/// repeat the first point last.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeSample {
    pub kind: ShapeKind,
    pub closed: bool,
    pub points: SamplePoints,
}

fn closed_2d(kind: ShapeKind, mut points: Vec<[f64; 2]>) -> ShapeSample {
    if let Some(&first) = points.first() {
        points.push(first);
    }
    ShapeSample {
        kind,
        closed: true,
        points: SamplePoints::TwoD(points),
    }
}

/// Cross-section boundary in the section plane spanned by the inward
/// normal and the vertical director.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SectionOutline {
    /// Semi-axes `(a, b)`; the horizontal axis faces the film.
    Ellipse { a: f64, b: f64 },
    /// Limacon `r(θ) = a + b·cosθ`; the long semi-axis faces the film.
    Limacon { a: f64, b: f64 },
}

impl SectionOutline {
    pub fn point(&self, theta: f64) -> [f64; 2] {
        match *self {
            SectionOutline::Ellipse { a, b } => [a * theta.cos(), b * theta.sin()],
            SectionOutline::Limacon { a, b } => {
                let r = a + b * theta.cos();
                [r * theta.cos(), r * theta.sin()]
            }
        }
    }

    /// Film-side thickness: how far the section reaches toward the center.
    pub fn film_thickness(&self) -> f64 {
        match *self {
            SectionOutline::Ellipse { a, .. } => a,
            SectionOutline::Limacon { a, b } => a + b,
        }
    }
}

pub fn cross_section(outline: &SectionOutline, samples: usize) -> ShapeSample {
    let n = samples.max(MIN_SECTION_SAMPLES);
    let points = (0..n)
        .map(|i| outline.point(TAU * i as f64 / n as f64))
        .collect();
    closed_2d(ShapeKind::CrossSection, points)
}

pub fn midline_circle(params: &Params, samples: usize) -> ShapeSample {
    let n = samples.max(3);
    let length = params.length();
    let points = (0..n)
        .map(|i| {
            let p = geometry::midline_point(params, length * i as f64 / n as f64)
                .expect("sample arc length stays in range");
            [p.x, p.y]
        })
        .collect();
    closed_2d(ShapeKind::Midline, points)
}

pub fn film_curve(
    params: &Params,
    thickness: f64,
    samples: usize,
) -> Result<ShapeSample, String> {
    let n = samples.max(3);
    let length = params.length();
    let mut points = Vec::with_capacity(n + 1);
    for i in 0..n {
        let p = geometry::scaled_curve_point(params, length * i as f64 / n as f64, thickness)
            .map_err(|e| e.to_string())?;
        points.push([p.x, p.y]);
    }
    Ok(closed_2d(ShapeKind::ScaledCurve, points))
}

/// Tube surface point cloud: the section boundary swept along the midline.
pub fn tube_cloud(
    params: &Params,
    outline: &SectionOutline,
    rings: usize,
    ring_samples: usize,
) -> ShapeSample {
    let length = params.length();
    let mut points = Vec::with_capacity(rings * ring_samples);
    for i in 0..rings {
        let s = length * i as f64 / rings as f64;
        for j in 0..ring_samples {
            let [zeta1, zeta2] = outline.point(TAU * j as f64 / ring_samples as f64);
            let p = geometry::tube_point(params, s, zeta1, zeta2);
            points.push([p.x, p.y, p.z]);
        }
    }
    ShapeSample {
        kind: ShapeKind::Tube,
        closed: false,
        points: SamplePoints::ThreeD(points),
    }
}
