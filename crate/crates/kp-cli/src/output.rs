//! Result serialization: JSON documents, CSV tables with reproducible
//! float formatting, and presentation-only SVG.

use crate::shapes::{SamplePoints, ShapeSample};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutFormat {
    Json,
    Csv,
    Svg,
}

/// 17 significant digits: enough to reproduce any `f64` exactly.
pub fn csv_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn write_text(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
        }
    }
}

/// Pixels per model unit (model units are millimeters).
const SVG_SCALE: f64 = 100.0;
const SVG_MARGIN: f64 = 0.05;
const STROKES: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Renders closed 2D polylines as one `<path>` each. Every sample point
/// appears as a path command, so command counts match sample counts.
pub fn svg_document(samples: &[ShapeSample]) -> Result<String, String> {
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for sample in samples {
        match &sample.points {
            SamplePoints::TwoD(points) => {
                xs.extend(points.iter().map(|p| p[0]));
                ys.extend(points.iter().map(|p| p[1]));
            }
            SamplePoints::ThreeD(_) => {
                return Err("3D point clouds have no SVG rendering; use json or csv".into())
            }
        }
    }
    if xs.is_empty() {
        return Err("nothing to draw".into());
    }
    let (x_min, x_max) = bounds(&xs);
    let (y_min, y_max) = bounds(&ys);
    let span_x = (x_max - x_min).max(1e-9);
    let span_y = (y_max - y_min).max(1e-9);
    let margin = SVG_MARGIN * span_x.max(span_y);
    let width = (span_x + 2.0 * margin) * SVG_SCALE;
    let height = (span_y + 2.0 * margin) * SVG_SCALE;
    let to_px = |p: &[f64; 2]| {
        let x = (p[0] - x_min + margin) * SVG_SCALE;
        let y = (y_max - p[1] + margin) * SVG_SCALE;
        (x, y)
    };

    let mut doc = String::new();
    doc.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">\n"
    ));
    for (i, sample) in samples.iter().enumerate() {
        let SamplePoints::TwoD(points) = &sample.points else {
            unreachable!("3D rejected above")
        };
        let mut d = String::new();
        for (j, point) in points.iter().enumerate() {
            let (x, y) = to_px(point);
            let cmd = if j == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd} {x:.3} {y:.3} "));
        }
        if sample.closed {
            d.push('Z');
        }
        doc.push_str(&format!(
            "  <path fill=\"none\" stroke=\"{}\" stroke-width=\"{:.2}\" d=\"{}\"/>\n",
            STROKES[i % STROKES.len()],
            0.01 * SVG_SCALE,
            d.trim_end()
        ));
    }
    doc.push_str("</svg>\n");
    Ok(doc)
}

fn bounds(values: &[f64]) -> (f64, f64) {
    values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::ShapeKind;

    #[test]
    fn csv_floats_round_trip() {
        for value in [1.8003401954731912f64, -6.967172076619669, 0.1, 1e-300] {
            let text = csv_f64(value);
            let back: f64 = text.parse().unwrap();
            assert_eq!(back.to_bits(), value.to_bits(), "{text}");
        }
    }

    #[test]
    fn svg_path_commands_match_sample_counts() {
        let square = ShapeSample {
            kind: ShapeKind::CrossSection,
            closed: true,
            points: SamplePoints::TwoD(vec![
                [0.0, 0.0],
                [1.0, 0.0],
                [1.0, 1.0],
                [0.0, 1.0],
                [0.0, 0.0],
            ]),
        };
        let doc = svg_document(&[square]).unwrap();
        let commands = doc.matches("M ").count() + doc.matches("L ").count();
        assert_eq!(commands, 5);
        assert_eq!(doc.matches("<path").count(), 1);
        assert!(doc.contains('Z'));
    }

    #[test]
    fn svg_rejects_point_clouds() {
        let cloud = ShapeSample {
            kind: ShapeKind::Tube,
            closed: false,
            points: SamplePoints::ThreeD(vec![[0.0, 0.0, 0.0]]),
        };
        assert!(svg_document(&[cloud]).is_err());
    }
}
