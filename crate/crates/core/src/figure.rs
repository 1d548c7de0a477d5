//! Image-domain data for f(z) = (sin 2√z − 2√z cos 2√z)/(2z√z) and
//! g = 1/f: circles |z| = 0.25, 0.5, 0.75, 1 and their images.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::Result;
use crate::params::{FunctionKind, WrightParams};
use crate::report::render;
use crate::series::{CoefficientStream, SeriesPlan, DEFAULT_TERM_CAP};

pub const FIGURE_RADII: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

pub const CSV_HEADER: &str = "re_z,im_z,re_f,im_f,re_g,im_g,tail_bound";

/// Reference lines drawn in the SVG.
pub const REFERENCE_LINES: [f64; 2] = [2.0 / 3.0, 0.5];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureSample {
    pub radius: f64,
    pub z: Complex64,
    pub f: Complex64,
    pub g: Complex64,
    /// Bound on |f − computed f|.
    pub tail_bound: f64,
}

/// `points` samples per circle at angles 2πk/points, circles in
/// [`FIGURE_RADII`] order. f comes from the 𝒲_{1,5/2} series at −z.
pub fn figure_samples(points: usize, tol: f64) -> Result<Vec<FigureSample>> {
    let stream = CoefficientStream::new(FunctionKind::NormFirst, WrightParams { lambda: 1.0, mu: 2.5 })?;
    let plan = SeriesPlan::new(stream, tol, DEFAULT_TERM_CAP)?;
    let tail = 4.0 / 3.0 * plan.tail_bound();
    let mut out = Vec::with_capacity(points * FIGURE_RADII.len());
    for r in FIGURE_RADII {
        for k in 0..points {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / points as f64);
            let f = plan.reduced(-z) * (4.0 / 3.0);
            out.push(FigureSample {
                radius: r,
                z,
                f,
                g: f.inv(),
                tail_bound: tail,
            });
        }
    }
    Ok(out)
}

pub fn to_csv(samples: &[FigureSample]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for s in samples {
        let row = [s.z.re, s.z.im, s.f.re, s.f.im, s.g.re, s.g.im, s.tail_bound].map(render);
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn around<'a>(pts: impl Iterator<Item = &'a Complex64>) -> Frame {
        let mut f = Frame {
            x0: REFERENCE_LINES[1],
            x1: REFERENCE_LINES[0],
            y0: 0.0,
            y1: 0.0,
        };
        for p in pts {
            f.x0 = f.x0.min(p.re);
            f.x1 = f.x1.max(p.re);
            f.y0 = f.y0.min(p.im);
            f.y1 = f.y1.max(p.im);
        }
        let pad = 0.05 * (f.x1 - f.x0).max(f.y1 - f.y0);
        Frame {
            x0: f.x0 - pad,
            x1: f.x1 + pad,
            y0: f.y0 - pad,
            y1: f.y1 + pad,
        }
    }

    /// Maps to a `size`-wide panel with its left edge at `left`; y up.
    fn map(&self, p: Complex64, left: f64, size: f64) -> (f64, f64) {
        let s = size / (self.x1 - self.x0).max(self.y1 - self.y0);
        (left + (p.re - self.x0) * s, size - (p.im - self.y0) * s)
    }
}

fn panel(out: &mut String, title: &str, samples: &[FigureSample], pick: fn(&FigureSample) -> Complex64, left: f64) {
    const SIZE: f64 = 400.0;
    let values: Vec<Complex64> = samples.iter().map(pick).collect();
    let frame = Frame::around(values.iter());
    let _ = writeln!(out, "  <g>");
    let _ = writeln!(
        out,
        "    <text x=\"{:.2}\" y=\"16\" font-size=\"14\">{title}</text>",
        left + 8.0
    );
    for re in REFERENCE_LINES {
        let (x, _) = frame.map(Complex64::new(re, 0.0), left, SIZE);
        let _ = writeln!(
            out,
            "    <line x1=\"{x:.2}\" y1=\"0\" x2=\"{x:.2}\" y2=\"{SIZE}\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>"
        );
    }
    for r in FIGURE_RADII {
        let pts: Vec<String> = samples
            .iter()
            .zip(&values)
            .filter(|(s, _)| s.radius == r)
            .map(|(_, &v)| {
                let (x, y) = frame.map(v, left, SIZE);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        if pts.is_empty() {
            continue;
        }
        let _ = writeln!(
            out,
            "    <polygon fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1\" points=\"{}\"/>",
            pts.join(" ")
        );
    }
    let _ = writeln!(out, "  </g>");
}

/// Two panels, the images of f and of g, each with dashed vertical lines
/// at Re = 2/3 and Re = 1/2.
pub fn to_svg(samples: &[FigureSample]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"820\" height=\"400\" viewBox=\"0 0 820 400\">"
    );
    panel(&mut out, "f", samples, |s| s.f, 0.0);
    panel(&mut out, "g = 1/f", samples, |s| s.g, 420.0);
    out.push_str("</svg>\n");
    out
}
