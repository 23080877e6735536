//! SVG drawing of an arc set on the 2N-gon: chords for non-diameter orbits
//! (both representatives), red diameters wavy, green diameters straight.

use std::fmt::Write as _;

use crate::arcset::ArcSet;
use crate::model::ModelParams;
use crate::polygon::{ArcUniverse, Color, PairedArc};

const SIZE: f64 = 520.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 200.0;

/// Vertex 1 at the top, numbering clockwise.
fn point(params: &ModelParams, v: u32) -> (f64, f64) {
    let count = params.vertex_count() as f64;
    let angle = -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (v - 1) as f64 / count;
    (CENTER + RADIUS * angle.cos(), CENTER + RADIUS * angle.sin())
}

fn wave(from: (f64, f64), to: (f64, f64)) -> String {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let len = (dx * dx + dy * dy).sqrt();
    let (nx, ny) = (-dy / len, dx / len);
    let waves = (len / 24.0).round().max(4.0) as usize;
    let steps = waves * 8;
    let mut d = format!("M{:.2},{:.2}", from.0, from.1);
    for s in 1..=steps {
        let t = s as f64 / steps as f64;
        let off = 5.0 * (std::f64::consts::TAU * waves as f64 * t).sin();
        let _ = write!(d, " L{:.2},{:.2}", from.0 + dx * t + nx * off, from.1 + dy * t + ny * off);
    }
    d
}

/// Deterministic SVG text for `set`.
pub fn render_svg(universe: &ArcUniverse, set: &ArcSet) -> String {
    let params = universe.params();
    let count = params.vertex_count();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let corners: Vec<String> = (1..=count)
        .map(|v| {
            let (x, y) = point(params, v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        "  <polygon class=\"boundary\" points=\"{}\" fill=\"none\" stroke=\"black\"/>",
        corners.join(" ")
    );
    for v in 1..=count {
        let (x, y) = point(params, v);
        let (lx, ly) = (CENTER + (x - CENTER) * 1.08, CENTER + (y - CENTER) * 1.08);
        let _ = writeln!(
            s,
            "  <text class=\"label\" x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">{v}</text>"
        );
    }
    for arc in set.arcs(universe) {
        match arc {
            PairedArc::NonDiameter { .. } => {
                for c in arc.representatives(params) {
                    let (a, b) = (point(params, c.x), point(params, c.y));
                    let _ = writeln!(
                        s,
                        "  <line class=\"chord\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
                        a.0, a.1, b.0, b.1
                    );
                }
            }
            PairedArc::Diameter { color: Color::Red, .. } => {
                let c = arc.representatives(params)[0];
                let _ = writeln!(
                    s,
                    "  <path class=\"diameter red\" d=\"{}\" fill=\"none\" stroke=\"red\"/>",
                    wave(point(params, c.x), point(params, c.y))
                );
            }
            PairedArc::Diameter { color: Color::Green, .. } => {
                let c = arc.representatives(params)[0];
                let (a, b) = (point(params, c.x), point(params, c.y));
                let _ = writeln!(
                    s,
                    "  <line class=\"diameter green\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"green\"/>",
                    a.0, a.1, b.0, b.1
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
