use std::fmt::Write as _;

use crate::engine::{PointSet, Trace};
use crate::kernel::convex_hull;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;
/// Each stop segment runs this far past its two points, as a fraction of
/// their distance.
const OVERHANG: f64 = 0.35;

/// Maps model coordinates into the drawing square, y pointing up.
struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)]) -> Frame {
        let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
        let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
        Frame { min_x, min_y, scale }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (MARGIN + (x - self.min_x) * self.scale, SIZE - MARGIN - (y - self.min_y) * self.scale)
    }
}

/// A static drawing of a run: the hull outline, one labelled segment per
/// stop (label = step number) and one marker per point. Coordinates are
/// rounded to floats here and nowhere else.
pub fn emit_svg(trace: &Trace, set: &PointSet) -> String {
    let model: Vec<(f64, f64)> = set.points().iter().map(|p| p.to_f64()).collect();
    let frame = Frame::fit(&model);
    let screen: Vec<(f64, f64)> = model.iter().map(|&p| frame.map(p)).collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    out.push_str(
        "<style>.hull{fill:none;stroke:#bbb;stroke-dasharray:4 3}\
         .stop line{stroke:#3b6ea5;stroke-opacity:0.45}\
         .stop text{font:10px sans-serif;fill:#3b6ea5}\
         .point{fill:#222}.label{font:12px sans-serif}</style>\n",
    );

    let hull: Vec<String> = convex_hull(set.points())
        .iter()
        .map(|&i| format!("{:.2},{:.2}", screen[i].0, screen[i].1))
        .collect();
    let _ = writeln!(out, r#"<polygon class="hull" points="{}"/>"#, hull.join(" "));

    let _ = writeln!(out, r#"<g class="stops">"#);
    for (step, stop) in trace.stops.iter().enumerate() {
        let (px, py) = screen[stop.pivot];
        let (ox, oy) = screen[stop.other];
        let (dx, dy) = ((ox - px) * OVERHANG, (oy - py) * OVERHANG);
        let _ = writeln!(
            out,
            r#"<g class="stop" data-step="{step}"><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/><text x="{:.2}" y="{:.2}">{step}</text></g>"#,
            px - dx,
            py - dy,
            ox + dx,
            oy + dy,
            (px + ox) / 2.0,
            (py + oy) / 2.0,
        );
    }
    let _ = writeln!(out, "</g>");

    for (i, &(x, y)) in screen.iter().enumerate() {
        let _ = writeln!(out, r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="4"/>"#);
        let _ = writeln!(out, r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#, x + 6.0, y - 6.0, i + 1);
    }
    out.push_str("</svg>\n");
    out
}
