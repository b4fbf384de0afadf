//! Minimal self-contained SVG line charts.

use std::fmt::Write;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct Polyline<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Bounds {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Bounds {
    fn of<'p>(points: impl Iterator<Item = &'p (f64, f64)>) -> Self {
        let mut b = Bounds {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for &(x, y) in points.filter(|(x, y)| x.is_finite() && y.is_finite()) {
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        if !b.x0.is_finite() {
            return Bounds { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 };
        }
        // degenerate ranges still need a nonzero span
        if b.x1 - b.x0 <= 0.0 {
            b.x0 -= 0.5;
            b.x1 += 0.5;
        }
        if b.y1 - b.y0 <= 0.0 {
            b.y0 -= 0.5;
            b.y1 += 0.5;
        }
        b
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let (mx, my) = (MARGIN * WIDTH, MARGIN * HEIGHT);
        let px = mx + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * mx);
        let py = HEIGHT - my - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * my);
        (px, py)
    }
}

/// Renders the polylines and circular markers on a shared linear scale
/// with 5% margins on every side.
pub fn render(lines: &[Polyline<'_>], markers: &[(f64, f64)]) -> String {
    let bounds = Bounds::of(lines.iter().flat_map(|l| l.points.iter()).chain(markers.iter()));
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH,
        h = HEIGHT
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();

    let (ax0, ay0) = bounds.map((bounds.x0, bounds.y0));
    let (ax1, ay1) = bounds.map((bounds.x1, bounds.y1));
    writeln!(
        out,
        r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#999999" stroke-width="1"/>"##,
        ax0,
        ay1,
        ax1 - ax0,
        ay0 - ay1
    )
    .unwrap();
    if bounds.y0 < 0.0 && bounds.y1 > 0.0 {
        let (_, zy) = bounds.map((bounds.x0, 0.0));
        writeln!(
            out,
            r##"<line x1="{ax0:.2}" y1="{zy:.2}" x2="{ax1:.2}" y2="{zy:.2}" stroke="#cccccc" stroke-width="1"/>"##
        )
        .unwrap();
    }

    for (i, line) in lines.iter().enumerate() {
        let pts: Vec<String> = line
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|&p| {
                let (x, y) = bounds.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            out,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            line.color,
            pts.join(" ")
        )
        .unwrap();
        let ly = 14.0 + 16.0 * i as f64;
        writeln!(
            out,
            r#"<text x="{:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" fill="{}">{}</text>"#,
            ax0 + 8.0,
            line.color,
            escape(line.label)
        )
        .unwrap();
    }
    for &p in markers {
        let (x, y) = bounds.map(p);
        writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
