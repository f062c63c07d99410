//! SVG and CSV output of traced component curves.

use std::fmt::Write;

use rlalg_core::numeric::{trace_curve, BBox, Polyline, TraceOptions};
use rlalg_core::{AlgebraError, Polynomial, Var, VarSet};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;
const MARGIN: f64 = 40.0;
const STROKES: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

/// One curve to draw, as an equation in `x, y` (dual curves are renamed).
pub struct Curve {
    pub id: usize,
    pub label: String,
    pub equation: Polynomial,
}

pub struct Traced {
    pub id: usize,
    pub label: String,
    pub lines: Vec<Polyline>,
}

/// Moves an equation in `(a, b)` onto `(x, y)`.
pub fn as_xy(p: &Polynomial, a: Var, b: Var) -> Result<Polynomial, AlgebraError> {
    let xy = VarSet::of(&[Var::X, Var::Y]);
    if a == Var::X && b == Var::Y {
        return Ok(p.to_varset(&xy)?);
    }
    Ok(p.rename(&[(a, Var::X), (b, Var::Y)], &xy)?)
}

pub fn trace_all(curves: Vec<Curve>, bbox: BBox, resolution: usize) -> Result<Vec<Traced>, AlgebraError> {
    let opts = TraceOptions { resolution, polish: true };
    curves
        .into_iter()
        .map(|c| {
            let lines = if c.equation.is_constant() { Vec::new() } else { trace_curve(&c.equation, bbox, opts)? };
            Ok(Traced { id: c.id, label: c.label, lines })
        })
        .collect()
}

pub fn csv(traced: &[Traced]) -> String {
    let mut out = String::from("component_id,x,y\n");
    for t in traced {
        for line in &t.lines {
            for (x, y) in line {
                let _ = writeln!(out, "{},{:.17e},{:.17e}", t.id, x, y);
            }
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn svg(traced: &[Traced], bbox: BBox, axes: (&str, &str), title: &str) -> String {
    let sx = |x: f64| MARGIN + (x - bbox.x0) / (bbox.x1 - bbox.x0) * (WIDTH - 2.0 * MARGIN);
    // mathematical orientation: y grows upwards
    let sy = |y: f64| HEIGHT - MARGIN - (y - bbox.y0) / (bbox.y1 - bbox.y0) * (HEIGHT - 2.0 * MARGIN);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{}" viewBox="0 0 {WIDTH} {}" font-family="sans-serif" font-size="12">"#,
        HEIGHT + 20.0 * traced.len() as f64,
        HEIGHT + 20.0 * traced.len() as f64
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r##"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="#999"/>"##, WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);
    let _ = writeln!(out, r##"<g id="axes" stroke="#444" stroke-width="1">"##);
    if bbox.y0 <= 0.0 && 0.0 <= bbox.y1 {
        let _ = writeln!(out, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, sx(bbox.x0), sy(0.0), sx(bbox.x1), sy(0.0));
    }
    if bbox.x0 <= 0.0 && 0.0 <= bbox.x1 {
        let _ = writeln!(out, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, sx(0.0), sy(bbox.y0), sx(0.0), sy(bbox.y1));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#, WIDTH - MARGIN, HEIGHT - MARGIN + 16.0, axes.0);
    let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}">{}</text>"#, MARGIN - 28.0, MARGIN + 4.0, axes.1);
    let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}">[{}, {}]</text>"#, MARGIN, HEIGHT - MARGIN + 16.0, bbox.x0, bbox.x1);
    for t in traced {
        let stroke = STROKES[t.id % STROKES.len()];
        let _ = writeln!(out, r#"<g id="component-{}" class="component" fill="none" stroke="{stroke}" stroke-width="1.5">"#, t.id);
        for line in t.lines.iter().filter(|l| l.len() > 1) {
            let mut d = String::new();
            for (k, (x, y)) in line.iter().enumerate() {
                let _ = write!(d, "{}{:.3},{:.3}", if k == 0 { "M" } else { " L" }, sx(*x), sy(*y));
            }
            let _ = writeln!(out, r#"<path d="{d}"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, r#"<g id="legend">"#);
    for (k, t) in traced.iter().enumerate() {
        let y = HEIGHT + 20.0 * k as f64;
        let stroke = STROKES[t.id % STROKES.len()];
        let _ = writeln!(out, r#"<line x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}" stroke="{stroke}" stroke-width="3"/>"#, MARGIN + 24.0);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{}: {}</text>"#, MARGIN + 32.0, y + 4.0, t.id, escape(&t.label));
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
