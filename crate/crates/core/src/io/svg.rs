use std::fmt::Write;

use crate::fold::{CreaseKind, CreasePattern};

const MOUNTAIN_STROKE: &str = "#c0392b";
const VALLEY_STROKE: &str = "#2471a3";

/// SVG 1.1 drawing of the flat pattern, 1 user unit = 1 mm. Mountain creases
/// are solid, valley creases dashed, cable holes are circles.
pub fn write_crease_svg(pattern: &CreasePattern) -> String {
    let [l, w] = pattern.extents;
    let v = &pattern.vertices;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{l:.6}mm" height="{w:.6}mm" viewBox="0 0 {l:.6} {w:.6}">"#
    );
    let _ = writeln!(out, "<!-- orifold crease pattern; units: mm -->");
    let _ = writeln!(
        out,
        r##"<g id="facets" fill="none" stroke="#999999" stroke-width="0.2">"##
    );
    for f in &pattern.facets {
        let [a, b, c, d] = f.map(|k| v[k]);
        let _ = writeln!(
            out,
            r#"<path d="M {:.6} {:.6} L {:.6} {:.6} L {:.6} {:.6} L {:.6} {:.6} Z"/>"#,
            a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="creases" stroke-width="0.5">"#);
    for c in &pattern.creases {
        let (a, b) = (v[c.from], v[c.to]);
        let style = match c.kind {
            CreaseKind::Mountain => format!(r#"class="mountain" stroke="{MOUNTAIN_STROKE}""#),
            CreaseKind::Valley => format!(r#"class="valley" stroke="{VALLEY_STROKE}" stroke-dasharray="2 1""#),
        };
        let _ = writeln!(
            out,
            r#"<line {style} x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#,
            a[0], a[1], b[0], b[1]
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="holes" fill="none" stroke="black" stroke-width="0.2">"#);
    for h in &pattern.holes {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}"/>"#,
            h.center[0],
            h.center[1],
            h.diameter / 2.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
