//! SVG 1.1 rendering of ordered chord diagrams.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::quasitree::ChordDiagram;

const SIZE: f64 = 320.0;
const RADIUS: f64 = 120.0;

/// Marks sit on a circle in walk order, clockwise from the top. Chords of
/// the quasi-tree are solid, the others dashed; live chords are red.
pub fn chord_diagram_svg(cd: &ChordDiagram, title: &str) -> String {
    let m = cd.cyclic_order().len();
    let c = SIZE / 2.0;
    let point = |k: usize, r: f64| {
        let angle = -PI / 2.0 + 2.0 * PI * k as f64 / m as f64;
        (c + r * angle.cos(), c + r * angle.sin())
    };
    let mut position = vec![0; m];
    for (k, &h) in cd.cyclic_order().iter().enumerate() {
        position[h] = k;
    }

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r##"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#888" stroke-width="1"/>"##
    );
    for chord in 0..cd.chord_count() {
        let (x1, y1) = point(position[2 * chord], RADIUS);
        let (x2, y2) = point(position[2 * chord + 1], RADIUS);
        let colour = if cd.is_live(chord) { "#c0392b" } else { "#222" };
        let dash = if cd.in_quasitree().contains(chord) { "" } else { r#" stroke-dasharray="6 4""# };
        let _ = writeln!(
            s,
            r#"  <line class="chord" data-chord="{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{colour}" stroke-width="2"{dash}/>"#,
            chord + 1
        );
    }
    for (k, &h) in cd.cyclic_order().iter().enumerate() {
        let (x, y) = point(k, RADIUS);
        let (lx, ly) = point(k, RADIUS + 16.0);
        let _ = writeln!(s, r#"  <circle class="mark" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        let _ = writeln!(
            s,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            h + 1
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgeset::EdgeSet;

    #[test]
    fn marks_and_chords() {
        let cd = ChordDiagram::from_cyclic_order(vec![0, 3, 7, 5, 6, 1, 4, 2], EdgeSet::from_edges([0, 2]));
        let svg = chord_diagram_svg(&cd, "Q<1>");
        assert_eq!(svg.matches(r#"class="mark""#).count(), 8);
        assert_eq!(svg.matches(r#"class="chord""#).count(), 4);
        assert_eq!(svg.matches("stroke-dasharray").count(), 2);
        assert!(svg.contains("Q&lt;1&gt;"));
        assert!(svg.contains(r##"data-chord="1" "##));
    }
}
