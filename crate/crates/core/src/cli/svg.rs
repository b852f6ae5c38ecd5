use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::rational::Q;
use crate::tropical::{RegularSubdivision, TropicalCurve};

/// Pixels per lattice unit.
pub const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;
const GAP: f64 = 60.0;

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

struct Frame {
    x0: f64,
    y1: f64,
    left: f64,
}

impl Frame {
    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (self.left + (x - self.x0) * UNIT, MARGIN + (self.y1 - y) * UNIT)
    }
}

/// Subdivided Newton polygon on the left, tropical curve on the right.
///
/// Each cell is one `<polygon>`, each bounded edge or ray one `<path>`.
/// Rays stop at a box 1.5 times the spread of the curve's vertices; weights
/// above one are written next to their edge.
pub fn render_svg(sub: &RegularSubdivision, curve: Option<&TropicalCurve>, mark: Option<&(Q, Q)>) -> String {
    let pts = sub.support.points();
    let (imin, imax) = (pts.iter().map(|p| p.i).min().unwrap(), pts.iter().map(|p| p.i).max().unwrap());
    let (jmin, jmax) = (pts.iter().map(|p| p.j).min().unwrap(), pts.iter().map(|p| p.j).max().unwrap());
    let left = Frame { x0: imin as f64, y1: jmax as f64, left: MARGIN };
    let newton_w = (imax - imin) as f64 * UNIT;
    let newton_h = (jmax - jmin) as f64 * UNIT;

    let mut body = String::new();
    let _ = writeln!(body, "<g class=\"subdivision\">");
    for c in &sub.cells {
        let coords: Vec<String> = c
            .polygon
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = left.px(v.i as f64, v.j as f64);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            body,
            "<polygon points=\"{}\" fill=\"#dde8f4\" stroke=\"#1f3b5c\" stroke-width=\"1.5\"/>",
            coords.join(" ")
        );
    }
    if sub.is_degenerate() && sub.newton.vertices().len() == 2 {
        let (a, b) = (sub.newton.vertices()[0], sub.newton.vertices()[1]);
        let (x1, y1) = left.px(a.i as f64, a.j as f64);
        let (x2, y2) = left.px(b.i as f64, b.j as f64);
        let _ = writeln!(
            body,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#1f3b5c\" stroke-width=\"1.5\"/>"
        );
    }
    for p in &pts {
        let (x, y) = left.px(p.i as f64, p.j as f64);
        let _ = writeln!(body, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#1f3b5c\"/>");
    }
    let _ = writeln!(body, "</g>");

    let mut width = 2.0 * MARGIN + newton_w;
    let mut height = 2.0 * MARGIN + newton_h;
    if let Some(curve) = curve {
        let vs: Vec<(f64, f64)> = curve.vertices.iter().map(|v| (f(&v.point.0), f(&v.point.1))).collect();
        let fold = |g: fn(f64, f64) -> f64, sel: fn(&(f64, f64)) -> f64, init: f64| vs.iter().map(sel).fold(init, g);
        let (xmin, xmax) = (fold(f64::min, |p| p.0, f64::INFINITY), fold(f64::max, |p| p.0, f64::NEG_INFINITY));
        let (ymin, ymax) = (fold(f64::min, |p| p.1, f64::INFINITY), fold(f64::max, |p| p.1, f64::NEG_INFINITY));
        let spread = (xmax - xmin).max(ymax - ymin).max(1.0);
        let half = 0.75 * spread;
        let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
        let (bx0, bx1, by0, by1) = (cx - half, cx + half, cy - half, cy + half);
        let right = Frame { x0: bx0, y1: by1, left: MARGIN + newton_w + GAP };
        let _ = writeln!(body, "<g class=\"curve\">");
        let _ = writeln!(
            body,
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"#cccccc\"/>",
            right.left,
            MARGIN,
            2.0 * half * UNIT,
            2.0 * half * UNIT
        );
        let mut segment = |a: (f64, f64), b: (f64, f64), weight: i64, class: &str| {
            let (x1, y1) = right.px(a.0, a.1);
            let (x2, y2) = right.px(b.0, b.1);
            let _ = writeln!(
                body,
                "<path class=\"{class}\" d=\"M {x1:.2} {y1:.2} L {x2:.2} {y2:.2}\" stroke=\"#b03a2e\" stroke-width=\"{}\" fill=\"none\"/>",
                1.5 + 0.75 * (weight - 1) as f64
            );
            if weight > 1 {
                let _ = writeln!(
                    body,
                    "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" fill=\"#b03a2e\">{weight}</text>",
                    (x1 + x2) / 2.0 + 5.0,
                    (y1 + y2) / 2.0 - 5.0
                );
            }
        };
        for e in &curve.edges {
            segment(vs[e.from], vs[e.to], e.weight, "edge");
        }
        for r in &curve.rays {
            let v = vs[r.from];
            let d = (r.direction.0 as f64, r.direction.1 as f64);
            let mut t = f64::INFINITY;
            if d.0 > 0.0 {
                t = t.min((bx1 - v.0) / d.0);
            } else if d.0 < 0.0 {
                t = t.min((bx0 - v.0) / d.0);
            }
            if d.1 > 0.0 {
                t = t.min((by1 - v.1) / d.1);
            } else if d.1 < 0.0 {
                t = t.min((by0 - v.1) / d.1);
            }
            segment(v, (v.0 + t * d.0, v.1 + t * d.1), r.weight, "ray");
        }
        for v in &vs {
            let (x, y) = right.px(v.0, v.1);
            let _ = writeln!(body, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#b03a2e\"/>");
        }
        if let Some(p) = mark {
            let (x, y) = right.px(f(&p.0), f(&p.1));
            let _ = writeln!(
                body,
                "<circle class=\"point\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"5\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>"
            );
        }
        let _ = writeln!(body, "</g>");
        width += GAP + 2.0 * half * UNIT;
        height = height.max(2.0 * MARGIN + 2.0 * half * UNIT);
    }
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.2} {height:.2}\">\n{body}</svg>\n"
    )
}
