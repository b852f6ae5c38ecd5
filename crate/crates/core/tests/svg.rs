use tropigon::cli::render_svg;
use tropigon::puiseux::parse_polynomial;
use tropigon::rational::q;
use tropigon::samples::{SHARP_TRIANGLE, THIN_RECTANGLE, TRIPLE_POINT};
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport};

fn count(doc: &roxmltree::Document, tag: &str) -> usize {
    doc.descendants().filter(|n| n.has_tag_name(tag)).count()
}

#[test]
fn one_element_per_cell_and_piece() {
    for text in [TRIPLE_POINT, SHARP_TRIANGLE, THIN_RECTANGLE, "x + y + 1", "x^3 + t y^2 + t^-1 x y + 1 + t^2 x^2 y^2"] {
        let ls = LiftedSupport::from_polynomial(&parse_polynomial(text).unwrap()).unwrap();
        let sub = lift_and_subdivide(&ls);
        let c = dual_curve(&sub).unwrap();
        let svg = render_svg(&sub, Some(&c), Some(&(q(0), q(0))));
        let doc = roxmltree::Document::parse(&svg).unwrap();
        assert_eq!(doc.root_element().tag_name().name(), "svg");
        assert_eq!(count(&doc, "polygon"), sub.cells.len(), "{text}");
        assert_eq!(count(&doc, "path"), c.edges.len() + c.rays.len(), "{text}");
        let heavy = c.edges.iter().filter(|e| e.weight > 1).count() + c.rays.iter().filter(|r| r.weight > 1).count();
        assert_eq!(count(&doc, "text"), heavy, "{text}");
    }
}

#[test]
fn rays_stay_in_the_box() {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT).unwrap()).unwrap();
    let sub = lift_and_subdivide(&ls);
    let c = dual_curve(&sub).unwrap();
    let svg = render_svg(&sub, Some(&c), None);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let rect = doc.descendants().find(|n| n.has_tag_name("rect")).unwrap();
    let f = |n: &roxmltree::Node, a: &str| n.attribute(a).unwrap().parse::<f64>().unwrap();
    let (x0, y0) = (f(&rect, "x"), f(&rect, "y"));
    let (x1, y1) = (x0 + f(&rect, "width"), y0 + f(&rect, "height"));
    // vertices span 6 units, so the box is 9 units of 40 px
    assert!((f(&rect, "width") - 360.0).abs() < 1e-9);
    for p in doc.descendants().filter(|n| n.has_tag_name("path")) {
        let nums: Vec<f64> = p
            .attribute("d")
            .unwrap()
            .split_whitespace()
            .filter_map(|t| t.parse().ok())
            .collect();
        for xy in nums.chunks(2) {
            assert!(xy[0] >= x0 - 1e-6 && xy[0] <= x1 + 1e-6 && xy[1] >= y0 - 1e-6 && xy[1] <= y1 + 1e-6);
        }
    }
}

#[test]
fn degenerate_support_renders() {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial("x + x^2 + t").unwrap()).unwrap();
    let sub = lift_and_subdivide(&ls);
    let svg = render_svg(&sub, None, None);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(count(&doc, "polygon"), 0);
    assert_eq!(count(&doc, "path"), 0);
}
