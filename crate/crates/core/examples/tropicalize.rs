//! Regular subdivision of the Newton polygon and the dual tropical curve.
//!
//! cargo run --example tropicalize

use tropigon::puiseux::parse_polynomial;
use tropigon::rational::fmt_q;
use tropigon::samples::TRIPLE_POINT;
use tropigon::tropical::{classify_point, dual_curve, lift_and_subdivide, LiftedSupport};
use tropigon::Q;

fn main() -> tropigon::Result<()> {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    for (p, h) in ls.heights() {
        println!("height of {p}: {}", fmt_q(h));
    }
    let sub = lift_and_subdivide(&ls);
    let curve = dual_curve(&sub)?;
    for (k, cell) in sub.cells.iter().enumerate() {
        let (x, y) = cell.dual_vertex();
        println!("cell {k}, area {}, dual vertex ({}, {})", fmt_q(&cell.polygon.area()), fmt_q(&x), fmt_q(&y));
    }
    for e in &curve.edges {
        println!("edge {} -> {} weight {}", e.from, e.to, e.weight);
    }
    println!("balanced: {}", curve.is_balanced());
    let origin = (Q::from_integer(0.into()), Q::from_integer(0.into()));
    println!("(0, 0) is {:?}", classify_point(&ls, (&origin.0, &origin.1)));
    println!("{}", serde_json::to_string(&curve.rays)?);
    Ok(())
}
