//! Side-by-side SVG of the subdivided Newton polygon and the tropical curve.
//!
//! cargo run --example render -- out.svg

use tropigon::cli::render_svg;
use tropigon::puiseux::parse_polynomial;
use tropigon::rational::q;
use tropigon::samples::TRIPLE_POINT;
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport};

fn main() -> tropigon::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "triple_point.svg".into());
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    let sub = lift_and_subdivide(&ls);
    let curve = dual_curve(&sub)?;
    std::fs::write(&path, render_svg(&sub, Some(&curve), Some(&(q(0), q(0)))))?;
    println!("wrote {path}");
    Ok(())
}
