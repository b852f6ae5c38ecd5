//! Stable intersection of tropical curves and local intersection numbers.
//!
//! cargo run --example stable_intersection

use tropigon::intersect::{local_stable_intersection, mixed_area, stable_intersection, TropicalLine};
use tropigon::puiseux::{parse_polynomial, UnimodularMap};
use tropigon::rational::{fmt_q, q};
use tropigon::samples::TRIPLE_POINT;
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport};

fn main() -> tropigon::Result<()> {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    let c = dual_curve(&lift_and_subdivide(&ls))?;

    let lines = [
        TropicalLine::standard((q(6), q(0))),
        TropicalLine::standard((q(0), q(-2))),
        TropicalLine::new((q(0), q(0)), UnimodularMap::new(1, 1, 0, 1)?),
    ];
    for line in &lines {
        let l = line.curve();
        let pts = stable_intersection(&l, &c);
        println!("line at ({}, {}) with rays {:?}", fmt_q(&line.vertex.0), fmt_q(&line.vertex.1), line.rays());
        for p in &pts {
            println!("  {p}");
        }
        let total: i64 = pts.iter().map(|p| p.mult).sum();
        println!("  total {total}, mixed area {}", mixed_area(&l, &c));
        println!("  local at (0, 0): {}", local_stable_intersection(&l, &c, (&q(0), &q(0))));
    }
    Ok(())
}
