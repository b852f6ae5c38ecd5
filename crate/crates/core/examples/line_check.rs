//! Enumerating tropical lines through a point under bounded unimodular maps.
//!
//! cargo run --example line_check

use tropigon::intersect::tropical_multiplicity_check;
use tropigon::puiseux::parse_polynomial;
use tropigon::rational::q;
use tropigon::samples::TRIPLE_POINT;
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport};

fn main() -> tropigon::Result<()> {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    let c = dual_curve(&lift_and_subdivide(&ls))?;
    for m in [3, 4] {
        let r = tropical_multiplicity_check(&c, (&q(0), &q(0)), m, 3);
        println!(
            "m = {m}: pass {} after {} line shapes and {} positions",
            r.pass, r.maps_checked, r.lines_checked
        );
        if let Some(v) = r.violations.first() {
            println!("  witness {}", serde_json::to_string(v)?);
        }
    }
    Ok(())
}
