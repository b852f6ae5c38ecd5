//! Long edges through a point, the height profile g over a direction and
//! the superlevel-length function built from it.
//!
//! cargo run --example profiles

use tropigon::lattice::PrimitiveDirection;
use tropigon::puiseux::parse_polynomial;
use tropigon::rational::{fmt_q, q};
use tropigon::samples::TRIPLE_POINT;
use tropigon::singular::{complementary_pairs_check, g_hat_condition, LocalPicture};
use tropigon::tropical::{g_hat, g_hat_integral, LiftedSupport};

fn main() -> tropigon::Result<()> {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    let pic = LocalPicture::new(&ls, (&q(0), &q(0)));
    let curve = pic.curve.as_ref().unwrap();
    for le in &pic.long_edges {
        println!(
            "long edge {} with {} pieces, infinite left {}, right {}",
            le.direction,
            le.pieces.len(),
            le.infinite_left(curve),
            le.infinite_right(curve)
        );
    }
    let u = PrimitiveDirection::E1;
    let report = g_hat_condition(&ls, (&q(0), &q(0)), u, 3)?;
    for e in &report.entries {
        println!("x = {}: weight {} + g_hat {} (pass {})", e.x, e.weight, fmt_q(&e.g_hat), e.pass);
    }
    println!("span {} (pass {})", report.span, report.span_pass);

    let g = tropigon::tropical::g_profile(&ls, &tropigon::puiseux::UnimodularMap::with_first_row(u.as_pair())?);
    println!("g breakpoints {}", serde_json::to_string(&g)?);
    for x in 0..=3 {
        println!("g_hat({x}) = {}", fmt_q(&g_hat(&g, &q(x))?));
    }
    println!("integral of g_hat: {}", fmt_q(&g_hat_integral(&g)));

    for pair in complementary_pairs_check(curve, (&q(0), &q(0)), 3) {
        println!("{:?} / {:?}: distance {} weight {}", pair.first, pair.second, pair.distance, pair.max_weight);
    }
    Ok(())
}
