//! Parse polynomials over Puiseux series and compute the multiplicity of a
//! singular point.
//!
//! cargo run --example multiplicity

use tropigon::puiseux::{multiplicity_at, multiplicity_at_one, parse_polynomial, parse_scalar};
use tropigon::samples::TRIPLE_POINT;

fn main() -> tropigon::Result<()> {
    let f = parse_polynomial(TRIPLE_POINT)?;
    println!("F = {f}");
    println!("multiplicity at (1, 1): {}", multiplicity_at_one(&f)?);

    // A node moved to (t, 1 + t): substitute and measure there.
    let g = parse_polynomial("(x - t)^2 - (y - 1 - t)^2 + (x - t)^3")?;
    let (p1, p2) = (parse_scalar("t")?, parse_scalar("1 + t")?);
    println!("G = {g}");
    println!("multiplicity at ({p1}, {p2}): {}", multiplicity_at(&g, &p1, &p2)?);
    println!("multiplicity at (1, 1): {}", multiplicity_at_one(&g)?);
    Ok(())
}
