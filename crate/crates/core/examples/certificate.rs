//! Necessary conditions for a tropical point of multiplicity m, collected
//! into a certificate.
//!
//! cargo run --example certificate

use tropigon::puiseux::parse_polynomial;
use tropigon::rational::q;
use tropigon::samples::{SHARP_TRIANGLE, THIN_RECTANGLE, TRIPLE_POINT};
use tropigon::singular::exertion_certificate;

fn main() -> tropigon::Result<()> {
    let cases = [(TRIPLE_POINT, 3), (TRIPLE_POINT, 4), (SHARP_TRIANGLE, 4), (THIN_RECTANGLE, 3)];
    for (text, m) in cases {
        let f = parse_polynomial(text)?;
        let cert = exertion_certificate(&f, (&q(0), &q(0)), m)?;
        println!("m = {m}: {}", cert.verdict);
        for c in &cert.checks {
            println!("  {:<26} {:<14} {:?} {:?}", c.name, c.status.to_string(), c.value, c.witness);
        }
    }
    let f = parse_polynomial(TRIPLE_POINT)?;
    let cert = exertion_certificate(&f, (&q(0), &q(0)), 3)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(())
}
