//! Sublevel supports of a curve with a singular point and their thickness.
//!
//! cargo run --example thickness_sweep

use tropigon::puiseux::parse_polynomial;
use tropigon::samples::TRIPLE_POINT;
use tropigon::singular::{sublevel_family, thickness_sweep};
use tropigon::tropical::LiftedSupport;

fn main() -> tropigon::Result<()> {
    let ls = LiftedSupport::from_polynomial(&parse_polynomial(TRIPLE_POINT)?)?;
    for level in sublevel_family(&ls).levels {
        let pts: Vec<String> = level.support.iter().map(|p| p.to_string()).collect();
        println!("mu = {}: {}", level.mu, pts.join(" "));
    }
    for m in 3..=4 {
        let r = thickness_sweep(&ls, m);
        println!("m = {m}: pass {} ({} levels)", r.pass, r.levels_checked);
        for f in &r.failures {
            println!("  fails at mu = {} direction {:?}", f.mu, f.witness);
        }
    }
    Ok(())
}
