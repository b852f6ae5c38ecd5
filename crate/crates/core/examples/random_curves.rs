//! Random curves with a point of prescribed multiplicity at (1, 1), checked
//! against the necessary conditions at the origin.
//!
//! cargo run --example random_curves -- 7

use rand::SeedableRng;
use tropigon::puiseux::multiplicity_at_one;
use tropigon::rational::q;
use tropigon::singular::{exertion_certificate, random_singular_curve, GeneratorConfig};

fn main() -> tropigon::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for m in 2..=4 {
        let f = random_singular_curve(&mut rng, &GeneratorConfig::new(m));
        let cert = exertion_certificate(&f, (&q(0), &q(0)), m as i64)?;
        println!("m = {m}, multiplicity {}, {} terms: {}", multiplicity_at_one(&f)?, f.len(), cert.verdict);
    }
    Ok(())
}
