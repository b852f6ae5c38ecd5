//! Unimodular monomial changes and torus scalings act on the subdivision
//! and the curve without changing the singularity.
//!
//! cargo run --example transforms

use tropigon::puiseux::{multiplicity_at, multiplicity_at_one, parse_polynomial, PuiseuxScalar, UnimodularMap};
use tropigon::rational::{fmt_q, q, qf};
use tropigon::samples::TRIPLE_POINT;
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport};

fn vertices(f: &tropigon::puiseux::LaurentPolynomial) -> tropigon::Result<Vec<String>> {
    let c = dual_curve(&lift_and_subdivide(&LiftedSupport::from_polynomial(f)?))?;
    Ok(c.vertices.iter().map(|v| format!("({}, {})", fmt_q(&v.point.0), fmt_q(&v.point.1))).collect())
}

fn main() -> tropigon::Result<()> {
    let f = parse_polynomial(TRIPLE_POINT)?;
    println!("original: {:?}, multiplicity {}", vertices(&f)?, multiplicity_at_one(&f)?);

    let m = UnimodularMap::new(2, 1, 1, 1)?;
    let g = f.monomial_transform(&m);
    println!("exponents moved by {m:?}: {:?}, multiplicity {}", vertices(&g)?, multiplicity_at_one(&g)?);
    let p = m.dual().apply_q((&q(0), &q(0)));
    println!("the origin maps to ({}, {})", fmt_q(&p.0), fmt_q(&p.1));

    let (r, s) = (PuiseuxScalar::t_pow(qf(1, 2)), PuiseuxScalar::t_pow(q(-1)));
    let h = f.scale_transform(&r, &s)?;
    println!(
        "scaled by (t^1/2, t^-1): {:?}, multiplicity at ({}, {}) {}",
        vertices(&h)?,
        r.inverse()?,
        s.inverse()?,
        multiplicity_at(&h, &r.inverse()?, &s.inverse()?)?
    );
    Ok(())
}
