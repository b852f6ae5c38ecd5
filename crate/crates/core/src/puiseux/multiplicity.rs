use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPolynomial;
use super::scalar::PuiseuxScalar;
use crate::error::{Error, Result};

/// Order of vanishing of `F` at `(1, 1)`: the least total degree of a nonzero
/// term of `F(1 + u, 1 + v)`.
///
/// Negative exponents are first cleared by a monomial factor, which is a unit
/// at `(1, 1)`.
pub fn multiplicity_at_one(f: &LaurentPolynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.clear_denominators();
    let imax = g.terms().map(|(k, _)| k.0).max().unwrap() as usize;
    let jmax = g.terms().map(|(k, _)| k.1).max().unwrap() as usize;
    let binom = pascal(imax.max(jmax));
    for d in 0..=(imax + jmax) {
        for a in 0..=d.min(imax) {
            let b = d - a;
            if b > jmax {
                continue;
            }
            // coefficient of u^a v^b in Σ c_ij (1+u)^i (1+v)^j
            let mut acc = PuiseuxScalar::zero();
            for (&(i, j), c) in g.terms() {
                let (i, j) = (i as usize, j as usize);
                if i < a || j < b {
                    continue;
                }
                let k: BigInt = &binom[i][a] * &binom[j][b];
                acc = &acc + &c.scale_int(&k);
            }
            if !acc.is_zero() {
                return Ok(d as u32);
            }
        }
    }
    unreachable!("a nonzero polynomial has a nonzero Taylor coefficient")
}

/// Multiplicity of `F` at `(p1, p2)`, computed as the multiplicity at `(1, 1)`
/// of `F(p1 x, p2 y)`.
pub fn multiplicity_at(
    f: &LaurentPolynomial,
    p1: &PuiseuxScalar,
    p2: &PuiseuxScalar,
) -> Result<u32> {
    if p1.is_zero() || p2.is_zero() {
        return Err(Error::ZeroScalar);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.clear_denominators().scale_transform(p1, p2)?;
    multiplicity_at_one(&g)
}

fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::zero(); i + 1];
        row[0] = BigInt::one();
        row[i] = BigInt::one();
        for k in 1..i {
            row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::parse_polynomial;
    use crate::puiseux::scalar::PuiseuxScalar;
    use crate::rational::q;

    fn mu(s: &str) -> u32 {
        multiplicity_at_one(&parse_polynomial(s).unwrap()).unwrap()
    }

    #[test]
    fn simple_cases() {
        assert_eq!(mu("x + y"), 0);
        assert_eq!(mu("(x-1)^2*(y-1)"), 3);
        assert_eq!(mu("(1 - 3x*y + x*y^2 + x^2*y)^2"), 4);
        assert_eq!(mu("x^-1 - 1"), 1);
        assert!(multiplicity_at_one(&LaurentPolynomial::zero()).is_err());
    }

    #[test]
    fn at_other_points() {
        let f = parse_polynomial("(x - t)^2").unwrap();
        let t = PuiseuxScalar::t_pow(q(1));
        assert_eq!(multiplicity_at(&f, &t, &PuiseuxScalar::one()).unwrap(), 2);
        let g = parse_polynomial("x + y").unwrap();
        assert_eq!(multiplicity_at(&g, &t, &t).unwrap(), 0);
        assert!(multiplicity_at(&g, &PuiseuxScalar::zero(), &t).is_err());
        let h = parse_polynomial("x^-2 (x - 1 - t)^3 + y^-1").unwrap();
        let p = &PuiseuxScalar::one() + &t;
        assert_eq!(multiplicity_at(&h, &p, &PuiseuxScalar::one()).unwrap(), 0);
    }
}
