use rand::Rng;

use crate::puiseux::{LaurentPolynomial, PuiseuxScalar};
use crate::rational::{q, qf};

/// Shape of the random curves produced by [`random_singular_curve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub m: u32,
    /// Total degree bound for each cofactor `f_k`.
    pub cofactor_degree: i64,
    pub max_cofactor_terms: usize,
    /// Exponents of `t` are drawn from `[-range, range]` in steps of ½.
    pub exponent_range: i64,
    pub coefficient_range: i64,
}

impl GeneratorConfig {
    pub fn new(m: u32) -> Self {
        Self { m, cofactor_degree: 2, max_cofactor_terms: 3, exponent_range: 3, coefficient_range: 3 }
    }
}

fn nonzero_int<R: Rng>(rng: &mut R, range: i64) -> i64 {
    let v = rng.gen_range(1..=range);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// A nonzero Puiseux scalar with one or two terms.
pub fn random_scalar<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> PuiseuxScalar {
    loop {
        let n = rng.gen_range(1..=2);
        let s = PuiseuxScalar::from_terms((0..n).map(|_| {
            let e = rng.gen_range(-2 * cfg.exponent_range..=2 * cfg.exponent_range);
            (qf(e, 2), q(nonzero_int(rng, cfg.coefficient_range)))
        }));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A nonzero polynomial with non-negative exponents.
pub fn random_cofactor<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> LaurentPolynomial {
    loop {
        let n = rng.gen_range(1..=cfg.max_cofactor_terms);
        let f = LaurentPolynomial::from_terms((0..n).map(|_| {
            let i = rng.gen_range(0..=cfg.cofactor_degree);
            let j = rng.gen_range(0..=cfg.cofactor_degree - i);
            ((i, j), random_scalar(rng, cfg))
        }));
        if !f.is_zero() {
            return f;
        }
    }
}

/// `Σ_{k=0..m} f_k (x−1)^{m−k} (y−1)^k` with random cofactors; it lies in
/// the `m`-th power of the ideal of `(1, 1)`, so its multiplicity there is at
/// least `m`.
pub fn random_singular_curve<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> LaurentPolynomial {
    let one = LaurentPolynomial::one();
    let xm = &LaurentPolynomial::x() - &one;
    let ym = &LaurentPolynomial::y() - &one;
    loop {
        let mut f = LaurentPolynomial::zero();
        for k in 0..=cfg.m {
            let basis = &xm.pow(cfg.m - k) * &ym.pow(k);
            f = &f + &(&random_cofactor(rng, cfg) * &basis);
        }
        if !f.is_zero() {
            return f;
        }
    }
}
