mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use tropigon::puiseux::{multiplicity_at_one, parse_polynomial, LaurentPolynomial, Valuation};
use tropigon::rational::Q;

/// Order of vanishing at (1, 1) from mixed partial derivatives:
/// `∂_x^a ∂_y^b x^i y^j` at (1, 1) is `i(i-1)…(i-a+1) · j(j-1)…(j-b+1)`.
fn derivative_order(f: &LaurentPolynomial) -> u32 {
    let falling = |n: i64, k: i64| -> Q { (0..k).map(|r| Q::from_integer((n - r).into())).product() };
    for k in 0.. {
        for a in 0..=k {
            let b = k - a;
            let mut total = tropigon::puiseux::PuiseuxScalar::zero();
            for (&(i, j), c) in f.terms() {
                let w = falling(i, a) * falling(j, b);
                if !w.is_zero() {
                    total = &total + &(c * &tropigon::puiseux::PuiseuxScalar::constant(w));
                }
            }
            if !total.is_zero() {
                return k as u32;
            }
        }
    }
    unreachable!()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuation_axioms(a in scalar(), b in scalar()) {
        let (va, vb) = (a.valuation(), b.valuation());
        let prod = (&a * &b).valuation();
        let (Valuation::Finite(x), Valuation::Finite(y)) = (&va, &vb) else { unreachable!() };
        prop_assert_eq!(prod, Valuation::Finite(x + y));
        let sum = (&a + &b).valuation();
        prop_assert!(sum <= va.clone().max(vb.clone()));
        if va != vb {
            prop_assert_eq!(sum, va.max(vb));
        }
    }

    #[test]
    fn multiplicity_is_additive(f in polynomial(3, 4), h in polynomial(3, 4)) {
        let one = LaurentPolynomial::one();
        let xm = &LaurentPolynomial::x() - &one;
        // bias towards singular factors
        let f = &f * &xm;
        let fh = &f * &h;
        let (mf, mh, mfh) = (multiplicity_at_one(&f).unwrap(), multiplicity_at_one(&h).unwrap(), multiplicity_at_one(&fh).unwrap());
        prop_assert_eq!(mfh, mf + mh);
        prop_assert_eq!(mf, derivative_order(&f));
        prop_assert_eq!(mfh, derivative_order(&fh));
    }

    #[test]
    fn monomial_transforms_compose(f in polynomial(3, 5), m in unimodular(), n in unimodular()) {
        let lhs = f.monomial_transform(&m).monomial_transform(&n);
        let rhs = f.monomial_transform(&n.compose(&m));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_roundtrip(f in polynomial(4, 6)) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text).unwrap(), f);
    }
}
