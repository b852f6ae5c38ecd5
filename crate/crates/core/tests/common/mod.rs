#![allow(dead_code)]

use proptest::prelude::*;
use tropigon::lattice::LatticePoint;
use tropigon::puiseux::{LaurentPolynomial, PuiseuxScalar, UnimodularMap};
use tropigon::rational::{q, qf, Q};
use tropigon::tropical::{dual_curve, lift_and_subdivide, LiftedSupport, TropicalCurve};

pub fn rational(num: i64, den: i64) -> impl Strategy<Value = Q> {
    (-num..=num, 1..=den).prop_map(|(n, d)| qf(n, d))
}

pub fn scalar() -> impl Strategy<Value = PuiseuxScalar> {
    prop::collection::vec((rational(8, 3), (-5i64..=5).prop_filter("nonzero", |c| *c != 0)), 1..=3)
        .prop_map(|ts| PuiseuxScalar::from_terms(ts.into_iter().map(|(e, c)| (e, q(c)))))
        .prop_filter("nonzero", |s| !s.is_zero())
}

pub fn polynomial(max_deg: i64, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), scalar()), 1..=max_terms)
        .prop_map(LaurentPolynomial::from_terms)
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn points(coord: i64, max: usize) -> impl Strategy<Value = Vec<LatticePoint>> {
    prop::collection::vec((0..=coord, 0..=coord).prop_map(|(i, j)| LatticePoint::new(i, j)), 1..=max)
}

pub fn unimodular() -> impl Strategy<Value = UnimodularMap> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter_map("det 1", |(a, b, c, d)| UnimodularMap::new(a, b, c, d).ok())
}

/// A lifted support with a 2-dimensional Newton polygon.
pub fn support(coord: i64, max: usize) -> impl Strategy<Value = LiftedSupport> {
    prop::collection::vec(((0..=coord, 0..=coord), rational(12, 3)), 3..=max)
        .prop_filter_map("2-dimensional", |pairs| {
            let ls = LiftedSupport::from_pairs(pairs).ok()?;
            (ls.newton_polygon().dimension() == 2).then_some(ls)
        })
}

pub fn curve(ls: &LiftedSupport) -> TropicalCurve {
    dual_curve(&lift_and_subdivide(ls)).unwrap()
}
