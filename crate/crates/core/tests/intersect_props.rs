mod common;

use common::*;
use proptest::prelude::*;
use tropigon::intersect::{
    enumerate_line_maps, local_stable_intersection, stable_intersection, stable_intersection_with,
    tropical_multiplicity_check, Perturbation, TropicalLine, STANDARD_RAYS,
};
use tropigon::lattice::{convex_hull, LatticePoint};
use tropigon::puiseux::UnimodularMap;
use tropigon::rational::{q, qf, Q};
use tropigon::tropical::LiftedSupport;

fn mixed_area_oracle(a: &LiftedSupport, b: &LiftedSupport) -> i64 {
    let (pa, pb) = (a.points(), b.points());
    let sum: Vec<LatticePoint> =
        pa.iter().flat_map(|x| pb.iter().map(move |y| LatticePoint::new(x.i + y.i, x.j + y.j))).collect();
    let area2 = |p: &[LatticePoint]| convex_hull(p).unwrap().area2();
    (area2(&sum) - area2(&pa) - area2(&pb)) / 2
}

fn multiset(v: &[tropigon::intersect::WeightedPoint]) -> Vec<((Q, Q), i64)> {
    let mut out: Vec<_> = v.iter().map(|w| (w.point.clone(), w.mult)).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bernstein(a in support(6, 7), b in support(6, 7)) {
        let total: i64 = stable_intersection(&curve(&a), &curve(&b)).iter().map(|p| p.mult).sum();
        prop_assert_eq!(total, mixed_area_oracle(&a, &b));
    }

    #[test]
    fn symmetric(a in support(4, 6), b in support(4, 6)) {
        let (ca, cb) = (curve(&a), curve(&b));
        prop_assert_eq!(multiset(&stable_intersection(&ca, &cb)), multiset(&stable_intersection(&cb, &ca)));
    }

    #[test]
    fn perturbation_independent(a in support(4, 6), b in support(4, 6), seed in any::<u64>()) {
        let (ca, cb) = (curve(&a), curve(&b));
        let v = Perturbation::from_seed(seed);
        prop_assert_eq!(stable_intersection(&ca, &cb), stable_intersection_with(&ca, &cb, &v));
    }

    #[test]
    fn translation_equivariant(a in support(4, 6), b in support(4, 6), dx in rational(6, 3), dy in rational(6, 3)) {
        let (ca, cb) = (curve(&a), curve(&b));
        let moved = curve(&b.translated((&dx, &dy)));
        let expect: Vec<_> = multiset(&stable_intersection(&ca, &cb))
            .into_iter()
            .map(|((x, y), m)| ((x + &dx, y + &dy), m))
            .collect();
        let ca2 = curve(&a.translated((&dx, &dy)));
        prop_assert_eq!(expect, multiset(&stable_intersection(&ca2, &moved)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Violations reported by the critical-position sampling are genuine, and
    /// dense sampling of vertex positions finds nothing it misses.
    #[test]
    fn line_check_is_consistent_with_dense_sampling(ls in support(4, 6), pick in any::<prop::sample::Index>(), m in 1i64..=4) {
        let c = curve(&ls);
        let mut candidates: Vec<(Q, Q)> = c.vertices.iter().map(|v| v.point.clone()).collect();
        for e in &c.edges {
            let (a, b) = (&c.vertices[e.from].point, &c.vertices[e.to].point);
            candidates.push(((&a.0 + &b.0) / q(2), (&a.1 + &b.1) / q(2)));
        }
        let p = pick.get(&candidates).clone();
        let report = tropical_multiplicity_check(&c, (&p.0, &p.1), m, 1);
        for v in report.violations.iter().take(5) {
            let map = UnimodularMap::new(v.map[0][0], v.map[0][1], v.map[1][0], v.map[1][1]).unwrap();
            let line = TropicalLine::new(v.vertex.clone(), map).curve();
            prop_assert_eq!(local_stable_intersection(&line, &c, (&p.0, &p.1)), v.local_intersection);
            prop_assert!(v.local_intersection < m);
        }
        let mut dense_violation = false;
        'outer: for map in enumerate_line_maps(1) {
            for r in STANDARD_RAYS.map(|r| map.apply(r)) {
                for k in 0..=60 {
                    let s = qf(k, 4);
                    let vertex = (&p.0 - &s * q(r.0), &p.1 - &s * q(r.1));
                    let line = TropicalLine::new(vertex, map).curve();
                    if local_stable_intersection(&line, &c, (&p.0, &p.1)) < m {
                        dense_violation = true;
                        break 'outer;
                    }
                }
            }
        }
        if dense_violation {
            prop_assert!(!report.pass);
        }
    }
}
