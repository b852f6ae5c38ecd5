mod common;

use common::*;
use proptest::prelude::*;
use tropigon::lattice::{
    boundary_count, convex_hull, is_m_thick, lattice_points_in, minimal_lattice_width, width_in_direction, LatticePoint,
    PrimitiveDirection,
};
use tropigon::puiseux::UnimodularMap;

fn apply(m: &UnimodularMap, pts: &[LatticePoint], shift: (i64, i64)) -> Vec<LatticePoint> {
    pts.iter()
        .map(|p| {
            let (i, j) = m.apply((p.i, p.j));
            LatticePoint::new(i + shift.0, j + shift.1)
        })
        .collect()
}

fn brute_width(pts: &[LatticePoint], b: i64) -> i64 {
    let mut best = i64::MAX;
    for u1 in -b..=b {
        for u2 in -b..=b {
            if num_integer::gcd(u1, u2) == 1 {
                best = best.min(width_in_direction(pts, PrimitiveDirection::new(u1, u2).unwrap()).unwrap());
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn width_matches_box_search(pts in points(8, 8)) {
        let (w, u) = minimal_lattice_width(&pts).unwrap();
        prop_assert_eq!(width_in_direction(&pts, u).unwrap(), w);
        // coordinates ≤ 8: any direction with |u|∞ > 16 is wider than the axes
        prop_assert_eq!(w, brute_width(&pts, 17));
    }

    #[test]
    fn width_is_unimodular_invariant(pts in points(6, 6), m in unimodular(), u1 in -3i64..=3, u2 in -3i64..=3) {
        prop_assume!(num_integer::gcd(u1, u2) == 1);
        let u = PrimitiveDirection::new(u1, u2).unwrap();
        let moved = apply(&m, &pts, (0, 0));
        // ω_{u}(B) = ω_{M⁻ᵀu}(MB)
        let mu = m.dual().apply((u1, u2));
        let mu = PrimitiveDirection::new(mu.0, mu.1).unwrap();
        prop_assert_eq!(width_in_direction(&pts, u).unwrap(), width_in_direction(&moved, mu).unwrap());
        prop_assert_eq!(minimal_lattice_width(&pts).unwrap().0, minimal_lattice_width(&moved).unwrap().0);
    }

    #[test]
    fn thickness_is_invariant(pts in points(6, 8), m in unimodular(), dx in -5i64..=5, dy in -5i64..=5, k in 1i64..=5) {
        let moved = apply(&m, &pts, (dx, dy));
        prop_assert_eq!(is_m_thick(&pts, k).thick, is_m_thick(&moved, k).thick);
    }

    #[test]
    fn thick_without_parallel_sides_is_wide(pts in points(7, 8), k in 1i64..=5) {
        let hull = convex_hull(&pts).unwrap();
        prop_assume!(hull.dimension() == 2);
        let sides = hull.sides();
        let parallel = sides.iter().enumerate().any(|(x, (a, b))| {
            sides[x + 1..].iter().any(|(c, d)| {
                let (e, f) = (b.sub(*a), d.sub(*c));
                e.0 * f.1 == e.1 * f.0
            })
        });
        prop_assume!(!parallel && is_m_thick(&pts, k).thick);
        prop_assert!(minimal_lattice_width(&pts).unwrap().0 >= k);
    }

    #[test]
    fn pick(pts in points(9, 8)) {
        let hull = convex_hull(&pts).unwrap();
        prop_assume!(hull.dimension() == 2);
        let all = lattice_points_in(&hull).len() as i64;
        let b = boundary_count(&hull);
        let interior = all - b;
        prop_assert_eq!(hull.area2(), 2 * interior + b - 2);
    }
}
