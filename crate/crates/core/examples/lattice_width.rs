//! Lattice width, m-thickness and the width–area inequality.
//!
//! cargo run --example lattice_width

use tropigon::lattice::{convex_hull, defect_functional, is_m_thick, minimal_lattice_width, width_area_check, LatticePoint};

fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
    v.iter().map(|&(i, j)| LatticePoint::new(i, j)).collect()
}

fn main() -> tropigon::Result<()> {
    let triangle = pts(&[(0, 0), (2, 4), (4, 2)]);
    let (w, u) = minimal_lattice_width(&triangle)?;
    println!("triangle: width {w} in direction {u}");
    let hull = convex_hull(&triangle)?;
    let wa = width_area_check(&hull)?;
    println!("area {} against bound {} (tight: {})", wa.area, wa.bound, wa.tight);
    let d = defect_functional(&hull, 4)?;
    println!("defect functionals {} and {}", d.f1, d.f2);

    for m in 1..=4 {
        let rect = pts(&[(0, 0), (1, 0), (0, 2), (1, 2)]);
        println!("1x2 rectangle {m}-thick: {}", is_m_thick(&rect, m).thick);
    }
    Ok(())
}
