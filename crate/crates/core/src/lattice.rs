//! Exact lattice geometry: convex hulls, lattice widths, m-thickness,
//! defects and the width/area inequalities.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{qf, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    pub const fn new(i: i64, j: i64) -> Self {
        Self { i, j }
    }

    pub fn sub(self, o: Self) -> (i64, i64) {
        (self.i - o.i, self.j - o.j)
    }

    pub fn dot(self, u: (i64, i64)) -> i64 {
        self.i * u.0 + self.j * u.1
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([i, j]: [i64; 2]) -> Self {
        Self { i, j }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.i, p.j]
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((i, j): (i64, i64)) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

pub(crate) fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Orientation of `c` relative to the directed line `a → b`.
pub(crate) fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    cross(b.sub(a), c.sub(a))
}

/// A primitive integer vector with canonical sign (`u1 > 0`, or `u1 = 0` and
/// `u2 > 0`).
///
/// The ordering prefers short vectors (by `|u1| + |u2|`), then larger `u1`,
/// then larger `u2`; it is used to break ties between width-attaining
/// directions, so `(1,0)` comes before `(0,1)` and `(1,-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct PrimitiveDirection {
    u1: i64,
    u2: i64,
}

impl PrimitiveDirection {
    pub const E1: PrimitiveDirection = PrimitiveDirection { u1: 1, u2: 0 };
    pub const E2: PrimitiveDirection = PrimitiveDirection { u1: 0, u2: 1 };

    /// Normalises any nonzero vector: divides by the gcd and fixes the sign.
    pub fn new(u1: i64, u2: i64) -> Result<Self> {
        if u1 == 0 && u2 == 0 {
            return Err(Error::Degenerate("zero direction".into()));
        }
        let g = u1.gcd(&u2);
        let (mut a, mut b) = (u1 / g, u2 / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        Ok(Self { u1: a, u2: b })
    }

    pub fn u1(&self) -> i64 {
        self.u1
    }

    pub fn u2(&self) -> i64 {
        self.u2
    }

    pub fn as_pair(&self) -> (i64, i64) {
        (self.u1, self.u2)
    }

    /// The canonical direction orthogonal to this one.
    pub fn orthogonal(&self) -> Self {
        Self::new(-self.u2, self.u1).unwrap()
    }

    fn key(&self) -> (i64, i64, i64) {
        (self.u1.abs() + self.u2.abs(), -self.u1, -self.u2)
    }
}

impl TryFrom<[i64; 2]> for PrimitiveDirection {
    type Error = String;
    fn try_from([a, b]: [i64; 2]) -> std::result::Result<Self, String> {
        let d = Self::new(a, b).map_err(|e| e.to_string())?;
        if d.as_pair() != (a, b) {
            return Err(format!("({a},{b}) is not a canonical primitive direction"));
        }
        Ok(d)
    }
}

impl From<PrimitiveDirection> for [i64; 2] {
    fn from(d: PrimitiveDirection) -> Self {
        [d.u1, d.u2]
    }
}

impl Ord for PrimitiveDirection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PrimitiveDirection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimitiveDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u1, self.u2)
    }
}

/// Convex lattice polygon given by its extreme points in counterclockwise
/// order. One vertex is a point, two vertices a segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn dimension(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    /// Directed sides `(a, b)` in counterclockwise order (2D polygons only).
    pub fn sides(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        if n < 3 {
            return Vec::new();
        }
        (0..n)
            .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
            .collect()
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> i64 {
        let s: i128 = self
            .sides()
            .iter()
            .map(|&(a, b)| cross((a.i, a.j), (b.i, b.j)))
            .sum();
        s as i64
    }

    pub fn area(&self) -> Q {
        qf(self.area2(), 2)
    }

    /// Closed containment test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.len() {
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orient(a, b, p) == 0
                    && p.i >= a.i.min(b.i)
                    && p.i <= a.i.max(b.i)
                    && p.j >= a.j.min(b.j)
                    && p.j <= a.j.max(b.j)
            }
            _ => self.sides().iter().all(|&(a, b)| orient(a, b, p) >= 0),
        }
    }

    pub fn width(&self, u: PrimitiveDirection) -> i64 {
        width_in_direction(&self.vertices, u).unwrap()
    }

    /// Sides perpendicular to `u`, i.e. with `u · (b - a) = 0`.
    pub fn sides_perpendicular_to(&self, u: PrimitiveDirection) -> Vec<(LatticePoint, LatticePoint)> {
        self.sides()
            .into_iter()
            .filter(|&(a, b)| b.sub(a).0 * u.u1 + b.sub(a).1 * u.u2 == 0)
            .collect()
    }
}

/// Extreme points of the hull in counterclockwise order, starting from the
/// lexicographically least point. Collinear boundary points are dropped.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(LatticePolygon { vertices: pts });
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    Ok(LatticePolygon { vertices: lower })
}

/// Number of lattice points on the segment minus one.
pub fn integer_length(a: LatticePoint, b: LatticePoint) -> i64 {
    let (di, dj) = b.sub(a);
    di.gcd(&dj)
}

/// `max u·p − min u·p` over the set.
pub fn width_in_direction(points: &[LatticePoint], u: PrimitiveDirection) -> Result<i64> {
    raw_width(points, u.as_pair()).ok_or(Error::EmptySet)
}

fn raw_width(points: &[LatticePoint], u: (i64, i64)) -> Option<i64> {
    let mut it = points.iter().map(|p| p.dot(u));
    let first = it.next()?;
    let (lo, hi) = it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)));
    Some(hi - lo)
}

/// Minimal lattice width and the preferred direction attaining it.
///
/// The width function `u ↦ ω_u` is a norm on `Z²` for 2-dimensional sets; a
/// generalised Gauss reduction of the standard basis under that norm ends
/// with a shortest vector. Among all attaining directions the least one in
/// [`PrimitiveDirection`] order is returned.
pub fn minimal_lattice_width(points: &[LatticePoint]) -> Result<(i64, PrimitiveDirection)> {
    let hull = convex_hull(points)?;
    match hull.dimension() {
        0 => return Ok((0, PrimitiveDirection::E1)),
        1 => {
            let (a, b) = (hull.vertices[0], hull.vertices[1]);
            let (di, dj) = b.sub(a);
            return Ok((0, PrimitiveDirection::new(-dj, di)?));
        }
        _ => {}
    }
    let w = gauss_reduced_width(&hull.vertices);
    let best = narrow_directions(points, w + 1)?
        .into_iter()
        .filter(|&(_, wu)| wu == w)
        .map(|(u, _)| u)
        .min()
        .expect("the reduced vector attains the width");
    Ok((w, best))
}

/// First minimum of the width norm, by generalised Gauss reduction.
pub fn gauss_reduced_width(vertices: &[LatticePoint]) -> i64 {
    let norm = |v: (i64, i64)| raw_width(vertices, v).unwrap();
    let (mut b1, mut b2) = ((1i64, 0i64), (0i64, 1i64));
    if norm(b1) > norm(b2) {
        std::mem::swap(&mut b1, &mut b2);
    }
    loop {
        let n1 = norm(b1);
        let n2 = norm(b2);
        debug_assert!(n1 > 0);
        let f = |k: i64| norm((b2.0 - k * b1.0, b2.1 - k * b1.1));
        // f is convex in k and any minimiser satisfies |k| <= 2 n2 / n1 + 1.
        let bound = 2 * n2 / n1 + 1;
        let (mut lo, mut hi) = (-bound, bound);
        // least k in [lo, hi] with f(k+1) >= f(k)
        while lo < hi {
            let mid = lo + (hi - lo).div_euclid(2);
            if f(mid + 1) >= f(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let k = lo;
        if f(k) < n2 {
            b2 = (b2.0 - k * b1.0, b2.1 - k * b1.1);
            if norm(b2) < n1 {
                std::mem::swap(&mut b1, &mut b2);
            }
        } else {
            return n1;
        }
    }
}

/// Two independent difference vectors spanning a triangle of maximal area
/// among hull vertices.
fn spanning_pair(vertices: &[LatticePoint]) -> ((i64, i64), (i64, i64), i128) {
    let n = vertices.len();
    let mut best = ((0, 0), (0, 0), 0i128);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let d1 = vertices[b].sub(vertices[a]);
                let d2 = vertices[c].sub(vertices[a]);
                let det = cross(d1, d2).abs();
                if det > best.2 {
                    best = (d1, d2, det);
                }
            }
        }
    }
    best
}

/// All canonical primitive directions with `ω_u(B) < m`, with their widths,
/// in [`PrimitiveDirection`] order.
///
/// Any such `u` has `|u·d1|, |u·d2| < m` for two independent hull
/// differences `d1, d2`, which bounds `|u_k|` by
/// `(m-1)(‖d1‖∞ + ‖d2‖∞) / |det(d1, d2)|`.
pub fn narrow_directions(points: &[LatticePoint], m: i64) -> Result<Vec<(PrimitiveDirection, i64)>> {
    let hull = convex_hull(points)?;
    if hull.dimension() < 2 {
        return Err(Error::Degenerate(format!(
            "hull of dimension {}",
            hull.dimension()
        )));
    }
    if m <= 0 {
        return Ok(Vec::new());
    }
    let (d1, d2, det) = spanning_pair(&hull.vertices);
    let inf = |d: (i64, i64)| d.0.abs().max(d.1.abs()) as i128;
    let bound = ((m as i128 - 1) * (inf(d1) + inf(d2)) / det) as i64;
    let mut out = Vec::new();
    for u1 in 0..=bound {
        for u2 in -bound..=bound {
            if (u1 == 0 && u2 <= 0) || u1.gcd(&u2) != 1 {
                continue;
            }
            let w = raw_width(&hull.vertices, (u1, u2)).unwrap();
            if w < m {
                out.push((PrimitiveDirection { u1, u2 }, w));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of an m-thickness test; `witness` names the violated direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Thickness {
    pub thick: bool,
    pub witness: Option<PrimitiveDirection>,
}

/// m-thickness of a finite lattice set.
///
/// Empty sets are thick; segments need integer length at least `m`; for a
/// 2-dimensional hull every direction with width `m - a_u < m` needs two
/// sides perpendicular to `u` of integer length at least `a_u`.
pub fn is_m_thick(points: &[LatticePoint], m: i64) -> Thickness {
    let pass = Thickness { thick: true, witness: None };
    if points.is_empty() || m <= 0 {
        return pass;
    }
    let hull = convex_hull(points).unwrap();
    match hull.dimension() {
        0 => Thickness { thick: false, witness: Some(PrimitiveDirection::E1) },
        1 => {
            let (a, b) = (hull.vertices[0], hull.vertices[1]);
            if integer_length(a, b) >= m {
                pass
            } else {
                let (di, dj) = b.sub(a);
                Thickness { thick: false, witness: PrimitiveDirection::new(-dj, di).ok() }
            }
        }
        _ => {
            for (u, w) in narrow_directions(points, m).unwrap() {
                let need = m - w;
                let sides = hull.sides_perpendicular_to(u);
                let ok = sides.len() == 2 && sides.iter().all(|&(a, b)| integer_length(a, b) >= need);
                if !ok {
                    return Thickness { thick: false, witness: Some(u) };
                }
            }
            pass
        }
    }
}

/// `max(m − ω_u(B), 0)`.
pub fn defect(points: &[LatticePoint], u: PrimitiveDirection, m: i64) -> Result<i64> {
    Ok((m - width_in_direction(points, u)?).max(0))
}

/// The two defect functionals of a convex m-thick polygon and whether they
/// meet their lower bounds `3/8 m²` and `1/2 m²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectFunctional {
    #[serde(with = "crate::rational::serde_q")]
    pub area: Q,
    pub defects: Vec<(PrimitiveDirection, i64)>,
    /// `area + ½ Σ def_u²`
    #[serde(with = "crate::rational::serde_q")]
    pub f1: Q,
    /// `2·area + ½ Σ def_u²`
    #[serde(with = "crate::rational::serde_q")]
    pub f2: Q,
    pub f1_holds: bool,
    pub f2_holds: bool,
}

pub fn defect_functional(poly: &LatticePolygon, m: i64) -> Result<DefectFunctional> {
    if poly.dimension() < 2 {
        return Err(Error::Hypothesis("polygon is not 2-dimensional".into()));
    }
    let th = is_m_thick(&poly.vertices, m);
    if !th.thick {
        return Err(Error::Hypothesis(format!(
            "polygon is not {m}-thick (direction {})",
            th.witness.unwrap()
        )));
    }
    let defects: Vec<_> = narrow_directions(&poly.vertices, m)?
        .into_iter()
        .map(|(u, w)| (u, m - w))
        .collect();
    let half_sq: Q = qf(defects.iter().map(|&(_, d)| d * d).sum::<i64>(), 2);
    let area = poly.area();
    let f1 = &area + &half_sq;
    let f2 = &area + &area + &half_sq;
    let f1_holds = f1 >= qf(3 * m * m, 8);
    let f2_holds = f2 >= qf(m * m, 2);
    Ok(DefectFunctional { area, defects, f1, f2, f1_holds, f2_holds })
}

/// Parity-exact area lower bound in terms of the minimal lattice width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthArea {
    pub width: i64,
    pub direction: PrimitiveDirection,
    #[serde(with = "crate::rational::serde_q")]
    pub area: Q,
    /// `3/2 k²` for width `2k`, `½(3k² + 3k + 1)` for width `2k + 1`.
    #[serde(with = "crate::rational::serde_q")]
    pub bound: Q,
    pub holds: bool,
    pub tight: bool,
}

pub fn width_area_bound(width: i64) -> Q {
    let k = width / 2;
    if width % 2 == 0 {
        qf(3 * k * k, 2)
    } else {
        qf(3 * k * k + 3 * k + 1, 2)
    }
}

pub fn width_area_check(poly: &LatticePolygon) -> Result<WidthArea> {
    if poly.dimension() < 2 {
        return Err(Error::Degenerate("polygon is not 2-dimensional".into()));
    }
    let (width, direction) = minimal_lattice_width(&poly.vertices)?;
    let area = poly.area();
    let bound = width_area_bound(width);
    Ok(WidthArea {
        width,
        direction,
        holds: area >= bound,
        tight: area == bound,
        area,
        bound,
    })
}

/// All lattice points of the closed polygon, sorted.
pub fn lattice_points_in(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let v = &poly.vertices;
    if v.is_empty() {
        return Vec::new();
    }
    let (imin, imax) = (v.iter().map(|p| p.i).min().unwrap(), v.iter().map(|p| p.i).max().unwrap());
    let (jmin, jmax) = (v.iter().map(|p| p.j).min().unwrap(), v.iter().map(|p| p.j).max().unwrap());
    let mut out = Vec::new();
    for i in imin..=imax {
        for j in jmin..=jmax {
            let p = LatticePoint::new(i, j);
            if poly.contains(p) {
                out.push(p);
            }
        }
    }
    out
}

/// Boundary lattice points of a 2D polygon (sum of side lengths).
pub fn boundary_count(poly: &LatticePolygon) -> i64 {
    poly.sides().iter().map(|&(a, b)| integer_length(a, b)).sum()
}

/// Polygon file format: `{"points": [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub points: Vec<LatticePoint>,
}
