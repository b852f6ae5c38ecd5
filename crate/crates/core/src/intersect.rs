//! Stable intersection of tropical curves by exact symbolic perturbation,
//! local intersection numbers along connected components, and the bounded
//! test of multiplicity through tropical lines.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::puiseux::UnimodularMap;
use crate::rational::{fmt_q, q, sign, Q};
use crate::tropical::{dual_curve, lift_and_subdivide, LiftedSupport, TropicalCurve};

/// A stable intersection point with its multiplicity and the index of the
/// connected component of `A ∩ B` it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightedPoint {
    #[serde(with = "crate::rational::serde_qpair")]
    pub point: (Q, Q),
    pub mult: i64,
    pub component: usize,
}

/// Translation `A + ε(primary + δ·secondary)` with `0 < δ ≪ 1`, both
/// infinitesimal. Any two independent vectors give the same limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub primary: (Q, Q),
    pub secondary: (Q, Q),
}

impl Default for Perturbation {
    fn default() -> Self {
        Self { primary: (q(1), q(0)), secondary: (q(0), q(1)) }
    }
}

impl Perturbation {
    pub fn new(primary: (Q, Q), secondary: (Q, Q)) -> Result<Self> {
        if &primary.0 * &secondary.1 == &primary.1 * &secondary.0 {
            return Err(Error::Degenerate("perturbation vectors are parallel".into()));
        }
        Ok(Self { primary, secondary })
    }

    /// A perturbation drawn from a seed.
    pub fn from_seed(seed: u64) -> Self {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut draw = || q(rng.gen_range(-50..=50));
            let p = (draw(), draw());
            let s = (draw(), draw());
            if let Ok(v) = Self::new(p, s) {
                return v;
            }
        }
    }
}

/// A piece of a curve in absolute coordinates: `start + s·dir` for
/// `s ∈ [0, len]`, or `s ≥ 0` for rays.
#[derive(Clone, Debug)]
struct Segment {
    start: (Q, Q),
    dir: (i64, i64),
    len: Option<Q>,
    weight: i64,
}

fn segments(c: &TropicalCurve) -> Vec<Segment> {
    c.pieces()
        .map(|pc| {
            let (a, b) = c.endpoints(pc);
            let start = c.vertices[a].point.clone();
            let dir = c.direction(pc);
            let len = b.map(|b| {
                let e = &c.vertices[b].point;
                let (dx, dy) = (&e.0 - &start.0, &e.1 - &start.1);
                if dir.0 != 0 {
                    dx / q(dir.0)
                } else {
                    dy / q(dir.1)
                }
            });
            Segment { start, dir, len, weight: c.weight(pc) }
        })
        .collect()
}

fn cross_q(a: (&Q, &Q), b: (i64, i64)) -> Q {
    a.0 * q(b.1) - a.1 * q(b.0)
}

/// Sign of `x0 + ε(x1 + δ x2)` for infinitesimals `ε ≫ δ > 0`.
fn lex_sign(x0: &Q, x1: &Q, x2: &Q) -> i32 {
    [x0, x1, x2].into_iter().map(sign).find(|&s| s != 0).unwrap_or(0)
}

/// Stable intersection with the default perturbation.
pub fn stable_intersection(a: &TropicalCurve, b: &TropicalCurve) -> Vec<WeightedPoint> {
    stable_intersection_with(a, b, &Perturbation::default())
}

/// Limit of `(A + εv) ∩ B` as `ε → 0`, with multiplicities
/// `w_A w_B |det(d_A, d_B)|` summed at each limit point.
pub fn stable_intersection_with(a: &TropicalCurve, b: &TropicalCurve, v: &Perturbation) -> Vec<WeightedPoint> {
    let sa = segments(a);
    let sb = segments(b);
    let points = crossings(&sa, &sb, v);
    let comps = Components::new(&sa, &sb);
    let mut labels: BTreeMap<usize, usize> = BTreeMap::new();
    points
        .into_iter()
        .map(|(p, mult)| {
            let root = comps.component_of(&p).expect("limit point lies in A ∩ B");
            let next = labels.len();
            let component = *labels.entry(root).or_insert(next);
            WeightedPoint { point: p, mult, component }
        })
        .collect()
}

fn crossings(sa: &[Segment], sb: &[Segment], v: &Perturbation) -> BTreeMap<(Q, Q), i64> {
    let mut points: BTreeMap<(Q, Q), i64> = BTreeMap::new();
    for x in sa {
        for y in sb {
            let det = x.dir.0 * y.dir.1 - x.dir.1 * y.dir.0;
            if det == 0 {
                continue;
            }
            let dq = q(det);
            let w = (&y.start.0 - &x.start.0, &y.start.1 - &x.start.1);
            // x.start + εv + s x.dir = y.start + r y.dir
            let s0 = cross_q((&w.0, &w.1), y.dir) / &dq;
            let r0 = cross_q((&w.0, &w.1), x.dir) / &dq;
            // first-order terms only matter when the crossing sits on an endpoint
            let drift = |along: (i64, i64)| {
                let t1 = -cross_q((&v.primary.0, &v.primary.1), along) / &dq;
                let t2 = -cross_q((&v.secondary.0, &v.secondary.1), along) / &dq;
                (t1, t2)
            };
            let inside = |t0: &Q, along: (i64, i64), len: &Option<Q>| {
                let lo = sign(t0);
                let hi = len.as_ref().map_or(1, |l| sign(&(l - t0)));
                if lo < 0 || hi < 0 {
                    return false;
                }
                if lo > 0 && hi > 0 {
                    return true;
                }
                let (t1, t2) = drift(along);
                let z = q(0);
                (lo > 0 || lex_sign(&z, &t1, &t2) > 0) && (hi > 0 || lex_sign(&z, &-t1.clone(), &-t2.clone()) > 0)
            };
            if inside(&s0, y.dir, &x.len) && inside(&r0, x.dir, &y.len) {
                let p = (&x.start.0 + &s0 * q(x.dir.0), &x.start.1 + &s0 * q(x.dir.1));
                *points.entry(p).or_default() += x.weight * y.weight * det.abs();
            }
        }
    }
    points
}

/// A closed convex subset of a line: `base + t·dir` for `t` in `[lo, hi]`,
/// either bound possibly infinite.
#[derive(Clone, Debug)]
struct LinePiece {
    base: (Q, Q),
    dir: (i64, i64),
    lo: Option<Q>,
    hi: Option<Q>,
}

impl LinePiece {
    fn point(p: (Q, Q)) -> Self {
        Self { base: p, dir: (1, 0), lo: Some(q(0)), hi: Some(q(0)) }
    }

    fn of(s: &Segment) -> Self {
        Self { base: s.start.clone(), dir: s.dir, lo: Some(q(0)), hi: s.len.clone() }
    }

    fn is_point(&self) -> bool {
        self.lo.is_some() && self.lo == self.hi
    }

    fn at(&self, t: &Q) -> (Q, Q) {
        (&self.base.0 + t * q(self.dir.0), &self.base.1 + t * q(self.dir.1))
    }

    fn in_range(&self, t: &Q) -> bool {
        self.lo.as_ref().map_or(true, |l| t >= l) && self.hi.as_ref().map_or(true, |h| t <= h)
    }

    /// Parameter of `p` if it lies on the supporting line.
    fn param(&self, p: &(Q, Q)) -> Option<Q> {
        let (dx, dy) = (&p.0 - &self.base.0, &p.1 - &self.base.1);
        if &dx * q(self.dir.1) != &dy * q(self.dir.0) {
            return None;
        }
        let nn = q(self.dir.0 * self.dir.0 + self.dir.1 * self.dir.1);
        Some((dx * q(self.dir.0) + dy * q(self.dir.1)) / nn)
    }

    fn contains(&self, p: &(Q, Q)) -> bool {
        self.param(p).map_or(false, |t| self.in_range(&t))
    }

    /// Intersection of two pieces, if non-empty.
    fn meet(&self, other: &LinePiece) -> Option<LinePiece> {
        if self.is_point() {
            let p = self.at(self.lo.as_ref().unwrap());
            return other.contains(&p).then(|| LinePiece::point(p));
        }
        if other.is_point() {
            return other.meet(self);
        }
        let det = self.dir.0 * other.dir.1 - self.dir.1 * other.dir.0;
        if det != 0 {
            let w = (&other.base.0 - &self.base.0, &other.base.1 - &self.base.1);
            let t = cross_q((&w.0, &w.1), other.dir) / q(det);
            let p = self.at(&t);
            return (self.in_range(&t) && other.contains(&p)).then(|| LinePiece::point(p));
        }
        // parallel: same line?
        self.param(&other.base)?;
        let map = |t: &Q| self.param(&other.at(t)).unwrap();
        let (mut lo2, mut hi2) = (other.lo.as_ref().map(map), other.hi.as_ref().map(map));
        let same = self.dir.0 * other.dir.0 + self.dir.1 * other.dir.1 > 0;
        if !same {
            std::mem::swap(&mut lo2, &mut hi2);
        }
        let lo = match (&self.lo, lo2) {
            (Some(a), Some(b)) => Some(a.clone().max(b)),
            (a, b) => a.clone().or(b),
        };
        let hi = match (&self.hi, hi2) {
            (Some(a), Some(b)) => Some(a.clone().min(b)),
            (a, b) => a.clone().or(b),
        };
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return None;
            }
        }
        Some(LinePiece { base: self.base.clone(), dir: self.dir, lo, hi })
    }
}

/// Connected components of `A ∩ B` as unions of touching overlaps.
struct Components {
    parts: Vec<LinePiece>,
    root: Vec<usize>,
}

impl Components {
    fn new(sa: &[Segment], sb: &[Segment]) -> Self {
        let mut parts = Vec::new();
        for x in sa {
            for y in sb {
                if let Some(p) = LinePiece::of(x).meet(&LinePiece::of(y)) {
                    parts.push(p);
                }
            }
        }
        let n = parts.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            for j in i + 1..n {
                if parts[i].meet(&parts[j]).is_some() {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let root = (0..n).map(|i| find(&mut parent, i)).collect();
        Self { parts, root }
    }

    fn component_of(&self, p: &(Q, Q)) -> Option<usize> {
        self.parts.iter().position(|x| x.contains(p)).map(|i| self.root[i])
    }
}

/// Sum of the stable intersection multiplicities in the component of
/// `A ∩ B` containing `p`; zero when `p` is not in `A ∩ B`.
pub fn local_stable_intersection(a: &TropicalCurve, b: &TropicalCurve, p: (&Q, &Q)) -> i64 {
    local_from_segments(&segments(a), &segments(b), p)
}

fn local_from_segments(sa: &[Segment], sb: &[Segment], p: (&Q, &Q)) -> i64 {
    let comps = Components::new(sa, sb);
    let pt = (p.0.clone(), p.1.clone());
    let Some(target) = comps.component_of(&pt) else { return 0 };
    crossings(sa, sb, &Perturbation::default())
        .into_iter()
        .filter(|(x, _)| comps.component_of(x) == Some(target))
        .map(|(_, m)| m)
        .sum()
}

/// The image under `map` of the standard tropical line, moved so that its
/// vertex is `vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalLine {
    pub vertex: (Q, Q),
    pub map: UnimodularMap,
}

/// Rays of the standard line.
pub const STANDARD_RAYS: [(i64, i64); 3] = [(-1, 0), (0, -1), (1, 1)];

impl TropicalLine {
    pub fn standard(vertex: (Q, Q)) -> Self {
        Self { vertex, map: UnimodularMap::IDENTITY }
    }

    pub fn new(vertex: (Q, Q), map: UnimodularMap) -> Self {
        Self { vertex, map }
    }

    pub fn rays(&self) -> [(i64, i64); 3] {
        STANDARD_RAYS.map(|r| self.map.apply(r))
    }

    /// Heights realising the line: `max(0, X, Y)` with exponents moved by
    /// `map⁻ᵀ`, then translated to the vertex.
    pub fn support(&self) -> LiftedSupport {
        let base = LiftedSupport::from_pairs([((0, 0), q(0)), ((1, 0), q(0)), ((0, 1), q(0))]).unwrap();
        base.transformed(&self.map.dual()).translated((&self.vertex.0, &self.vertex.1))
    }

    fn segments(&self) -> Vec<Segment> {
        self.rays()
            .into_iter()
            .map(|dir| Segment { start: self.vertex.clone(), dir, len: None, weight: 1 })
            .collect()
    }

    pub fn curve(&self) -> TropicalCurve {
        dual_curve(&lift_and_subdivide(&self.support())).expect("a line is a curve")
    }
}

/// A tropical line through `P` meeting the curve with too small a local
/// intersection number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineViolation {
    /// Rows of the unimodular map.
    pub map: [[i64; 2]; 2],
    #[serde(with = "crate::rational::serde_qpair")]
    pub vertex: (Q, Q),
    pub local_intersection: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    /// No violation found among the enumerated lines; this is not a proof.
    pub pass: bool,
    pub maps_checked: usize,
    pub lines_checked: usize,
    pub violations: Vec<LineViolation>,
}

/// Unimodular maps with entries in `[-bound, bound]`, one per distinct image
/// of the standard line, smallest entries first.
pub fn enumerate_line_maps(bound: i64) -> Vec<UnimodularMap> {
    let r = -bound..=bound;
    let mut all: Vec<UnimodularMap> = r
        .clone()
        .flat_map(|a| r.clone().map(move |b| (a, b)))
        .flat_map(|(a, b)| r.clone().map(move |c| (a, b, c)))
        .flat_map(|(a, b, c)| r.clone().map(move |d| UnimodularMap { a, b, c, d }))
        .filter(|m| m.a * m.d - m.b * m.c == 1)
        .collect();
    all.sort_by_key(|m| (m.a.abs() + m.b.abs() + m.c.abs() + m.d.abs(), [-m.a, -m.b, -m.c, -m.d]));
    let mut seen = BTreeSet::new();
    all.retain(|m| {
        let mut rays = STANDARD_RAYS.map(|r| m.apply(r));
        rays.sort();
        seen.insert(rays)
    });
    all
}

/// For every enumerated line shape and every combinatorially distinct
/// position of a line of that shape through `p`, checks that the local
/// stable intersection at `p` is at least `m`.
///
/// A line through `p` has `p` on one of its rays, so its vertex is
/// `p − s·r` for a ray direction `r` and `s ≥ 0`. The local picture only
/// changes when the vertex crosses the curve or another ray crosses a curve
/// vertex; one sample per interval between these
/// critical values covers every position.
pub fn tropical_multiplicity_check(curve: &TropicalCurve, p: (&Q, &Q), m: i64, bound: i64) -> LineCheck {
    let maps = enumerate_line_maps(bound);
    let segs = segments(curve);
    let mut violations = Vec::new();
    let mut lines_checked = 0;
    for map in &maps {
        let rays = STANDARD_RAYS.map(|r| map.apply(r));
        let mut tried = BTreeSet::new();
        for (k, r) in rays.iter().enumerate() {
            let mut crit: BTreeSet<Q> = BTreeSet::new();
            crit.insert(q(0));
            // vertex p − t r on a piece
            for s in &segs {
                let det = r.0 * s.dir.1 - r.1 * s.dir.0;
                if det != 0 {
                    let w = (&s.start.0 - p.0, &s.start.1 - p.1);
                    // p − t r = start + u dir  ⇒  −t r − u dir = w
                    let t = -cross_q((&w.0, &w.1), s.dir) / q(det);
                    let u = cross_q((&w.0, &w.1), *r) / q(det);
                    if t > q(0) && u >= q(0) && s.len.as_ref().map_or(true, |l| &u <= l) {
                        crit.insert(t);
                    }
                }
            }
            // another ray through a curve vertex: p − t r + λ r_j = w
            for (j, rj) in rays.iter().enumerate() {
                if j == k {
                    continue;
                }
                let det = r.0 * rj.1 - r.1 * rj.0;
                for v in &curve.vertices {
                    let w = (&v.point.0 - p.0, &v.point.1 - p.1);
                    let t = -cross_q((&w.0, &w.1), *rj) / q(det);
                    if t > q(0) {
                        crit.insert(t);
                    }
                }
            }
            let crit: Vec<Q> = crit.into_iter().collect();
            let mut samples = crit.clone();
            for w in crit.windows(2) {
                samples.push((&w[0] + &w[1]) / q(2));
            }
            samples.push(crit.last().unwrap() + q(1));
            for s in samples {
                let vertex = (p.0 - &s * q(r.0), p.1 - &s * q(r.1));
                if !tried.insert(vertex.clone()) {
                    continue;
                }
                let line = TropicalLine::new(vertex.clone(), *map);
                let li = local_from_segments(&line.segments(), &segs, p);
                lines_checked += 1;
                if li < m {
                    violations.push(LineViolation {
                        map: [[map.a, map.b], [map.c, map.d]],
                        vertex,
                        local_intersection: li,
                    });
                }
            }
        }
    }
    LineCheck { pass: violations.is_empty(), maps_checked: maps.len(), lines_checked, violations }
}

/// Intersection file format: a list of `{"point", "mult", "component"}`.
pub fn intersection_json(points: &[WeightedPoint]) -> serde_json::Value {
    serde_json::to_value(points).expect("serialisable")
}

impl std::fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}) mult {} component {}",
            fmt_q(&self.point.0),
            fmt_q(&self.point.1),
            self.mult,
            self.component
        )
    }
}

/// `area(A + B) − area(A) − area(B)` for the Newton polygons of two curves.
pub fn mixed_area(a: &TropicalCurve, b: &TropicalCurve) -> i64 {
    use crate::lattice::{convex_hull, LatticePoint};
    let pa = a.subdivision.newton.vertices();
    let pb = b.subdivision.newton.vertices();
    let sum: Vec<LatticePoint> = pa
        .iter()
        .flat_map(|x| pb.iter().map(move |y| LatticePoint::new(x.i + y.i, x.j + y.j)))
        .collect();
    let s = convex_hull(&sum).unwrap().area2();
    (s - a.subdivision.newton.area2() - b.subdivision.newton.area2()) / 2
}
