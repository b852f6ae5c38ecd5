use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::PrimitiveDirection;
use crate::puiseux::UnimodularMap;
use crate::rational::{q, qf, Q};
use crate::tropical::{
    classify_point, dual_curve, g_hat, g_profile, lift_and_subdivide, maximal_long_edges,
    LiftedSupport, LongEdge, Piece, PointClass, RegularSubdivision, TropicalCurve,
};

/// The curve seen from a point: heights shifted so that the point sits at
/// the origin, with its subdivision, curve and long edges.
#[derive(Clone, Debug)]
pub struct LocalPicture {
    pub point: (Q, Q),
    pub support: LiftedSupport,
    pub subdivision: RegularSubdivision,
    pub curve: Option<TropicalCurve>,
    pub long_edges: Vec<LongEdge>,
    pub class: PointClass,
}

impl LocalPicture {
    pub fn new(ls: &LiftedSupport, p: (&Q, &Q)) -> Self {
        let support = ls.translated((&-p.0.clone(), &-p.1.clone()));
        let subdivision = lift_and_subdivide(&support);
        let curve = dual_curve(&subdivision).ok();
        let long_edges = curve.as_ref().map(maximal_long_edges).unwrap_or_default();
        let class = classify_point(&support, (&q(0), &q(0)));
        Self { point: (p.0.clone(), p.1.clone()), support, subdivision, curve, long_edges, class }
    }

    /// Index of the curve vertex at the point, if any.
    pub fn vertex_here(&self) -> Option<usize> {
        let curve = self.curve.as_ref()?;
        curve.vertices.iter().position(|v| v.point == (q(0), q(0)))
    }

    /// The maximal long edge of direction `u` through the point.
    pub fn long_edge_through(&self, u: PrimitiveDirection) -> Option<&LongEdge> {
        let curve = self.curve.as_ref()?;
        let origin = (&q(0), &q(0));
        self.long_edges
            .iter()
            .find(|le| le.direction == u && le.pieces.iter().any(|&pc| curve.piece_contains(pc, origin)))
    }

    /// Directions of the long edges through the point.
    pub fn directions_through(&self) -> Vec<PrimitiveDirection> {
        let Some(curve) = self.curve.as_ref() else { return Vec::new() };
        let origin = (&q(0), &q(0));
        let mut v: Vec<_> = self
            .long_edges
            .iter()
            .filter(|le| le.pieces.iter().any(|&pc| curve.piece_contains(pc, origin)))
            .map(|le| le.direction)
            .collect();
        v.sort();
        v.dedup();
        v
    }

    fn dual_x(&self, piece: Piece, u: PrimitiveDirection) -> i64 {
        let curve = self.curve.as_ref().unwrap();
        let e = &self.subdivision.edges[curve.dual(piece)];
        e.a.dot(u.as_pair())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementaryPair {
    pub first: Piece,
    pub second: Piece,
    pub distance: i64,
    pub max_weight: i64,
    pub pass: bool,
}

/// Every pair of curve pieces on a common line through `p` having points on
/// opposite sides of `p`, with the test `distance + max weight ≥ m`.
///
/// The distance is measured between the dual edges across the line
/// direction `u`, as `|u·a₁ − u·a₂|`. A piece through `p` pairs with itself.
pub fn complementary_pairs_check(curve: &TropicalCurve, p: (&Q, &Q), m: i64) -> Vec<ComplementaryPair> {
    let sub = &curve.subdivision;
    let mut out = Vec::new();
    let mut lines: Vec<(PrimitiveDirection, Piece, bool, bool)> = Vec::new();
    for pc in curve.pieces() {
        let (a, b) = curve.endpoints(pc);
        let d = curve.direction(pc);
        let s = &curve.vertices[a].point;
        let (dx, dy) = (p.0 - &s.0, p.1 - &s.1);
        if &dx * q(d.1) != &dy * q(d.0) {
            continue;
        }
        let u = PrimitiveDirection::new(d.0, d.1).unwrap();
        let t = |pt: &(Q, Q)| (&pt.0 - p.0) * q(u.u1()) + (&pt.1 - p.1) * q(u.u2());
        let ta = t(s);
        let (left, right) = match b {
            Some(b) => {
                let tb = t(&curve.vertices[b].point);
                let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
                (lo < q(0), hi > q(0))
            }
            None => {
                let forward = d.0 * u.u1() + d.1 * u.u2() > 0;
                if forward {
                    (ta < q(0), true)
                } else {
                    (true, ta > q(0))
                }
            }
        };
        lines.push((u, pc, left, right));
    }
    for (x, (u1, p1, l1, r1)) in lines.iter().enumerate() {
        for (u2, p2, l2, r2) in &lines[x..] {
            if u1 != u2 {
                continue;
            }
            let same = p1 == p2;
            let opposite = if same { *l1 && *r1 } else { (*l1 && *r2) || (*r1 && *l2) };
            if !opposite {
                continue;
            }
            let x1 = sub.edges[curve.dual(*p1)].a.dot(u1.as_pair());
            let x2 = sub.edges[curve.dual(*p2)].a.dot(u1.as_pair());
            let distance = (x1 - x2).abs();
            let max_weight = curve.weight(*p1).max(curve.weight(*p2));
            out.push(ComplementaryPair {
                first: *p1,
                second: *p2,
                distance,
                max_weight,
                pass: distance + max_weight >= m,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GHatEntry {
    pub x: i64,
    /// Length of the dual edge; zero for the end vertices of a finite side.
    pub weight: i64,
    #[serde(with = "crate::rational::serde_q")]
    pub g_hat: Q,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GHatReport {
    pub direction: PrimitiveDirection,
    pub entries: Vec<GHatEntry>,
    pub span: i64,
    pub span_pass: bool,
}

impl GHatReport {
    pub fn pass(&self) -> bool {
        self.span_pass && self.entries.iter().all(|e| e.pass)
    }
}

/// `m_i + ĝ(x_i) ≥ m` along the long edge of direction `u` through `p`, and
/// the span of the dual columns.
pub fn g_hat_condition(ls: &LiftedSupport, p: (&Q, &Q), u: PrimitiveDirection, m: i64) -> Result<GHatReport> {
    g_hat_condition_local(&LocalPicture::new(ls, p), u, m)
}

pub fn g_hat_condition_local(pic: &LocalPicture, u: PrimitiveDirection, m: i64) -> Result<GHatReport> {
    let le = pic
        .long_edge_through(u)
        .ok_or_else(|| Error::Hypothesis(format!("no long edge of direction {u} through the point")))?;
    let curve = pic.curve.as_ref().unwrap();
    let g = g_profile(&pic.support, &UnimodularMap::with_first_row(u.as_pair())?);
    let mut cols: Vec<(i64, i64)> = le
        .pieces
        .iter()
        .map(|&pc| (pic.dual_x(pc, u), curve.weight(pc)))
        .collect();
    let cell_xs = |v: usize| {
        let cell = &pic.subdivision.cells[curve.vertices[v].cell];
        cell.polygon.vertices().iter().map(|a| a.dot(u.as_pair())).collect::<Vec<_>>()
    };
    if !le.infinite_left(curve) {
        cols.push((cell_xs(le.vertices[0]).into_iter().min().unwrap(), 0));
    }
    if !le.infinite_right(curve) {
        cols.push((cell_xs(*le.vertices.last().unwrap()).into_iter().max().unwrap(), 0));
    }
    cols.sort();
    cols.dedup();
    let entries = cols
        .iter()
        .map(|&(x, weight)| {
            let gh = g_hat(&g, &q(x)).expect("dual column inside the profile domain");
            GHatEntry { x, weight, pass: q(weight) + &gh >= q(m), g_hat: gh }
        })
        .collect();
    let span = cols.last().unwrap().0 - cols[0].0;
    Ok(GHatReport { direction: u, entries, span, span_pass: span >= m })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreparationReport {
    pub direction: PrimitiveDirection,
    /// `def_u(d(P))`
    pub defect: i64,
    /// Total area of the cells dual to the other vertices of the long edge.
    #[serde(with = "crate::rational::serde_q")]
    pub sum: Q,
    /// `½ def²`
    #[serde(with = "crate::rational::serde_q")]
    pub bound: Q,
    pub pass: bool,
    /// Whether the stronger bound `def²` also holds.
    pub strong_holds: bool,
}

/// Area around a vertex `p` along the long edge of direction `u`, against
/// the square of the defect of `d(p)` in that direction.
pub fn preparation_check(ls: &LiftedSupport, p: (&Q, &Q), u: PrimitiveDirection, m: i64) -> Result<PreparationReport> {
    preparation_check_local(&LocalPicture::new(ls, p), u, m)
}

pub fn preparation_check_local(pic: &LocalPicture, u: PrimitiveDirection, m: i64) -> Result<PreparationReport> {
    let v = pic
        .vertex_here()
        .ok_or_else(|| Error::Hypothesis("the point is not a vertex of the curve".into()))?;
    let le = pic
        .long_edge_through(u)
        .ok_or_else(|| Error::Hypothesis(format!("no long edge of direction {u} through the point")))?;
    let curve = pic.curve.as_ref().unwrap();
    let cell = |w: usize| &pic.subdivision.cells[curve.vertices[w].cell].polygon;
    let a = cell(v).width(u);
    let defect = (m - a).max(0);
    let sum: Q = le.vertices.iter().filter(|&&w| w != v).map(|&w| cell(w).area()).sum();
    let bound = qf(defect * defect, 2);
    Ok(PreparationReport {
        direction: u,
        defect,
        pass: sum >= bound,
        strong_holds: sum >= q(defect * defect),
        sum,
        bound,
    })
}
