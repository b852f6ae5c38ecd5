use std::collections::BTreeMap;

use serde::Serialize;

use super::support::LiftedSupport;
use crate::lattice::{convex_hull, cross, integer_length, orient, LatticePoint, LatticePolygon};
use crate::rational::{q, Q};

/// A 2-dimensional face of the subdivision together with the affine
/// function `αi + βj + γ` of its upper-hull facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub polygon: LatticePolygon,
    /// Support points lying on the facet.
    pub points: Vec<LatticePoint>,
    #[serde(with = "crate::rational::serde_qpair")]
    pub slope: (Q, Q),
    #[serde(with = "crate::rational::serde_q")]
    pub offset: Q,
}

impl Cell {
    /// The vertex of the tropical curve dual to this cell.
    pub fn dual_vertex(&self) -> (Q, Q) {
        (-self.slope.0.clone(), -self.slope.1.clone())
    }

    pub fn affine_value(&self, p: LatticePoint) -> Q {
        &self.slope.0 * q(p.i) + &self.slope.1 * q(p.j) + &self.offset
    }
}

/// A 1-dimensional face, stored with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionEdge {
    pub a: LatticePoint,
    pub b: LatticePoint,
    /// Indices of the (one or two) cells containing the edge.
    pub cells: Vec<usize>,
}

impl SubdivisionEdge {
    pub fn is_boundary(&self) -> bool {
        self.cells.len() < 2
    }

    pub fn integer_length(&self) -> i64 {
        integer_length(self.a, self.b)
    }
}

/// Regular subdivision of the Newton polygon induced by the heights.
///
/// For supports of dimension below two there are no cells; a 1-dimensional
/// support still records the breakpoints of its upper hull as edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularSubdivision {
    #[serde(skip)]
    pub support: LiftedSupport,
    pub newton: LatticePolygon,
    pub dimension: usize,
    pub cells: Vec<Cell>,
    pub edges: Vec<SubdivisionEdge>,
}

impl RegularSubdivision {
    pub fn is_degenerate(&self) -> bool {
        self.dimension < 2
    }

    pub fn find_edge(&self, a: LatticePoint, b: LatticePoint) -> Option<usize> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.edges.iter().position(|e| e.a == a && e.b == b)
    }

    pub fn find_cell(&self, polygon: &LatticePolygon) -> Option<usize> {
        self.cells.iter().position(|c| &c.polygon == polygon)
    }

    /// Lattice points that are vertices of at least one cell.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut v: Vec<_> = self.edges.iter().flat_map(|e| [e.a, e.b]).collect();
        v.sort();
        v.dedup();
        v
    }
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

/// Upper concave hull of lifted points lying on one line, as the ordered
/// list of its breakpoints from `from` towards `to`.
fn upper_hull_on_line(
    ls: &LiftedSupport,
    from: LatticePoint,
    to: LatticePoint,
) -> Vec<LatticePoint> {
    let e = to.sub(from);
    let mut pts: Vec<(i64, LatticePoint, Q)> = ls
        .heights()
        .iter()
        .filter(|(p, _)| orient(from, to, **p) == 0)
        .map(|(p, h)| (dot(p.sub(from), e), *p, h.clone()))
        .collect();
    pts.sort_by(|a, b| a.0.cmp(&b.0));
    let mut hull: Vec<(i64, LatticePoint, Q)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (t0, _, h0) = &hull[hull.len() - 2];
            let (t1, _, h1) = &hull[hull.len() - 1];
            // pop unless (t1, h1) lies strictly above the chord
            let lhs = (h1 - h0) * q(p.0 - t0);
            let rhs = (&p.2 - h0) * q(t1 - t0);
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.into_iter().map(|(_, p, _)| p).collect()
}

/// The upper-hull facet on the left of the lifted hull edge `p → q`.
fn facet_left_of(ls: &LiftedSupport, p: LatticePoint, qp: LatticePoint) -> Cell {
    let e = qp.sub(p);
    let ee = q(dot(e, e));
    let hp = ls.height(p).unwrap().clone();
    let along = (ls.height(qp).unwrap() - &hp) / ee;
    let line = |x: LatticePoint| &hp + &along * q(dot(x.sub(p), e));
    let mut s_max: Option<Q> = None;
    for (x, h) in ls.heights() {
        let d = cross(e, x.sub(p));
        if d > 0 {
            let s = (h - line(*x)) / q(d as i64);
            if s_max.as_ref().map_or(true, |m| &s > m) {
                s_max = Some(s);
            }
        }
    }
    let s = s_max.expect("points on the left of a hull edge");
    let alpha = &along * q(e.0) - &s * q(e.1);
    let beta = &along * q(e.1) + &s * q(e.0);
    let offset = &hp - &alpha * q(p.i) - &beta * q(p.j);
    let points: Vec<LatticePoint> = ls
        .heights()
        .iter()
        .filter(|(x, h)| **h == &alpha * q(x.i) + &beta * q(x.j) + &offset)
        .map(|(x, _)| *x)
        .collect();
    let polygon = convex_hull(&points).unwrap();
    Cell { polygon, points, slope: (alpha, beta), offset }
}

/// Projects the upper faces of the lifted support to the Newton polygon.
///
/// Cells are found by wrapping around the upper hull: each cell is the facet
/// on the left of one of its directed edges, starting from a piece of the
/// Newton polygon boundary. Coplanar lifted points give one polygonal cell.
pub fn lift_and_subdivide(ls: &LiftedSupport) -> RegularSubdivision {
    let newton = ls.newton_polygon();
    let dimension = newton.dimension();
    let mut sub = RegularSubdivision {
        support: ls.clone(),
        newton: newton.clone(),
        dimension,
        cells: Vec::new(),
        edges: Vec::new(),
    };
    match dimension {
        0 => return sub,
        1 => {
            let v = newton.vertices();
            let brk = upper_hull_on_line(ls, v[0], v[1]);
            sub.edges = brk
                .windows(2)
                .map(|w| SubdivisionEdge { a: w[0], b: w[1], cells: Vec::new() })
                .collect();
            return sub;
        }
        _ => {}
    }
    let sides = newton.sides();
    let on_boundary = |a: LatticePoint, b: LatticePoint| {
        sides.iter().any(|&(v, w)| orient(v, w, a) == 0 && orient(v, w, b) == 0)
    };
    let (v0, v1) = sides[0];
    let brk = upper_hull_on_line(ls, v0, v1);
    let mut stack = vec![(brk[0], brk[1])];
    let mut by_slope: BTreeMap<(Q, Q), Cell> = BTreeMap::new();
    while let Some((p, qp)) = stack.pop() {
        let cell = facet_left_of(ls, p, qp);
        if by_slope.contains_key(&cell.slope) {
            continue;
        }
        for (a, b) in cell.polygon.sides() {
            if !on_boundary(a, b) {
                stack.push((b, a));
            }
        }
        by_slope.insert(cell.slope.clone(), cell);
    }
    // ascending dual vertex order
    let mut cells: Vec<Cell> = by_slope.into_values().collect();
    cells.sort_by(|a, b| a.dual_vertex().cmp(&b.dual_vertex()));
    let mut edge_map: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
    for (k, c) in cells.iter().enumerate() {
        for (a, b) in c.polygon.sides() {
            let key = if a < b { (a, b) } else { (b, a) };
            edge_map.entry(key).or_default().push(k);
        }
    }
    debug_assert_eq!(
        cells.iter().map(|c| c.polygon.area2()).sum::<i64>(),
        newton.area2()
    );
    sub.edges = edge_map
        .into_iter()
        .map(|((a, b), cells)| SubdivisionEdge { a, b, cells })
        .collect();
    sub.cells = cells;
    sub
}
