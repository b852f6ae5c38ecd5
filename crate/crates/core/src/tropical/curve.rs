use std::collections::BTreeMap;

use serde::Serialize;

use super::subdivision::RegularSubdivision;
use crate::error::{Error, Result};
use crate::lattice::PrimitiveDirection;
use crate::rational::{q, sign, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveVertex {
    #[serde(with = "crate::rational::serde_qpair")]
    pub point: (Q, Q),
    /// Index of the dual cell.
    pub cell: usize,
}

/// Bounded edge; `direction` is primitive and points from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveEdge {
    pub from: usize,
    pub to: usize,
    pub direction: (i64, i64),
    pub weight: i64,
    /// Index of the dual subdivision edge.
    pub dual: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveRay {
    pub from: usize,
    pub direction: (i64, i64),
    pub weight: i64,
    pub dual: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Piece {
    Edge(usize),
    Ray(usize),
}

/// The tropical curve dual to a regular subdivision. Vertex `k` is dual to
/// cell `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropicalCurve {
    #[serde(skip)]
    pub subdivision: RegularSubdivision,
    pub vertices: Vec<CurveVertex>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = num_integer::gcd(v.0, v.1);
    (v.0 / g, v.1 / g)
}

/// Builds vertices, bounded edges and rays, and verifies balancing.
pub fn dual_curve(sub: &RegularSubdivision) -> Result<TropicalCurve> {
    if sub.is_degenerate() {
        return Err(Error::Degenerate(format!(
            "Newton polygon of dimension {}",
            sub.dimension
        )));
    }
    let vertices: Vec<CurveVertex> = sub
        .cells
        .iter()
        .enumerate()
        .map(|(k, c)| CurveVertex { point: c.dual_vertex(), cell: k })
        .collect();
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for (k, e) in sub.edges.iter().enumerate() {
        let d = e.b.sub(e.a);
        let weight = e.integer_length();
        let normal = primitive((-d.1, d.0));
        if e.is_boundary() {
            let c = e.cells[0];
            // orient the side counterclockwise around its cell
            let (a, b) = sub.cells[c]
                .polygon
                .sides()
                .into_iter()
                .find(|&(a, b)| (a == e.a && b == e.b) || (a == e.b && b == e.a))
                .expect("edge is a side of its cell");
            let ccw = primitive(b.sub(a));
            rays.push(CurveRay { from: c, direction: (ccw.1, -ccw.0), weight, dual: k });
        } else {
            let (c1, c2) = (e.cells[0], e.cells[1]);
            let (p1, p2) = (&vertices[c1].point, &vertices[c2].point);
            let s = sign(&((&p2.0 - &p1.0) * q(normal.0) + (&p2.1 - &p1.1) * q(normal.1)));
            debug_assert!(s != 0);
            let direction = if s > 0 { normal } else { (-normal.0, -normal.1) };
            edges.push(CurveEdge { from: c1, to: c2, direction, weight, dual: k });
        }
    }
    let curve = TropicalCurve { subdivision: sub.clone(), vertices, edges, rays };
    for v in 0..curve.vertices.len() {
        if curve.balancing_sum(v) != (0, 0) {
            return Err(Error::Degenerate(format!("vertex {v} is not balanced")));
        }
    }
    Ok(curve)
}

impl TropicalCurve {
    /// Pieces at vertex `v` with their primitive outgoing directions.
    pub fn incident(&self, v: usize) -> Vec<(Piece, (i64, i64))> {
        let mut out = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            if e.from == v {
                out.push((Piece::Edge(k), e.direction));
            }
            if e.to == v {
                out.push((Piece::Edge(k), (-e.direction.0, -e.direction.1)));
            }
        }
        for (k, r) in self.rays.iter().enumerate() {
            if r.from == v {
                out.push((Piece::Ray(k), r.direction));
            }
        }
        out
    }

    pub fn weight(&self, p: Piece) -> i64 {
        match p {
            Piece::Edge(k) => self.edges[k].weight,
            Piece::Ray(k) => self.rays[k].weight,
        }
    }

    pub fn direction(&self, p: Piece) -> (i64, i64) {
        match p {
            Piece::Edge(k) => self.edges[k].direction,
            Piece::Ray(k) => self.rays[k].direction,
        }
    }

    pub fn dual(&self, p: Piece) -> usize {
        match p {
            Piece::Edge(k) => self.edges[k].dual,
            Piece::Ray(k) => self.rays[k].dual,
        }
    }

    /// The piece dual to subdivision edge `dual`.
    pub fn piece_for_dual(&self, dual: usize) -> Option<Piece> {
        if let Some(k) = self.edges.iter().position(|e| e.dual == dual) {
            return Some(Piece::Edge(k));
        }
        self.rays.iter().position(|r| r.dual == dual).map(Piece::Ray)
    }

    /// Starting vertex of the piece and, for bounded edges, the end vertex.
    pub fn endpoints(&self, p: Piece) -> (usize, Option<usize>) {
        match p {
            Piece::Edge(k) => (self.edges[k].from, Some(self.edges[k].to)),
            Piece::Ray(k) => (self.rays[k].from, None),
        }
    }

    /// `Σ weight · outgoing direction` at vertex `v`.
    pub fn balancing_sum(&self, v: usize) -> (i64, i64) {
        self.incident(v).into_iter().fold((0, 0), |acc, (p, d)| {
            let w = self.weight(p);
            (acc.0 + w * d.0, acc.1 + w * d.1)
        })
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.balancing_sum(v) == (0, 0))
    }

    /// Whether `p` lies on the closed piece.
    pub fn piece_contains(&self, piece: Piece, p: (&Q, &Q)) -> bool {
        let (a, b) = self.endpoints(piece);
        let s = &self.vertices[a].point;
        let d = self.direction(piece);
        let (dx, dy) = (p.0 - &s.0, p.1 - &s.1);
        if &dx * q(d.1) != &dy * q(d.0) {
            return false;
        }
        let t = &dx * q(d.0) + &dy * q(d.1);
        if t < q(0) {
            return false;
        }
        match b {
            None => true,
            Some(b) => {
                let e = &self.vertices[b].point;
                let len = (&e.0 - &s.0) * q(d.0) + (&e.1 - &s.1) * q(d.1);
                t <= len
            }
        }
    }

    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        (0..self.edges.len())
            .map(Piece::Edge)
            .chain((0..self.rays.len()).map(Piece::Ray))
    }

    pub fn contains(&self, p: (&Q, &Q)) -> bool {
        self.pieces().any(|pc| self.piece_contains(pc, p))
    }
}

/// A maximal union of consecutive pieces on one line, ordered along
/// `direction`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LongEdge {
    pub direction: PrimitiveDirection,
    pub pieces: Vec<Piece>,
    /// Curve vertices on the long edge in order along `direction`.
    pub vertices: Vec<usize>,
}

impl LongEdge {
    /// Whether the first piece is a ray running off against `direction`.
    pub fn infinite_left(&self, curve: &TropicalCurve) -> bool {
        matches!(self.pieces.first(), Some(&Piece::Ray(k)) if self.points_back(curve.rays[k].direction))
    }

    pub fn infinite_right(&self, curve: &TropicalCurve) -> bool {
        matches!(self.pieces.last(), Some(&Piece::Ray(k)) if !self.points_back(curve.rays[k].direction))
    }

    fn points_back(&self, d: (i64, i64)) -> bool {
        d.0 * self.direction.u1() + d.1 * self.direction.u2() < 0
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Chains pieces that continue each other straight through a vertex.
pub fn maximal_long_edges(curve: &TropicalCurve) -> Vec<LongEdge> {
    let all: Vec<Piece> = curve.pieces().collect();
    let index: BTreeMap<Piece, usize> = all.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let mut uf = UnionFind((0..all.len()).collect());
    for v in 0..curve.vertices.len() {
        let inc = curve.incident(v);
        for (x, (p1, d1)) in inc.iter().enumerate() {
            for (p2, d2) in &inc[x + 1..] {
                if d1.0 == -d2.0 && d1.1 == -d2.1 {
                    uf.union(index[p1], index[p2]);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Piece>> = BTreeMap::new();
    for (k, p) in all.iter().enumerate() {
        groups.entry(uf.find(k)).or_default().push(*p);
    }
    groups
        .into_values()
        .map(|pieces| order_long_edge(curve, pieces))
        .collect()
}

fn order_long_edge(curve: &TropicalCurve, pieces: Vec<Piece>) -> LongEdge {
    let d = curve.direction(pieces[0]);
    let u = PrimitiveDirection::new(d.0, d.1).unwrap();
    let pos = |v: usize| {
        let p = &curve.vertices[v].point;
        &p.0 * q(u.u1()) + &p.1 * q(u.u2())
    };
    let mut keyed: Vec<(i32, Q, Piece)> = pieces
        .into_iter()
        .map(|pc| {
            let (a, b) = curve.endpoints(pc);
            let dir = curve.direction(pc);
            let forward = dir.0 * u.u1() + dir.1 * u.u2() > 0;
            match b {
                Some(b) => (1, pos(a).min(pos(b)), pc),
                None if forward => (2, pos(a), pc),
                None => (0, pos(a), pc),
            }
        })
        .collect();
    keyed.sort();
    let mut verts: Vec<(Q, usize)> = Vec::new();
    for (_, _, pc) in &keyed {
        let (a, b) = curve.endpoints(*pc);
        for v in std::iter::once(a).chain(b) {
            if !verts.iter().any(|(_, w)| *w == v) {
                verts.push((pos(v), v));
            }
        }
    }
    verts.sort();
    LongEdge {
        direction: u,
        pieces: keyed.into_iter().map(|(_, _, p)| p).collect(),
        vertices: verts.into_iter().map(|(_, v)| v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::tropical::tests::example_support;
    use crate::tropical::{lift_and_subdivide, LiftedSupport};

    fn curve_of(pairs: &[((i64, i64), i64)]) -> TropicalCurve {
        let ls = LiftedSupport::from_pairs(pairs.iter().map(|&(p, h)| (p, q(h)))).unwrap();
        dual_curve(&lift_and_subdivide(&ls)).unwrap()
    }

    #[test]
    fn example_vertices_and_weights() {
        let c = dual_curve(&lift_and_subdivide(&example_support())).unwrap();
        let pts: Vec<_> = c.vertices.iter().map(|v| v.point.clone()).collect();
        assert_eq!(pts, vec![(q(-2), q(0)), (q(1), q(0)), (q(4), q(0))]);
        let mut w: Vec<_> = c.edges.iter().map(|e| (e.from, e.to, e.weight)).collect();
        w.sort();
        assert_eq!(w, vec![(0, 1, 3), (1, 2, 2)]);
        assert!(c.is_balanced());
        assert_eq!(c.rays.len(), c.subdivision.edges.iter().filter(|e| e.is_boundary()).count());
    }

    #[test]
    fn line_star() {
        let c = curve_of(&[((0, 0), 0), ((1, 0), 0), ((0, 1), 0)]);
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.vertices[0].point, (q(0), q(0)));
        let mut dirs: Vec<_> = c.rays.iter().map(|r| r.direction).collect();
        dirs.sort();
        assert_eq!(dirs, vec![(-1, 0), (0, -1), (1, 1)]);
        assert_eq!(maximal_long_edges(&c).len(), 3);
    }

    #[test]
    fn example_long_edge() {
        let c = dual_curve(&lift_and_subdivide(&example_support())).unwrap();
        let long = maximal_long_edges(&c);
        let horiz: Vec<_> = long.iter().filter(|l| l.direction == PrimitiveDirection::E1).collect();
        assert_eq!(horiz.len(), 1);
        let h = horiz[0];
        assert_eq!(h.pieces.len(), 3);
        assert!(h.infinite_left(&c) && !h.infinite_right(&c));
        assert_eq!(h.vertices, vec![0, 1, 2]);
        let total: usize = long.iter().map(|l| l.pieces.len()).sum();
        assert_eq!(total, c.edges.len() + c.rays.len());
    }

    #[test]
    fn straight_line_is_one_long_edge() {
        // flat unit square: a horizontal and a vertical line through the origin
        let c = curve_of(&[((0, 0), 0), ((1, 0), 0), ((0, 1), 0), ((1, 1), 0)]);
        let long = maximal_long_edges(&c);
        assert_eq!(long.len(), 2);
        assert!(long.iter().all(|l| l.pieces.len() == 2));
    }

    #[test]
    fn membership() {
        let c = dual_curve(&lift_and_subdivide(&example_support())).unwrap();
        assert!(c.contains((&q(0), &q(0))));
        assert!(c.contains((&q(-100), &q(0))));
        assert!(!c.contains((&q(10), &q(10))));
    }
}
