use std::collections::BTreeSet;

use serde::Serialize;

use crate::rational::{q, Q};
use crate::tropical::{classify_point, LiftedSupport, PointClass, RegularSubdivision};

/// Subdivision edges whose endpoints tie at the query point, i.e. edges
/// whose dual curve edge lies on a line through it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepSet {
    /// Indices into `RegularSubdivision::edges`.
    pub edges: Vec<usize>,
}

fn value_at(ls: &LiftedSupport, p: crate::lattice::LatticePoint, x: (&Q, &Q)) -> Q {
    ls.height(p).expect("edge endpoint in support") + q(p.i) * x.0 + q(p.j) * x.1
}

pub fn dep_edges(sub: &RegularSubdivision, ls: &LiftedSupport, x: (&Q, &Q)) -> DepSet {
    let edges = sub
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| value_at(ls, e.a, x) == value_at(ls, e.b, x))
        .map(|(k, _)| k)
        .collect();
    DepSet { edges }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InflReport {
    /// Total area of the cells incident to a dependent edge.
    #[serde(with = "crate::rational::serde_q")]
    pub star_infl: Q,
    /// `star_infl + area(d(P))` at a vertex, `star_infl` elsewhere.
    #[serde(with = "crate::rational::serde_q")]
    pub infl: Q,
    pub cells: Vec<usize>,
    /// The cell dual to the point when it is a vertex.
    pub d_of_p: Option<usize>,
}

/// Influence of the faces around a point. A point off the curve influences
/// nothing.
pub fn infl(sub: &RegularSubdivision, ls: &LiftedSupport, x: (&Q, &Q)) -> InflReport {
    let class = classify_point(ls, x);
    if !class.on_curve() {
        return InflReport { star_infl: q(0), infl: q(0), cells: Vec::new(), d_of_p: None };
    }
    let dep = dep_edges(sub, ls, x);
    let cells: BTreeSet<usize> = dep
        .edges
        .iter()
        .flat_map(|&k| sub.edges[k].cells.iter().copied())
        .collect();
    let star_infl: Q = cells.iter().map(|&c| sub.cells[c].polygon.area()).sum();
    let d_of_p = match &class {
        PointClass::Vertex { cell } => sub.find_cell(cell),
        _ => None,
    };
    let infl = match d_of_p {
        Some(c) => &star_infl + sub.cells[c].polygon.area(),
        None => star_infl.clone(),
    };
    InflReport { star_infl, infl, cells: cells.into_iter().collect(), d_of_p }
}
