use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, LatticePoint, LatticePolygon};
use crate::puiseux::{LaurentPolynomial, UnimodularMap};
use crate::rational::{fmt_q, parse_q, q, Q};

/// Support points of a curve with the valuations of their coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftedSupport {
    heights: BTreeMap<LatticePoint, Q>,
}

impl LiftedSupport {
    pub fn new(heights: BTreeMap<LatticePoint, Q>) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Self { heights })
    }

    pub fn from_pairs<I, P>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Q)>,
        P: Into<LatticePoint>,
    {
        Self::new(pairs.into_iter().map(|(p, h)| (p.into(), h)).collect())
    }

    /// Heights `val(a_ij)` of the nonzero coefficients.
    pub fn from_polynomial(f: &LaurentPolynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let heights = f
            .terms()
            .map(|(&(i, j), c)| {
                let v = c.valuation();
                (LatticePoint::new(i, j), v.finite().expect("nonzero coefficient").clone())
            })
            .collect();
        Ok(Self { heights })
    }

    pub fn heights(&self) -> &BTreeMap<LatticePoint, Q> {
        &self.heights
    }

    pub fn height(&self, p: LatticePoint) -> Option<&Q> {
        self.heights.get(&p)
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.heights.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn newton_polygon(&self) -> LatticePolygon {
        convex_hull(&self.points()).expect("non-empty support")
    }

    /// Moves every exponent by `m`; the curve moves by `m.dual()`.
    pub fn transformed(&self, m: &UnimodularMap) -> Self {
        let heights = self
            .heights
            .iter()
            .map(|(p, h)| (LatticePoint::from(m.apply((p.i, p.j))), h.clone()))
            .collect();
        Self { heights }
    }

    /// Heights `h − ⟨a, v⟩`, which translates the tropical curve by `+v`.
    pub fn translated(&self, v: (&Q, &Q)) -> Self {
        let heights = self
            .heights
            .iter()
            .map(|(p, h)| (*p, h - q(p.i) * v.0 - q(p.j) * v.1))
            .collect();
        Self { heights }
    }

    /// Adds a constant to every height; the curve is unchanged.
    pub fn raised(&self, c: &Q) -> Self {
        let heights = self.heights.iter().map(|(p, h)| (*p, h + c)).collect();
        Self { heights }
    }

    pub fn to_json(&self) -> SupportJson {
        SupportJson {
            heights: self
                .heights
                .iter()
                .map(|(p, h)| HeightJson { point: *p, height: fmt_q(h) })
                .collect(),
        }
    }

    pub fn from_json(json: &SupportJson) -> Result<Self> {
        let mut heights = BTreeMap::new();
        for e in &json.heights {
            heights.insert(e.point, parse_q(&e.height)?);
        }
        Self::new(heights)
    }
}

/// `{"heights": [{"point": [i, j], "height": "p/q"}, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportJson {
    pub heights: Vec<HeightJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightJson {
    pub point: LatticePoint,
    pub height: String,
}

/// `max (iX + jY + h_ij)` and every support point attaining it.
pub fn eval_tropical(ls: &LiftedSupport, x: &Q, y: &Q) -> (Q, BTreeSet<LatticePoint>) {
    let mut best: Option<Q> = None;
    let mut arg = BTreeSet::new();
    for (p, h) in &ls.heights {
        let v = q(p.i) * x + q(p.j) * y + h;
        match &best {
            Some(b) if &v < b => {}
            Some(b) if &v == b => {
                arg.insert(*p);
            }
            _ => {
                best = Some(v);
                arg.clear();
                arg.insert(*p);
            }
        }
    }
    (best.expect("non-empty support"), arg)
}

/// Position of a point relative to the tropical curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointClass {
    /// Off the curve, in the region where the monomial `monomial` dominates.
    Region { monomial: LatticePoint },
    /// In the relative interior of the edge dual to the segment `a–b`.
    EdgeInterior { a: LatticePoint, b: LatticePoint },
    /// At the vertex dual to `cell`.
    Vertex { cell: LatticePolygon },
}

impl PointClass {
    pub fn on_curve(&self) -> bool {
        !matches!(self, PointClass::Region { .. })
    }
}

/// Classifies by the dimension of the hull of the maximising monomials.
pub fn classify_point(ls: &LiftedSupport, p: (&Q, &Q)) -> PointClass {
    let (_, arg) = eval_tropical(ls, p.0, p.1);
    let pts: Vec<_> = arg.into_iter().collect();
    let hull = convex_hull(&pts).unwrap();
    match hull.dimension() {
        0 => PointClass::Region { monomial: pts[0] },
        1 => PointClass::EdgeInterior { a: hull.vertices()[0], b: hull.vertices()[1] },
        _ => PointClass::Vertex { cell: hull },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::parse_polynomial;
    use crate::tropical::tests::example_support;

    fn lp(i: i64, j: i64) -> LatticePoint {
        LatticePoint::new(i, j)
    }

    #[test]
    fn heights_from_polynomial() {
        let f = parse_polynomial("t^-3 x + (2 + t) y + 5").unwrap();
        let ls = LiftedSupport::from_polynomial(&f).unwrap();
        assert_eq!(ls.height(lp(1, 0)), Some(&q(3)));
        assert_eq!(ls.height(lp(0, 1)), Some(&q(0)));
        assert!(LiftedSupport::from_polynomial(&LaurentPolynomial::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        let ls = example_support();
        let (v, arg) = eval_tropical(&ls, &q(0), &q(0));
        assert_eq!(v, q(3));
        assert_eq!(arg.into_iter().collect::<Vec<_>>(), vec![lp(1, 0), lp(1, 1), lp(1, 2), lp(1, 3)]);
        let (v, arg) = eval_tropical(&ls, &q(-2), &q(0));
        assert_eq!(v, q(1));
        assert_eq!(arg.len(), 6);
        assert!(arg.contains(&lp(0, 0)) && arg.contains(&lp(0, 1)));
    }

    #[test]
    fn classification() {
        let ls = example_support();
        assert_eq!(classify_point(&ls, (&q(0), &q(0))), PointClass::EdgeInterior { a: lp(1, 0), b: lp(1, 3) });
        assert!(matches!(classify_point(&ls, (&q(-2), &q(0))), PointClass::Vertex { .. }));
        assert_eq!(classify_point(&ls, (&q(10), &q(10))), PointClass::Region { monomial: lp(1, 3) });
    }

    #[test]
    fn translation_moves_curve() {
        let ls = example_support();
        let moved = ls.translated((&q(5), &q(-1)));
        assert_eq!(classify_point(&moved, (&q(5), &q(-1))), classify_point(&ls, (&q(0), &q(0))));
    }

    #[test]
    fn json_round_trip() {
        let ls = example_support();
        let back = LiftedSupport::from_json(&ls.to_json()).unwrap();
        assert_eq!(back, ls);
    }
}
