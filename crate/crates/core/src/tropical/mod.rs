//! Tropicalization: the regular subdivision induced by coefficient
//! valuations, the dual tropical curve, point classification, long edges and
//! the height profiles along them.

mod curve;
mod profile;
mod subdivision;
mod support;

pub use curve::{dual_curve, maximal_long_edges, CurveEdge, CurveRay, CurveVertex, LongEdge, Piece, TropicalCurve};
pub use profile::{g_hat, g_hat_integral, g_profile, GProfile};
pub use subdivision::{lift_and_subdivide, Cell, RegularSubdivision, SubdivisionEdge};
pub use support::{classify_point, eval_tropical, HeightJson, LiftedSupport, PointClass, SupportJson};

/// Subdivision and curve in one JSON document.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TropicalizationJson<'a> {
    /// The Newton polygon is a point or a segment; there is no curve.
    pub degenerate: bool,
    pub subdivision: &'a RegularSubdivision,
    pub curve: Option<&'a TropicalCurve>,
}

impl<'a> TropicalizationJson<'a> {
    pub fn new(subdivision: &'a RegularSubdivision, curve: Option<&'a TropicalCurve>) -> Self {
        Self { degenerate: subdivision.is_degenerate(), subdivision, curve }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::q;

    /// Heights of the worked example with three collinear vertices.
    pub(crate) fn example_support() -> LiftedSupport {
        let mut v = Vec::new();
        for j in 0..4 {
            v.push(((1, j), q(3)));
        }
        for j in 0..3 {
            v.push(((2, j), q(2)));
        }
        v.push(((0, 0), q(1)));
        v.push(((0, 1), q(1)));
        v.push(((3, 0), q(-2)));
        LiftedSupport::from_pairs(v).unwrap()
    }
}
