use std::collections::BTreeMap;

use serde::Serialize;

use super::support::LiftedSupport;
use crate::error::{Error, Result};
use crate::puiseux::UnimodularMap;
use crate::rational::{fmt_q, q, qf, Q};

/// Concave piecewise linear profile given by its breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GProfile {
    breakpoints: Vec<(Q, Q)>,
}

impl Serialize for GProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[String; 2]> = self.breakpoints.iter().map(|(x, y)| [fmt_q(x), fmt_q(y)]).collect();
        v.serialize(s)
    }
}

impl GProfile {
    /// Upper concave envelope of the given points; collinear breakpoints
    /// are dropped.
    pub fn envelope(points: &[(Q, Q)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut pts: Vec<(Q, Q)> = points.to_vec();
        pts.sort();
        // keep the highest value per abscissa
        pts.reverse();
        pts.dedup_by(|a, b| a.0 == b.0);
        pts.reverse();
        let mut hull: Vec<(Q, Q)> = Vec::new();
        for p in pts {
            while hull.len() >= 2 {
                let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
                let turn = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
                if turn >= q(0) {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        Ok(Self { breakpoints: hull })
    }

    pub fn breakpoints(&self) -> &[(Q, Q)] {
        &self.breakpoints
    }

    pub fn domain(&self) -> (Q, Q) {
        (self.breakpoints[0].0.clone(), self.breakpoints.last().unwrap().0.clone())
    }

    pub fn length(&self) -> Q {
        let (a, b) = self.domain();
        b - a
    }

    pub fn max_value(&self) -> Q {
        self.breakpoints.iter().map(|p| p.1.clone()).max().unwrap()
    }

    /// Slopes of the linear pieces, strictly decreasing.
    pub fn slopes(&self) -> Vec<Q> {
        self.breakpoints
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
            .collect()
    }

    pub fn value_at(&self, x: &Q) -> Result<Q> {
        let (a, b) = self.domain();
        if x < &a || x > &b {
            return Err(Error::OutOfDomain(fmt_q(x)));
        }
        if self.breakpoints.len() == 1 {
            return Ok(self.breakpoints[0].1.clone());
        }
        for w in self.breakpoints.windows(2) {
            if x <= &w[1].0 {
                let t = (x - &w[0].0) / (&w[1].0 - &w[0].0);
                return Ok(&w[0].1 + t * (&w[1].1 - &w[0].1));
            }
        }
        unreachable!()
    }

    /// The interval `{y : g(y) ≥ level}` for `level ≤ max g`.
    pub fn superlevel(&self, level: &Q) -> Option<(Q, Q)> {
        if level > &self.max_value() {
            return None;
        }
        let bp = &self.breakpoints;
        let crossing = |p: &(Q, Q), r: &(Q, Q)| &p.0 + (level - &p.1) * (&r.0 - &p.0) / (&r.1 - &p.1);
        let mut left = None;
        if &bp[0].1 >= level {
            left = Some(bp[0].0.clone());
        } else {
            for w in bp.windows(2) {
                if &w[1].1 >= level {
                    left = Some(crossing(&w[0], &w[1]));
                    break;
                }
            }
        }
        let n = bp.len();
        let mut right = None;
        if &bp[n - 1].1 >= level {
            right = Some(bp[n - 1].0.clone());
        } else {
            for k in (0..n - 1).rev() {
                if &bp[k].1 >= level {
                    right = Some(crossing(&bp[k + 1], &bp[k]));
                    break;
                }
            }
        }
        Some((left?, right?))
    }
}

/// Profile of the maximal height over each column `{x = const}` after
/// moving exponents by `m`; `x` is the first coordinate of `m·(i, j)`.
pub fn g_profile(ls: &LiftedSupport, m: &UnimodularMap) -> GProfile {
    let mut cols: BTreeMap<i64, Q> = BTreeMap::new();
    for (p, h) in ls.heights() {
        let x = m.apply((p.i, p.j)).0;
        let e = cols.entry(x).or_insert_with(|| h.clone());
        if h > e {
            *e = h.clone();
        }
    }
    let pts: Vec<(Q, Q)> = cols.into_iter().map(|(x, h)| (q(x), h)).collect();
    GProfile::envelope(&pts).expect("non-empty support")
}

/// Length of `{y : g(y) ≥ g(x)}`.
pub fn g_hat(g: &GProfile, x: &Q) -> Result<Q> {
    let level = g.value_at(x)?;
    let (l, r) = g.superlevel(&level).expect("g(x) is attained");
    Ok(r - l)
}

/// Exact integral of `ĝ` over the domain.
///
/// `ĝ` is linear between consecutive points of the refinement of the
/// breakpoints by the places where the opposite side of the profile reaches
/// a breakpoint level, so the trapezoid rule on that refinement is exact.
pub fn g_hat_integral(g: &GProfile) -> Q {
    let mut xs: Vec<Q> = Vec::new();
    for (x, level) in g.breakpoints() {
        xs.push(x.clone());
        let (l, r) = g.superlevel(level).unwrap();
        xs.push(l);
        xs.push(r);
    }
    xs.sort();
    xs.dedup();
    let vals: Vec<Q> = xs.iter().map(|x| g_hat(g, x).unwrap()).collect();
    let mut total = q(0);
    for k in 1..xs.len() {
        total += (&xs[k] - &xs[k - 1]) * (&vals[k] + &vals[k - 1]) * qf(1, 2);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::tests::example_support;

    fn profile(v: &[(i64, i64)]) -> GProfile {
        GProfile::envelope(&v.iter().map(|&(x, y)| (q(x), q(y))).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn example_profile() {
        let g = g_profile(&example_support(), &UnimodularMap::IDENTITY);
        let want: Vec<(Q, Q)> = [(0, 1), (1, 3), (2, 2), (3, -2)].iter().map(|&(a, b)| (q(a), q(b))).collect();
        assert_eq!(g.breakpoints(), &want[..]);
        assert_eq!(g.slopes(), vec![q(2), q(-1), q(-4)]);
        assert_eq!(g_hat(&g, &q(1)).unwrap(), q(0));
        assert_eq!(g_hat(&g, &q(0)).unwrap(), qf(9, 4));
        assert_eq!(g_hat(&g, &q(3)).unwrap(), q(3));
        assert!(g_hat(&g, &q(4)).is_err());
        assert_eq!(g_hat_integral(&g), qf(9, 2));
    }

    #[test]
    fn envelope_drops_collinear_and_low_points() {
        let g = profile(&[(0, 0), (1, 1), (2, 2), (1, -5), (3, 0)]);
        assert_eq!(g.breakpoints().len(), 3);
        let g = profile(&[(0, 4), (2, 4), (5, 4)]);
        assert_eq!(g.breakpoints().len(), 2);
    }

    #[test]
    fn single_segment_integral() {
        for l in 1..6 {
            assert_eq!(g_hat_integral(&profile(&[(0, 0), (l, 3)])), qf(l * l, 2));
        }
    }

    #[test]
    fn plateau_integral() {
        // flat top of length p adds p²/2 to L²/2
        let g = profile(&[(0, 0), (1, 1), (3, 1), (4, 0)]);
        assert_eq!(g_hat_integral(&g), qf(16 + 4, 2));
        let g = profile(&[(0, 7), (3, 7)]);
        assert_eq!(g_hat_integral(&g), q(9));
    }
}
