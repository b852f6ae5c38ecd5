use serde::Serialize;

use crate::lattice::{is_m_thick, minimal_lattice_width, LatticePoint, PrimitiveDirection};
use crate::rational::Q;
use crate::tropical::LiftedSupport;

/// The supports `A_μ = {(i,j) : h_ij ≥ μ}` at every distinct height `μ`, in
/// increasing order of `μ` (so decreasing sets).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SublevelFamily {
    pub levels: Vec<SublevelSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SublevelSet {
    #[serde(with = "crate::rational::serde_q")]
    pub mu: Q,
    pub support: Vec<LatticePoint>,
}

pub fn support_at_least(ls: &LiftedSupport, mu: &Q) -> Vec<LatticePoint> {
    ls.heights()
        .iter()
        .filter(|(_, h)| *h >= mu)
        .map(|(p, _)| *p)
        .collect()
}

pub fn sublevel_family(ls: &LiftedSupport) -> SublevelFamily {
    let mut mus: Vec<Q> = ls.heights().values().cloned().collect();
    mus.sort();
    mus.dedup();
    let levels = mus
        .into_iter()
        .map(|mu| SublevelSet { support: support_at_least(ls, &mu), mu })
        .collect();
    SublevelFamily { levels }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    #[serde(with = "crate::rational::serde_q")]
    pub mu: Q,
    pub witness: Option<PrimitiveDirection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub pass: bool,
    pub levels_checked: usize,
    pub failures: Vec<SweepFailure>,
}

/// m-thickness of every `A_μ`. Between consecutive distinct heights the set
/// does not change, so the distinct heights suffice.
pub fn thickness_sweep(ls: &LiftedSupport, m: i64) -> SweepReport {
    let fam = sublevel_family(ls);
    let failures: Vec<SweepFailure> = fam
        .levels
        .iter()
        .filter_map(|lvl| {
            let t = is_m_thick(&lvl.support, m);
            (!t.thick).then(|| SweepFailure { mu: lvl.mu.clone(), witness: t.witness })
        })
        .collect();
    SweepReport { pass: failures.is_empty(), levels_checked: fam.levels.len(), failures }
}

/// `ω(A) ≥ m`.
pub fn is_admissible(support: &[LatticePoint], m: i64) -> bool {
    match minimal_lattice_width(support) {
        Ok((w, _)) => w >= m,
        Err(_) => false,
    }
}
