use std::fmt;

use serde::{Serialize, Serializer};

use super::conditions::{complementary_pairs_check, g_hat_condition_local, preparation_check_local, LocalPicture};
use super::influence::infl;
use super::sweep::thickness_sweep;
use crate::error::{Error, Result};
use crate::lattice::{integer_length, minimal_lattice_width, PrimitiveDirection};
use crate::puiseux::LaurentPolynomial;
use crate::rational::{fmt_q, q, qf, Q};
use crate::tropical::{LiftedSupport, PointClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl CheckStatus {
    fn of(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not-applicable",
        })
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub value: Option<String>,
    pub bound: Option<String>,
    pub witness: Option<String>,
    /// Reported only; never affects the verdict.
    #[serde(skip_serializing_if = "is_false")]
    pub informational: bool,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, value: impl ToString, bound: impl ToString) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::of(ok),
            value: Some(value.to_string()),
            bound: Some(bound.to_string()),
            witness: None,
            informational: false,
        }
    }

    fn skipped(name: impl Into<String>, why: &str) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::NotApplicable,
            value: None,
            bound: None,
            witness: Some(why.to_string()),
            informational: false,
        }
    }

    fn witness_if_failed(mut self, w: impl FnOnce() -> String) -> Self {
        if self.status == CheckStatus::Fail {
            self.witness = Some(w());
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Some necessary condition fails on an admissible curve.
    Refuted,
    /// Every applicable necessary condition holds.
    Consistent,
    /// The curve is not admissible, so the conditions do not apply.
    InconclusiveInadmissible,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Refuted => "refuted",
            Verdict::Consistent => "consistent",
            Verdict::InconclusiveInadmissible => "inconclusive: inadmissible",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub m: i64,
    #[serde(with = "crate::rational::serde_qpair")]
    pub point: (Q, Q),
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail && !c.informational)
    }
}

/// Necessary conditions for the point `p` to be the tropicalization of a
/// point of multiplicity `m` on the curve `F = 0`.
pub fn exertion_certificate(f: &LaurentPolynomial, p: (&Q, &Q), m: i64) -> Result<Certificate> {
    if m < 1 {
        return Err(Error::OutOfDomain(format!("multiplicity {m}")));
    }
    let ls = LiftedSupport::from_polynomial(f)?;
    Ok(certificate_for_support(&ls, p, m))
}

pub fn certificate_for_support(ls: &LiftedSupport, p: (&Q, &Q), m: i64) -> Certificate {
    let mut checks = Vec::new();
    let (width, wdir) = minimal_lattice_width(&ls.points()).expect("non-empty support");
    let admissible = width >= m;
    checks.push(Check::new("admissibility", admissible, width, m).witness_if_failed(|| format!("direction {wdir}")));

    let pic = LocalPicture::new(ls, p);
    let on_curve = pic.class.on_curve();
    let class_name = match &pic.class {
        PointClass::Region { monomial } => format!("region of monomial {monomial}"),
        PointClass::EdgeInterior { .. } => "edge interior".to_string(),
        PointClass::Vertex { .. } => "vertex".to_string(),
    };
    checks.push(Check {
        name: "point_on_curve".into(),
        status: CheckStatus::of(on_curve),
        value: Some(class_name),
        bound: None,
        witness: None,
        informational: false,
    });

    let sweep = thickness_sweep(&pic.support, m);
    checks.push(
        Check::new("thickness_sweep", sweep.pass, sweep.levels_checked - sweep.failures.len(), sweep.levels_checked)
            .witness_if_failed(|| {
                let f = &sweep.failures[0];
                match f.witness {
                    Some(u) => format!("level {} direction {u}", fmt_q(&f.mu)),
                    None => format!("level {}", fmt_q(&f.mu)),
                }
            }),
    );

    let m2 = q(m * m);
    match (&pic.class, pic.curve.as_ref()) {
        (PointClass::EdgeInterior { a, b }, Some(curve)) => {
            let report = infl(&pic.subdivision, &pic.support, (&q(0), &q(0)));
            checks.push(Check::new("infl", report.infl >= &m2 / q(2), fmt_q(&report.infl), fmt_q(&(&m2 / q(2)))));
            let len = integer_length(*a, *b);
            checks.push(
                Check::new("edge_length", len >= m, len, m).witness_if_failed(|| format!("d(E) length {len} < {m}")),
            );
            let d = b.sub(*a);
            let u = PrimitiveDirection::new(-d.1, d.0).unwrap();
            push_long_edge_checks(&mut checks, &pic, u, m, false);
            push_complementary(&mut checks, curve, m);
        }
        (PointClass::Vertex { .. }, Some(curve)) => {
            let report = infl(&pic.subdivision, &pic.support, (&q(0), &q(0)));
            let b1 = &m2 * qf(3, 8);
            checks.push(Check::new("star_infl", report.star_infl >= b1, fmt_q(&report.star_infl), fmt_q(&b1)));
            let b2 = &m2 / q(2);
            checks.push(Check::new("infl", report.infl >= b2, fmt_q(&report.infl), fmt_q(&b2)));
            push_complementary(&mut checks, curve, m);
            for u in pic.directions_through() {
                push_long_edge_checks(&mut checks, &pic, u, m, true);
            }
        }
        _ => {
            let why = if on_curve { "degenerate Newton polygon" } else { "point is off the curve" };
            for name in ["infl", "local_conditions"] {
                checks.push(Check::skipped(name, why));
            }
        }
    }

    let refuted = checks
        .iter()
        .any(|c| c.name != "admissibility" && c.status == CheckStatus::Fail && !c.informational);
    let verdict = if !admissible {
        Verdict::InconclusiveInadmissible
    } else if refuted {
        Verdict::Refuted
    } else {
        Verdict::Consistent
    };
    Certificate { verdict, m, point: (p.0.clone(), p.1.clone()), checks }
}

fn push_complementary(checks: &mut Vec<Check>, curve: &crate::tropical::TropicalCurve, m: i64) {
    let pairs = complementary_pairs_check(curve, (&q(0), &q(0)), m);
    let worst = pairs.iter().map(|p| p.distance + p.max_weight).min();
    let ok = pairs.iter().all(|p| p.pass);
    let value = worst.map_or("none".to_string(), |w| w.to_string());
    checks.push(Check::new("complementary_pairs", ok, value, m).witness_if_failed(|| {
        let p = pairs.iter().find(|p| !p.pass).unwrap();
        format!(
            "{:?} and {:?}: distance {} + weight {}",
            p.first, p.second, p.distance, p.max_weight
        )
    }));
}

fn push_long_edge_checks(checks: &mut Vec<Check>, pic: &LocalPicture, u: PrimitiveDirection, m: i64, vertex: bool) {
    match g_hat_condition_local(pic, u, m) {
        Ok(r) => {
            let worst = r
                .entries
                .iter()
                .map(|e| q(e.weight) + &e.g_hat)
                .min()
                .unwrap();
            let ok = r.entries.iter().all(|e| e.pass);
            checks.push(Check::new(format!("g_hat {u}"), ok, fmt_q(&worst), m).witness_if_failed(|| {
                let xs: Vec<String> = r.entries.iter().filter(|e| !e.pass).map(|e| e.x.to_string()).collect();
                format!("columns x = {}", xs.join(", "))
            }));
            checks.push(Check::new(format!("span {u}"), r.span_pass, r.span, m));
        }
        Err(e) => checks.push(Check::skipped(format!("g_hat {u}"), &e.to_string())),
    }
    if vertex {
        match preparation_check_local(pic, u, m) {
            Ok(r) => {
                checks.push(
                    Check::new(format!("preparation {u}"), r.pass, fmt_q(&r.sum), fmt_q(&r.bound))
                        .witness_if_failed(|| format!("defect {}", r.defect)),
                );
                let mut strong = Check::new(
                    format!("preparation_strong {u}"),
                    r.strong_holds,
                    fmt_q(&r.sum),
                    r.defect * r.defect,
                );
                strong.informational = true;
                checks.push(strong);
            }
            Err(e) => checks.push(Check::skipped(format!("preparation {u}"), &e.to_string())),
        }
    }
}
