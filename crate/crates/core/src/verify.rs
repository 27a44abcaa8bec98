//! Checks every duality, reciprocity and orientation identity on one map or
//! on a generated corpus, recording both sides of each comparison.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{
    check_integral_reciprocity, check_reciprocity, count_nz_balanced_flows_via_dual, count_modular,
    integral_quasipolynomial, polynomial, Kind,
};
use crate::error::Result;
use crate::generator::{generate, CorpusSpec};
use crate::orientation::{
    class_masks, count_class, cw_faces, dual_orientation, tbo_formula_with_vertex_count, tbo_generating_poly_formula,
    tbo_histogram, Orientation, OrientationClass,
};
use crate::ribbon::{EulerData, RibbonGraph};

/// Integral reciprocity is only checked up to this many edges.
pub const INTEGRAL_MAX_EDGES: usize = 4;
/// Largest period tried when fitting integral quasipolynomials.
pub const MAX_PERIOD: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, lhs: impl Serialize, rhs: impl Serialize) -> Self {
        let lhs = json!(lhs);
        let rhs = json!(rhs);
        IdentityCheck {
            name: name.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub euler: EulerData,
    pub kmax: u64,
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn counts(g: &RibbonGraph, kind: Kind, kmax: u64) -> Result<Vec<u64>> {
    (1..=kmax).map(|k| count_modular(g, kind, k, true)).collect()
}

/// The dual kind: tensions of `G` against balanced flows of the dual, and
/// local tensions against flows.
fn dual_kind(kind: Kind) -> Kind {
    match kind {
        Kind::Tension => Kind::BalancedFlow,
        Kind::BalancedFlow => Kind::Tension,
        Kind::LocalTension => Kind::Flow,
        Kind::Flow => Kind::LocalTension,
    }
}

fn class_of(kind: Kind) -> OrientationClass {
    match kind {
        Kind::Tension => OrientationClass::Ao,
        Kind::Flow => OrientationClass::Tco,
        Kind::LocalTension => OrientationClass::Bao,
        Kind::BalancedFlow => OrientationClass::Tbo,
    }
}

/// Runs the full identity suite on `g` for `k = 1..=kmax`.
pub fn verify_graph(g: &RibbonGraph, kmax: u64) -> Result<VerificationReport> {
    let d = g.dual();
    let mut checks = Vec::new();

    for kind in Kind::ALL {
        checks.push(IdentityCheck::new(
            format!("duality {kind}(G) = {}(G*)", dual_kind(kind)),
            counts(g, kind, kmax)?,
            counts(&d, dual_kind(kind), kmax)?,
        ));
    }
    checks.push(IdentityCheck::new(
        "balanced-flow two routes",
        counts(g, Kind::BalancedFlow, kmax)?,
        (1..=kmax).map(|k| count_nz_balanced_flows_via_dual(g, k)).collect::<Result<Vec<_>>>()?,
    ));

    let mut polys = BTreeMap::new();
    for kind in Kind::ALL {
        let p = polynomial(g, kind)?;
        let class = class_of(kind);
        checks.push(IdentityCheck::new(
            format!("|{kind}(-1)| = |{class}|"),
            p.eval(-1).unsigned_abs(),
            count_class(g, class)?,
        ));
        polys.insert(kind.name(), p);
    }

    for kind in Kind::ALL {
        let p = &polys[kind.name()];
        let mut pairs = Vec::new();
        let mut values = Vec::new();
        for k in 1..=kmax {
            let c = check_reciprocity(g, kind, p, k)?;
            pairs.push(c.pairs as i128);
            values.push(c.signed_value);
        }
        checks.push(IdentityCheck::new(format!("reciprocity {kind}"), pairs, values));
    }

    if g.edge_count() <= INTEGRAL_MAX_EDGES {
        let q = integral_quasipolynomial(g, Kind::LocalTension, MAX_PERIOD)?;
        let mut pairs = Vec::new();
        let mut values = Vec::new();
        for k in 0..=kmax {
            let c = check_integral_reciprocity(g, &q, k)?;
            pairs.push(c.pairs as i128);
            values.push(c.signed_value);
        }
        checks.push(IdentityCheck::new("integral reciprocity local-tension", pairs.clone(), values));
        checks.push(IdentityCheck::new(
            "integral pairs at 0 = |bao|",
            pairs[0],
            count_class(g, OrientationClass::Bao)?,
        ));
    }

    checks.extend(orientation_checks(g, &d, &polys)?);

    Ok(VerificationReport {
        graph: g.canonical_code().to_hex(),
        euler: g.euler_data(),
        kmax,
        checks,
    })
}

fn orientation_checks(
    g: &RibbonGraph,
    d: &RibbonGraph,
    polys: &BTreeMap<&str, crate::enumeration::IntegerPolynomial>,
) -> Result<Vec<IdentityCheck>> {
    let m = g.edge_count();
    let mut checks = Vec::new();
    let image = |class: OrientationClass| -> Result<BTreeSet<u64>> {
        class_masks(g, class)?
            .into_iter()
            .map(|mask| dual_orientation(g, &Orientation::from_mask(m, mask)).map(|o| o.to_mask()))
            .collect()
    };
    let target = |class: OrientationClass| -> Result<BTreeSet<u64>> { Ok(class_masks(d, class)?.into_iter().collect()) };
    for (from, to) in [(OrientationClass::Bao, OrientationClass::Tco), (OrientationClass::Ao, OrientationClass::Tbo)] {
        checks.push(IdentityCheck::new(
            format!("dual_orientation maps {from}(G) onto {to}(G*)"),
            image(from)?,
            target(to)?,
        ));
    }

    let tau_dual = polynomial(d, Kind::Tension)?;
    let tbo = count_class(g, OrientationClass::Tbo)?;
    checks.push(IdentityCheck::new(
        "|tension(G*; -1)| = |tbo(G)|",
        tau_dual.eval(-1).unsigned_abs(),
        tbo,
    ));
    debug_assert_eq!(polys["balanced-flow"], polynomial(g, Kind::BalancedFlow)?);

    let mut unique = vec![0u64; g.face_count()];
    for mask in class_masks(g, OrientationClass::Tbo)? {
        if let [f] = cw_faces(g, &Orientation::from_mask(m, mask))?[..] {
            unique[f] += 1;
        }
    }
    let constant = tau_dual.coeff(0);
    checks.push(
        IdentityCheck::new(
            "tbo with unique cw-face f = |constant term of tension(G*)|",
            &unique,
            vec![constant.unsigned_abs(); g.face_count()],
        )
        .with_note(format!("signed constant term {constant}")),
    );

    let hist = tbo_histogram(g)?.to_polynomial();
    let formula = tbo_generating_poly_formula(g)?;
    let primal_reading = tbo_formula_with_vertex_count(g, g.vertex_count())?;
    let mut check = IdentityCheck::new("cw-face histogram = subset-sum formula", hist.coeffs(), formula.coeffs());
    if primal_reading != formula {
        check = check.with_note(format!("sign taken from |V(G)| gives {}", primal_reading.display_in("q")));
    }
    checks.push(check);
    Ok(checks)
}

/// Per-identity tallies over a corpus, plus the reports of failing maps.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BatchReport {
    pub graphs: usize,
    pub failures: usize,
    pub identities: BTreeMap<String, IdentityTally>,
    pub failed: Vec<VerificationReport>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IdentityTally {
    pub pass: u64,
    pub fail: u64,
}

impl BatchReport {
    fn single(report: VerificationReport) -> Self {
        let mut out = BatchReport {
            graphs: 1,
            ..Default::default()
        };
        for c in &report.checks {
            let t = out.identities.entry(c.name.clone()).or_default();
            if c.pass {
                t.pass += 1;
            } else {
                t.fail += 1;
            }
        }
        if !report.passed() {
            out.failures = 1;
            out.failed.push(report);
        }
        out
    }

    /// Combines two reports; the result does not depend on merge order.
    pub fn merge(mut self, other: BatchReport) -> BatchReport {
        self.graphs += other.graphs;
        self.failures += other.failures;
        for (name, t) in other.identities {
            let e = self.identities.entry(name).or_default();
            e.pass += t.pass;
            e.fail += t.fail;
        }
        self.failed.extend(other.failed);
        self.failed.sort_by(|a, b| a.graph.cmp(&b.graph));
        self
    }
}

pub fn verify_batch(graphs: &[RibbonGraph], kmax: u64) -> Result<BatchReport> {
    graphs
        .par_iter()
        .map(|g| verify_graph(g, kmax).map(BatchReport::single))
        .try_reduce(BatchReport::default, |a, b| Ok(a.merge(b)))
}

pub fn verify_corpus(spec: &CorpusSpec, kmax: u64) -> Result<BatchReport> {
    verify_batch(&generate(spec)?, kmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::fixtures::*;

    #[test]
    fn torus_report() {
        let r = verify_graph(&torus(), 4).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let dual = r.checks.iter().find(|c| c.name.starts_with("duality tension")).unwrap();
        assert_eq!(dual.lhs, json!([0, 0, 0, 0]));
        let bao = r.checks.iter().find(|c| c.name == "|local-tension(-1)| = |bao|").unwrap();
        assert_eq!(bao.rhs, json!(4));
    }

    #[test]
    fn kite_and_small_corpus_pass() {
        assert!(verify_graph(&kite(), 2).unwrap().passed());
        let b = verify_corpus(&CorpusSpec::new(2), 2).unwrap();
        assert_eq!(b.failures, 0, "{:?}", b.failed);
        assert!(b.graphs > 0);
    }
}
