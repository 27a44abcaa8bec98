//! Tensions, flows, local tensions and balanced flows of a map, counted
//! exactly over `Z_k` or over bounded integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::poly::{fit_quasipolynomial, interpolate, IntegerPolynomial, QuasiPolynomial};
use super::system::{Domain, LinearSystem};
use crate::error::{Error, Result};
use crate::ribbon::{fundamental_cycles_of, simple_cycles, AbstractGraph, Cycle, RibbonGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Zero around every cycle of the underlying graph.
    Tension,
    /// Conserved at every vertex.
    Flow,
    /// Zero on every face boundary.
    LocalTension,
    /// Zero across every cocycle.
    BalancedFlow,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Tension, Kind::Flow, Kind::LocalTension, Kind::BalancedFlow];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Tension => "tension",
            Kind::Flow => "flow",
            Kind::LocalTension => "local-tension",
            Kind::BalancedFlow => "balanced-flow",
        }
    }

    /// Dimension of the solution space over the rationals, which is the
    /// degree of the counting polynomial.
    pub fn dimension(self, g: &RibbonGraph) -> usize {
        let (v, e, f, c) = (g.vertex_count(), g.edge_count(), g.face_count(), g.component_count());
        match self {
            Kind::Tension => v - c,
            Kind::Flow => e + c - v,
            Kind::LocalTension => e + c - f,
            Kind::BalancedFlow => f - c,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown count kind {s:?}")))
    }
}

fn cycle_rows(sys: &mut LinearSystem, cycles: &[Cycle]) {
    for c in cycles {
        sys.push_row(c.steps.iter().map(|s| (s.edge, if s.forward { 1 } else { -1 })));
    }
}

/// Tension constraints from a fundamental cycle basis.
pub fn tension_system(g: &AbstractGraph) -> LinearSystem {
    let mut sys = LinearSystem::new(g.edge_count());
    cycle_rows(&mut sys, &fundamental_cycles_of(g));
    sys
}

/// Tension constraints from every simple cycle.
pub fn tension_system_all_cycles(g: &AbstractGraph) -> LinearSystem {
    let mut sys = LinearSystem::new(g.edge_count());
    cycle_rows(&mut sys, &simple_cycles(g));
    sys
}

/// Conservation at every vertex: inflow minus outflow.
pub fn flow_system(g: &AbstractGraph) -> LinearSystem {
    let mut sys = LinearSystem::new(g.edge_count());
    for v in 0..g.vertex_count() {
        sys.push_row(g.edges().iter().enumerate().flat_map(|(e, &(a, b))| {
            [(e, if b == v { 1 } else { 0 }), (e, if a == v { -1 } else { 0 })]
        }));
    }
    sys
}

pub fn local_tension_system(g: &RibbonGraph) -> LinearSystem {
    let mut sys = LinearSystem::new(g.edge_count());
    for row in g.face_matrix().rows {
        sys.push_row(row.into_iter().enumerate().map(|(e, v)| (e, v as i64)));
    }
    sys
}

/// Vertex conservation together with a fundamental cocycle basis.
pub fn balanced_flow_system(g: &RibbonGraph) -> LinearSystem {
    let mut sys = flow_system(&g.underlying());
    for c in g.fundamental_cocycles() {
        sys.push_row(c.steps.iter().map(|s| (s.edge, if s.forward { 1 } else { -1 })));
    }
    sys
}

pub fn system(g: &RibbonGraph, kind: Kind) -> LinearSystem {
    match kind {
        Kind::Tension => tension_system(&g.underlying()),
        Kind::Flow => flow_system(&g.underlying()),
        Kind::LocalTension => local_tension_system(g),
        Kind::BalancedFlow => balanced_flow_system(g),
    }
}

fn modulus(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::BadModulus(0))
    } else {
        Ok(())
    }
}

/// Number of `Z_k`-valued solutions of `kind` (nowhere-zero when asked).
pub fn count_modular(g: &RibbonGraph, kind: Kind, k: u64, nowhere_zero: bool) -> Result<u64> {
    modulus(k)?;
    system(g, kind).count(Domain::Modular(k), nowhere_zero)
}

/// Number of integer solutions of `kind` with every value below `k` in
/// absolute value (nowhere-zero when asked).
pub fn count_integral(g: &RibbonGraph, kind: Kind, k: u64, nowhere_zero: bool) -> Result<u64> {
    modulus(k)?;
    system(g, kind).count(Domain::Integral(k), nowhere_zero)
}

pub fn count_tensions(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::Tension, k, false)
}

pub fn count_flows(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::Flow, k, false)
}

pub fn count_local_tensions(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::LocalTension, k, false)
}

pub fn count_balanced_flows(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::BalancedFlow, k, false)
}

/// Nowhere-zero integral local tensions with absolute values below `k`.
pub fn count_integral_local_tensions(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_integral(g, Kind::LocalTension, k, true)
}

/// Nowhere-zero integral flows with absolute values below `k`.
pub fn count_integral_flows(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_integral(g, Kind::Flow, k, true)
}

pub fn count_nz_tensions(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::Tension, k, true)
}

pub fn count_nz_flows(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::Flow, k, true)
}

pub fn count_nz_local_tensions(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::LocalTension, k, true)
}

pub fn count_nz_balanced_flows(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_modular(g, Kind::BalancedFlow, k, true)
}

/// Balanced flows of a map are the tensions of its dual.
pub fn count_nz_balanced_flows_via_dual(g: &RibbonGraph, k: u64) -> Result<u64> {
    count_nz_tensions(&g.dual(), k)
}

/// The nowhere-zero counting polynomial, interpolated from
/// `k = 1..=|E| + 1` and checked against direct counts at two more values.
pub fn polynomial(g: &RibbonGraph, kind: Kind) -> Result<IntegerPolynomial> {
    let sys = system(g, kind);
    let m = g.edge_count() as u64;
    let count = |k: u64| sys.count(Domain::Modular(k), true);
    let points = (1..=m + 1)
        .map(|k| Ok((k as i64, count(k)? as i128)))
        .collect::<Result<Vec<_>>>()?;
    let p = interpolate(&points)?;
    for k in m + 2..=m + 3 {
        let direct = count(k)? as i128;
        if p.eval(k as i64) != direct {
            return Err(Error::NonIntegerCoefficients(format!(
                "interpolant gives {} at k = {k} but the count is {direct}",
                p.eval(k as i64)
            )));
        }
    }
    Ok(p)
}

pub fn poly_tension(g: &RibbonGraph) -> Result<IntegerPolynomial> {
    polynomial(g, Kind::Tension)
}

pub fn poly_flow(g: &RibbonGraph) -> Result<IntegerPolynomial> {
    polynomial(g, Kind::Flow)
}

pub fn poly_local_tension(g: &RibbonGraph) -> Result<IntegerPolynomial> {
    polynomial(g, Kind::LocalTension)
}

pub fn poly_balanced_flow(g: &RibbonGraph) -> Result<IntegerPolynomial> {
    polynomial(g, Kind::BalancedFlow)
}

/// The quasipolynomial counting nowhere-zero integral solutions of `kind`
/// with absolute values below `k`.
pub fn integral_quasipolynomial(g: &RibbonGraph, kind: Kind, max_period: usize) -> Result<QuasiPolynomial> {
    let sys = system(g, kind);
    fit_quasipolynomial(kind.dimension(g), max_period, |k| sys.count(Domain::Integral(k), true))
}
