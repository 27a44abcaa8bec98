//! Combinatorial reciprocity: evaluating a counting function at `-k` counts
//! pairs of a `k`-valued object and a compatible orientation.

use std::collections::HashMap;

use serde::Serialize;

use super::counts::{system, Kind};
use super::poly::{IntegerPolynomial, QuasiPolynomial};
use super::system::Domain;
use crate::error::{Error, Result};
use crate::orientation::{class_masks, count_acyclic_abstract, count_class, count_totally_cyclic_abstract, OrientationClass};
use crate::ribbon::RibbonGraph;

fn mask_bools(mask: u64, m: usize) -> Vec<bool> {
    (0..m).map(|e| mask >> e & 1 == 1).collect()
}

/// How many orientations pair with a `Z_k` object whose support is `support`.
fn partner_count(g: &RibbonGraph, kind: Kind, support: &[bool]) -> Result<u64> {
    match kind {
        Kind::Tension => count_acyclic_abstract(&g.underlying().delete_mask(support)),
        Kind::Flow => count_totally_cyclic_abstract(&g.underlying().abstract_contract_mask(support)),
        Kind::LocalTension => count_class(&g.double_slash_mask(support), OrientationClass::Bao),
        Kind::BalancedFlow => count_class(&g.contract_mask(support), OrientationClass::Tbo),
    }
}

/// Sum over all `Z_k`-valued objects `x` of `kind` (zeros allowed) of the
/// number of orientations of the minor determined by the support of `x`:
/// acyclic orientations of `G \ supp` for tensions, totally cyclic ones of
/// `G // supp` for flows, boundary acyclic ones of `G \\ supp` for local
/// tensions and totally bi-walkable ones of `G / supp` for balanced flows.
pub fn reciprocity_pairs(g: &RibbonGraph, kind: Kind, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::BadModulus(0));
    }
    let m = g.edge_count();
    let hist = system(g, kind).support_histogram(Domain::Modular(k), false)?;
    let mut total = 0u64;
    for (mask, n) in hist {
        total += n * partner_count(g, kind, &mask_bools(mask, m))?;
    }
    Ok(total)
}

/// `(-1)^d p(-k)` where `d` is the dimension of the solution space.
pub fn signed_value_at_negative(g: &RibbonGraph, kind: Kind, p: &IntegerPolynomial, k: u64) -> i128 {
    let v = p.eval(-(k as i64));
    if kind.dimension(g).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

pub fn reciprocity_pairs_tension(g: &RibbonGraph, k: u64) -> Result<u64> {
    reciprocity_pairs(g, Kind::Tension, k)
}

pub fn reciprocity_pairs_flow(g: &RibbonGraph, k: u64) -> Result<u64> {
    reciprocity_pairs(g, Kind::Flow, k)
}

pub fn reciprocity_pairs_local_tension(g: &RibbonGraph, k: u64) -> Result<u64> {
    reciprocity_pairs(g, Kind::LocalTension, k)
}

pub fn reciprocity_pairs_balanced_flow(g: &RibbonGraph, k: u64) -> Result<u64> {
    reciprocity_pairs(g, Kind::BalancedFlow, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReciprocityCheck {
    pub kind: Kind,
    pub k: u64,
    pub pairs: u64,
    pub signed_value: i128,
    pub holds: bool,
}

/// Compares `reciprocity_pairs` with the signed value of `p` at `-k`.
pub fn check_reciprocity(g: &RibbonGraph, kind: Kind, p: &IntegerPolynomial, k: u64) -> Result<ReciprocityCheck> {
    let pairs = reciprocity_pairs(g, kind, k)?;
    let signed_value = signed_value_at_negative(g, kind, p, k);
    Ok(ReciprocityCheck {
        kind,
        k,
        pairs,
        signed_value,
        holds: signed_value == pairs as i128,
    })
}

/// Pairs `(t, o)` of an integral local tension `t` with values in `-k..=k`
/// and a boundary acyclic orientation `o` that agrees with the reference
/// orientation where `t > 0` and opposes it where `t < 0`.
pub fn integral_local_tension_reciprocity_pairs(g: &RibbonGraph, k: u64) -> Result<u64> {
    let baos = class_masks(g, OrientationClass::Bao)?;
    let sys = system(g, Kind::LocalTension);
    let hist: HashMap<(u64, u64), u64> = sys.histogram(Domain::Integral(k + 1), false, |x| {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (e, &v) in x.iter().enumerate() {
            if v > 0 {
                pos |= 1 << e;
            } else if v < 0 {
                neg |= 1 << e;
            }
        }
        (pos, neg)
    })?;
    let mut total = 0;
    for ((pos, neg), n) in hist {
        let compatible = baos.iter().filter(|&&r| r & pos == 0 && r & neg == neg).count() as u64;
        total += n * compatible;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralReciprocityCheck {
    pub k: u64,
    pub pairs: u64,
    pub signed_value: Option<i128>,
    pub holds: bool,
}

/// Compares `integral_reciprocity_pairs` with `(-1)^d q(-k)` for the
/// quasipolynomial `q` of nowhere-zero integral local tensions.
pub fn check_integral_reciprocity(g: &RibbonGraph, q: &QuasiPolynomial, k: u64) -> Result<IntegralReciprocityCheck> {
    let pairs = integral_local_tension_reciprocity_pairs(g, k)?;
    let signed_value = q.eval_integer(-(k as i64)).map(|v| {
        if Kind::LocalTension.dimension(g).is_multiple_of(2) {
            v
        } else {
            -v
        }
    });
    Ok(IntegralReciprocityCheck {
        k,
        pairs,
        signed_value,
        holds: signed_value == Some(pairs as i128),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::counts::{integral_quasipolynomial, polynomial};
    use crate::ribbon::fixtures::*;

    #[test]
    fn single_edge_tension_pairs() {
        let g = bridge();
        for k in 1..5 {
            assert_eq!(reciprocity_pairs(&g, Kind::Tension, k).unwrap(), k + 1);
        }
    }

    #[test]
    fn triangle_flow_pairs_at_two() {
        assert_eq!(reciprocity_pairs_flow(&triangle(), 2).unwrap(), 3);
    }

    #[test]
    fn edgeless_pairs() {
        let g = RibbonGraph::isolated_vertices(1);
        for kind in Kind::ALL {
            assert_eq!(reciprocity_pairs(&g, kind, 3).unwrap(), 1);
        }
        assert_eq!(integral_local_tension_reciprocity_pairs(&g, 2).unwrap(), 1);
    }

    #[test]
    fn torus_local_tension_pairs() {
        let g = torus();
        for k in 1..5 {
            assert_eq!(reciprocity_pairs(&g, Kind::LocalTension, k).unwrap(), (k + 1) * (k + 1));
        }
    }

    #[test]
    fn all_identities_hold_on_fixtures() {
        for g in [kite(), torus(), triangle(), bridge(), contractible_loop()] {
            for kind in Kind::ALL {
                let p = polynomial(&g, kind).unwrap();
                for k in 1..4 {
                    let c = check_reciprocity(&g, kind, &p, k).unwrap();
                    assert!(c.holds, "{kind} at k={k}: {c:?}");
                }
            }
        }
    }

    #[test]
    fn integral_identity_on_torus() {
        let g = torus();
        let q = integral_quasipolynomial(&g, Kind::LocalTension, 6).unwrap();
        for k in 0..4u64 {
            let c = check_integral_reciprocity(&g, &q, k).unwrap();
            assert_eq!(c.pairs, (2 * k + 2).pow(2));
            assert!(c.holds);
        }
    }
}
