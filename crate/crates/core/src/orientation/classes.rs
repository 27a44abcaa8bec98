//! Exhaustive enumeration of orientation classes over all `2^|E|` orientations.

use rayon::prelude::*;

use super::predicates::{is_acyclic_abstract, totally_cyclic_by_scc};
use super::{Orientation, OrientationClass};
use crate::error::Result;
use crate::limits::Limits;
use crate::ribbon::{AbstractGraph, RibbonGraph};

const PARALLEL_FROM_EDGES: usize = 12;

pub fn is_in_class(g: &RibbonGraph, o: &Orientation, class: OrientationClass) -> Result<bool> {
    match class {
        OrientationClass::Ao => super::is_acyclic(g, o),
        OrientationClass::Tco => super::is_totally_cyclic(g, o),
        OrientationClass::Bao => super::is_boundary_acyclic(g, o),
        OrientationClass::Tbo => super::is_totally_biwalkable(g, o),
    }
}

/// Masks (bit set = reversed) of the orientations of `ag` passing `test`, ascending.
fn scan(ag: &AbstractGraph, test: fn(&AbstractGraph, &Orientation) -> Result<bool>) -> Result<Vec<u64>> {
    let m = ag.edge_count();
    Limits::global().check_orientations(m)?;
    let keep = |mask: u64| test(ag, &Orientation::from_mask(m, mask)).map(|ok| ok.then_some(mask));
    let found: Result<Vec<Option<u64>>> = if m >= PARALLEL_FROM_EDGES {
        (0..1u64 << m).into_par_iter().map(keep).collect()
    } else {
        (0..1u64 << m).map(keep).collect()
    };
    Ok(found?.into_iter().flatten().collect())
}

/// Masks of all orientations in `class`, in increasing order.
pub fn class_masks(g: &RibbonGraph, class: OrientationClass) -> Result<Vec<u64>> {
    match class {
        OrientationClass::Ao => scan(&g.underlying(), is_acyclic_abstract),
        OrientationClass::Tco => scan(&g.underlying(), totally_cyclic_by_scc),
        // the dual orientation has the same entries as the primal one
        OrientationClass::Bao => scan(&g.dual_incidence(), totally_cyclic_by_scc),
        OrientationClass::Tbo => scan(&g.dual_incidence(), is_acyclic_abstract),
    }
}

pub fn enumerate_class(g: &RibbonGraph, class: OrientationClass) -> Result<Vec<Orientation>> {
    let m = g.edge_count();
    Ok(class_masks(g, class)?
        .into_iter()
        .map(|mask| Orientation::from_mask(m, mask))
        .collect())
}

pub fn count_class(g: &RibbonGraph, class: OrientationClass) -> Result<u64> {
    Ok(class_masks(g, class)?.len() as u64)
}

pub fn count_acyclic_abstract(g: &AbstractGraph) -> Result<u64> {
    Ok(scan(g, is_acyclic_abstract)?.len() as u64)
}

pub fn count_totally_cyclic_abstract(g: &AbstractGraph) -> Result<u64> {
    Ok(scan(g, totally_cyclic_by_scc)?.len() as u64)
}
