//! Membership tests for the four orientation classes.
//!
//! Each class has two independent characterisations. The `*_by_*` functions
//! expose both; the short-named predicates use the faster one and, in debug
//! builds on small inputs, assert that the other one agrees.

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::{DiGraph, NodeIndex};

use super::Orientation;
use crate::error::Result;
use crate::limits::Limits;
use crate::ribbon::{AbstractGraph, Cocycle, RibbonGraph};

/// Above this many vertices, faces or edges the cross-checks are skipped.
const DEBUG_CROSS_CHECK: usize = 10;

fn digraph(g: &AbstractGraph, o: &Orientation) -> DiGraph<(), ()> {
    let mut d = DiGraph::with_capacity(g.vertex_count(), g.edge_count());
    for _ in 0..g.vertex_count() {
        d.add_node(());
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (x, y) = if o.is_forward(e) { (a, b) } else { (b, a) };
        d.add_edge(NodeIndex::new(x), NodeIndex::new(y), ());
    }
    d
}

/// No directed cycle. A loop is a directed cycle.
pub fn is_acyclic_abstract(g: &AbstractGraph, o: &Orientation) -> Result<bool> {
    o.check(g.edge_count())?;
    Ok(toposort(&digraph(g, o), None).is_ok())
}

/// Every edge lies in a strongly connected component with both its ends.
pub fn totally_cyclic_by_scc(g: &AbstractGraph, o: &Orientation) -> Result<bool> {
    o.check(g.edge_count())?;
    let mut comp = vec![0; g.vertex_count()];
    for (i, scc) in tarjan_scc(&digraph(g, o)).into_iter().enumerate() {
        for v in scc {
            comp[v.index()] = i;
        }
    }
    Ok(g.edges().iter().all(|&(a, b)| comp[a] == comp[b]))
}

/// No vertex set `S` has an edge leaving `S` without an edge entering it.
pub fn totally_cyclic_by_cuts(g: &AbstractGraph, o: &Orientation) -> Result<bool> {
    o.check(g.edge_count())?;
    let n = g.vertex_count();
    Limits::global().check_subsets(n, "vertex")?;
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| if o.is_forward(e) { (a, b) } else { (b, a) })
        .collect();
    for s in 1u64..(1u64 << n) {
        let inside = |v: usize| s >> v & 1 == 1;
        let leaving = arcs.iter().any(|&(x, y)| inside(x) && !inside(y));
        let entering = arcs.iter().any(|&(x, y)| !inside(x) && inside(y));
        if leaving && !entering {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_acyclic(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    is_acyclic_abstract(&g.underlying(), o)
}

pub fn is_totally_cyclic(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    let ag = g.underlying();
    let fast = totally_cyclic_by_scc(&ag, o)?;
    if cfg!(debug_assertions) && ag.vertex_count() <= DEBUG_CROSS_CHECK {
        debug_assert_eq!(fast, totally_cyclic_by_cuts(&ag, o)?);
    }
    Ok(fast)
}

/// No nonempty set of faces has a coherent signed boundary.
pub fn boundary_acyclic_by_boundaries(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    o.check(g.edge_count())?;
    let f = g.face_count();
    Limits::global().check_subsets(f, "face")?;
    let mut mask = vec![false; f];
    for s in 1u64..(1u64 << f) {
        for (i, m) in mask.iter_mut().enumerate() {
            *m = s >> i & 1 == 1;
        }
        if g.signed_boundary_mask(&mask, o).is_coherent() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dual orientation is totally cyclic on the dual map.
pub fn boundary_acyclic_by_duality(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    totally_cyclic_by_scc(&g.dual_incidence(), &dual_orientation(g, o)?)
}

pub fn is_boundary_acyclic(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    let fast = boundary_acyclic_by_duality(g, o)?;
    if cfg!(debug_assertions) && g.face_count() <= DEBUG_CROSS_CHECK {
        debug_assert_eq!(fast, boundary_acyclic_by_boundaries(g, o)?);
    }
    Ok(fast)
}

/// Every crossing of `c` goes from the core-left to the core-right of its
/// directed edge, or every crossing goes the other way.
pub fn cocycle_is_coherent(g: &RibbonGraph, c: &Cocycle, o: &Orientation) -> bool {
    let directions: Vec<Option<bool>> = c
        .faces
        .iter()
        .zip(&c.steps)
        .map(|(&from, s)| {
            let (r, l) = g.edge_faces(s.edge);
            if r == l {
                return None;
            }
            let right = if o.is_forward(s.edge) { r } else { l };
            Some(from == right)
        })
        .collect();
    match directions.as_slice() {
        [] => false,
        [first, ..] => directions.iter().all(|d| d == first),
    }
}

/// No coherently oriented cocycle.
pub fn totally_biwalkable_by_cocycles(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    o.check(g.edge_count())?;
    Ok(!g.cocycles().iter().any(|c| cocycle_is_coherent(g, c, o)))
}

/// The dual orientation is acyclic on the dual map.
pub fn totally_biwalkable_by_duality(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    is_acyclic_abstract(&g.dual_incidence(), &dual_orientation(g, o)?)
}

pub fn is_totally_biwalkable(g: &RibbonGraph, o: &Orientation) -> Result<bool> {
    let fast = totally_biwalkable_by_duality(g, o)?;
    if cfg!(debug_assertions) && g.edge_count() <= DEBUG_CROSS_CHECK {
        debug_assert_eq!(fast, totally_biwalkable_by_cocycles(g, o)?);
    }
    Ok(fast)
}

/// The orientation of the dual map whose edges cross each `e` from its right
/// to its left. Dual edges share the darts of their primal edges, so the
/// entries are unchanged; only their meaning moves to `g.dual()`.
pub fn dual_orientation(g: &RibbonGraph, o: &Orientation) -> Result<Orientation> {
    o.check(g.edge_count())?;
    Ok(o.clone())
}
