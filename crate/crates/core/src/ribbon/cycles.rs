//! Cycles of the underlying graph and cocycles (cycles of the dual).

use std::collections::VecDeque;

use serde::Serialize;

use super::{AbstractGraph, RibbonGraph};
use crate::error::{Error, Result};

/// One edge of a cycle, traversed along (`forward`) or against its
/// reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

/// A closed walk without repeated edges, starting at vertex `start`.
/// Enumerated cycles are simple; face boundary walks may revisit vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Cycle {
    pub fn edges(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.edge).collect()
    }

    /// `+1` on edges traversed forward, `-1` on edges traversed backward.
    pub fn signed_vector(&self, edge_count: usize) -> Vec<i64> {
        let mut v = vec![0; edge_count];
        for s in &self.steps {
            v[s.edge] = if s.forward { 1 } else { -1 };
        }
        v
    }

    /// Checks that the steps form a closed walk in `g` without repeated edges.
    pub fn validate(&self, g: &AbstractGraph) -> Result<()> {
        if self.steps.is_empty() {
            return Err(Error::InvalidCycle("no edges".into()));
        }
        let mut used = vec![false; g.edge_count()];
        let mut at = self.start;
        for s in &self.steps {
            if s.edge >= g.edge_count() {
                return Err(Error::InvalidCycle(format!("unknown edge {}", s.edge)));
            }
            if std::mem::replace(&mut used[s.edge], true) {
                return Err(Error::InvalidCycle(format!("edge {} repeated", s.edge)));
            }
            let (a, b) = g.endpoints(s.edge);
            let (from, to) = if s.forward { (a, b) } else { (b, a) };
            if from != at {
                return Err(Error::InvalidCycle(format!("edge {} does not continue the walk", s.edge)));
            }
            at = to;
        }
        if at != self.start {
            return Err(Error::InvalidCycle("walk is not closed".into()));
        }
        Ok(())
    }
}

/// A cycle of the dual map written in terms of the faces of the primal one.
///
/// `steps[i]` crosses from `faces[i]` to `faces[(i + 1) % len]`. A step is
/// `forward` when it crosses its edge from the right face to the left face
/// of the edge's reference direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub faces: Vec<usize>,
    pub steps: Vec<Step>,
}

impl Cocycle {
    pub fn edges(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.edge).collect()
    }
}

/// All simple cycles of a multigraph, each listed once up to rotation and
/// reversal. Loops give cycles of length one, parallel edges of length two.
pub fn simple_cycles(g: &AbstractGraph) -> Vec<Cycle> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut edge_used = vec![false; g.edge_count()];
    let mut steps = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        s: usize,
        v: usize,
        adj: &[Vec<(usize, usize, bool)>],
        on_path: &mut [bool],
        edge_used: &mut [bool],
        steps: &mut Vec<Step>,
        out: &mut Vec<Cycle>,
    ) {
        for &(e, w, forward) in &adj[v] {
            if edge_used[e] {
                continue;
            }
            if w == s {
                let closes = match steps.first() {
                    None => v == s, // a loop at s
                    Some(first) => first.edge < e,
                };
                if closes {
                    let mut cyc = steps.clone();
                    cyc.push(Step { edge: e, forward });
                    out.push(Cycle { start: s, steps: cyc });
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                edge_used[e] = true;
                steps.push(Step { edge: e, forward });
                extend(s, w, adj, on_path, edge_used, steps, out);
                steps.pop();
                edge_used[e] = false;
                on_path[w] = false;
            }
        }
    }

    for s in 0..g.vertex_count() {
        on_path[s] = true;
        extend(s, s, &adj, &mut on_path, &mut edge_used, &mut steps, &mut out);
        on_path[s] = false;
    }
    out
}

/// One cycle per non-tree edge of a breadth-first spanning forest.
pub fn fundamental_cycles_of(g: &AbstractGraph) -> Vec<Cycle> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    // (parent vertex, step from parent to child)
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edge_count()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(e, w, forward) in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, Step { edge: e, forward }));
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut out = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !tree_edge[e]) {
        let (u, v) = g.endpoints(e);
        // u -> v along e, then back to u through the tree
        let mut up_from_v = Vec::new(); // steps walking from v toward the root
        let mut down_to_u = Vec::new(); // steps walking from the root toward u
        let (mut a, mut b) = (v, u);
        while depth[a] > depth[b] {
            let (p, s) = parent[a].unwrap();
            up_from_v.push(Step { edge: s.edge, forward: !s.forward });
            a = p;
        }
        while depth[b] > depth[a] {
            let (p, s) = parent[b].unwrap();
            down_to_u.push(s);
            b = p;
        }
        while a != b {
            let (pa, sa) = parent[a].unwrap();
            up_from_v.push(Step { edge: sa.edge, forward: !sa.forward });
            a = pa;
            let (pb, sb) = parent[b].unwrap();
            down_to_u.push(sb);
            b = pb;
        }
        let mut steps = vec![Step { edge: e, forward: true }];
        steps.extend(up_from_v);
        steps.extend(down_to_u.into_iter().rev());
        out.push(Cycle { start: u, steps });
    }
    out
}

impl RibbonGraph {
    /// All simple cycles of the underlying abstract graph.
    pub fn cycles(&self) -> Vec<Cycle> {
        simple_cycles(&self.underlying())
    }

    /// All cocycles, obtained as the simple cycles of the dual.
    pub fn cocycles(&self) -> Vec<Cocycle> {
        simple_cycles(&self.dual_incidence())
            .into_iter()
            .map(|c| self.cycle_to_cocycle(c))
            .collect()
    }

    /// Cocycles dual to a fundamental cycle basis of the dual map.
    pub fn fundamental_cocycles(&self) -> Vec<Cocycle> {
        fundamental_cycles_of(&self.dual_incidence())
            .into_iter()
            .map(|c| self.cycle_to_cocycle(c))
            .collect()
    }

    fn cycle_to_cocycle(&self, c: Cycle) -> Cocycle {
        let mut faces = Vec::with_capacity(c.steps.len());
        let mut at = c.start;
        for s in &c.steps {
            faces.push(at);
            let (r, l) = self.edge_faces(s.edge);
            at = if s.forward { l } else { r };
        }
        Cocycle { faces, steps: c.steps }
    }

    /// `|E| - |V| + c` cycles generating the cycle space.
    pub fn fundamental_cycles(&self) -> Vec<Cycle> {
        fundamental_cycles_of(&self.underlying())
    }

    /// Contracting the cycle increases the number of surface components.
    pub fn is_separating(&self, cycle: &Cycle) -> Result<bool> {
        cycle.validate(&self.underlying())?;
        let contracted = self.contract(&cycle.edges())?;
        Ok(contracted.component_count() == self.component_count() + 1)
    }
}
