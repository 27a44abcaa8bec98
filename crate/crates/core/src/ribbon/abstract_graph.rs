use super::UnionFind;
use crate::error::{Error, Result};

/// A multigraph with loops, forgetting any embedding. Each edge is stored as
/// `(tail, head)` in its reference orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertex_count || b >= vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "edge ({a}, {b}) references a vertex outside 0..{vertex_count}"
            )));
        }
        Ok(Self::new_unchecked(vertex_count, edges))
    }

    pub(crate) fn new_unchecked(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        AbstractGraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.count()
    }

    /// Edges whose removal disconnects their endpoints.
    pub fn bridges(&self) -> Vec<usize> {
        let base = self.component_count();
        (0..self.edge_count())
            .filter(|&e| {
                let mut mask = vec![false; self.edge_count()];
                mask[e] = true;
                self.delete_mask(&mask).component_count() > base
            })
            .collect()
    }

    /// Incidence lists: for each vertex, `(edge, other end, leaves along the
    /// reference direction)`. A loop is listed once.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize, bool)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((e, b, true));
            if a != b {
                adj[b].push((e, a, false));
            }
        }
        adj
    }

    pub fn delete(&self, edges: &[usize]) -> Result<AbstractGraph> {
        Ok(self.delete_mask(&self.edge_mask(edges)?))
    }

    pub(crate) fn delete_mask(&self, remove: &[bool]) -> AbstractGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, _)| !remove[e])
            .map(|(_, &p)| p)
            .collect();
        AbstractGraph::new_unchecked(self.vertex_count, edges)
    }

    /// Abstract contraction of an ordered edge list: each edge is contracted
    /// if it is currently a non-loop and deleted if it has become a loop.
    ///
    /// Vertices of the result are the classes of the contracted edges,
    /// numbered by their smallest original vertex.
    pub fn abstract_contract(&self, order: &[usize]) -> Result<AbstractGraph> {
        let mut seen = vec![false; self.edge_count()];
        for &e in order {
            if e >= self.edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(self.abstract_contract_mask(&seen))
    }

    pub(crate) fn abstract_contract_mask(&self, support: &[bool]) -> AbstractGraph {
        let mut uf = UnionFind::new(self.vertex_count);
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            // a loop at this step is deleted, a non-loop merges its ends
            if support[e] {
                uf.union(a, b);
            }
        }
        let mut class = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if class[r] == usize::MAX {
                class[r] = next;
                next += 1;
            }
            class[v] = class[r];
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, _)| !support[e])
            .map(|(_, &(a, b))| (class[a], class[b]))
            .collect();
        AbstractGraph::new_unchecked(next, edges)
    }

    fn edge_mask(&self, edges: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.edge_count()];
        for &e in edges {
            if e >= self.edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            mask[e] = true;
        }
        Ok(mask)
    }
}
