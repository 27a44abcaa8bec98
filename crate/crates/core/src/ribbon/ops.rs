use super::{Labels, RibbonGraph};
use crate::error::{Error, Result};

impl RibbonGraph {
    /// The dual map: same darts and edge pairs, vertex rotation `phi`.
    ///
    /// Faces of the dual are the vertices of `self`, and `dual(dual(g))` is
    /// dart-identical to `g`.
    pub fn dual(&self) -> RibbonGraph {
        let n = self.dart_count();
        let sigma = (0..n).map(|d| self.phi(d)).collect();
        let g = RibbonGraph::assemble(sigma, self.edges.clone(), self.alpha.clone(), self.isolated);
        let labels = self.labels.as_ref().map(|l| Labels {
            vertices: l.faces.clone(),
            edges: l.edges.clone(),
            faces: l.vertices.clone(),
        });
        g.with_labels(labels)
    }

    /// Removes the given edges. Remaining darts are renumbered in order,
    /// remaining edges keep their relative order, and vertices that lose all
    /// their darts stay as isolated vertices.
    pub fn delete(&self, edges: &[usize]) -> Result<RibbonGraph> {
        let mask = self.edge_mask(edges)?;
        Ok(self.delete_mask(&mask))
    }

    /// Ribbon contraction, computed as `dual(delete(dual(g), A))`.
    ///
    /// For a non-loop this is ordinary contraction; contracting a loop
    /// splits its vertex along the two boundary circles of the loop.
    pub fn contract(&self, edges: &[usize]) -> Result<RibbonGraph> {
        let mask = self.edge_mask(edges)?;
        Ok(self.contract_mask(&mask))
    }

    pub(crate) fn delete_mask(&self, remove: &[bool]) -> RibbonGraph {
        let n = self.dart_count();
        let mut new_id = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if !remove[self.edge_of[d]] {
                new_id[d] = next;
                next += 1;
            }
        }
        let mut sigma = vec![0; next];
        for d in 0..n {
            if new_id[d] == usize::MAX {
                continue;
            }
            let mut s = self.sigma[d];
            while new_id[s] == usize::MAX {
                s = self.sigma[s];
            }
            sigma[new_id[d]] = new_id[s];
        }
        let edges: Vec<[usize; 2]> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, _)| !remove[e])
            .map(|(_, &[t, h])| [new_id[t], new_id[h]])
            .collect();
        let mut alpha = vec![0; next];
        for &[t, h] in &edges {
            alpha[t] = h;
            alpha[h] = t;
        }
        let emptied = self
            .vertices
            .iter()
            .filter(|cycle| cycle.iter().all(|&d| new_id[d] == usize::MAX))
            .count();
        let g = RibbonGraph::assemble(sigma, edges, alpha, self.isolated + emptied);
        let labels = self.labels.as_ref().and_then(|l| {
            l.edges.as_ref().map(|names| Labels {
                vertices: None,
                edges: Some(
                    names
                        .iter()
                        .enumerate()
                        .filter(|&(e, _)| !remove[e])
                        .map(|(_, s)| s.clone())
                        .collect(),
                ),
                faces: None,
            })
        });
        g.with_labels(labels)
    }

    pub(crate) fn contract_mask(&self, remove: &[bool]) -> RibbonGraph {
        self.dual().delete_mask(remove).dual()
    }

    /// Processes `order` one edge at a time: an edge bordering a single face
    /// in the current map is contracted, any other edge is deleted.
    pub fn double_slash(&self, order: &[usize]) -> Result<RibbonGraph> {
        let mut seen = vec![false; self.edge_count()];
        for &e in order {
            self.check_edge(e)?;
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        let mut g = self.clone();
        // original id of each current edge
        let mut ids: Vec<usize> = (0..self.edge_count()).collect();
        for &e in order {
            let pos = ids.iter().position(|&x| x == e).expect("edge still present");
            let mut mask = vec![false; g.edge_count()];
            mask[pos] = true;
            g = if g.is_single_face_edge(pos) {
                g.contract_mask(&mask)
            } else {
                g.delete_mask(&mask)
            };
            ids.remove(pos);
        }
        Ok(g)
    }

    /// `double_slash` over a support mask, edges taken in increasing id order.
    pub(crate) fn double_slash_mask(&self, support: &[bool]) -> RibbonGraph {
        let order: Vec<usize> = (0..self.edge_count()).filter(|&e| support[e]).collect();
        self.double_slash(&order).expect("valid distinct edges")
    }

    pub(crate) fn edge_mask(&self, edges: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.edge_count()];
        for &e in edges {
            self.check_edge(e)?;
            mask[e] = true;
        }
        Ok(mask)
    }
}
