//! Canonical codes for deduplicating maps up to isomorphism.
//!
//! A connected component is relabelled by a breadth-first traversal from a
//! root dart, following `sigma` then `alpha`; the code lists
//! `(sigma, alpha)` of every dart in the new labelling. The smallest such code
//! over all roots is canonical. Reference edge directions are not part of the
//! code, so maps differing only in which dart of an edge is the tail share it.

use std::fmt;

use super::RibbonGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_words(&self) -> &[u32] {
        &self.0
    }

    /// Big-endian byte encoding.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_be_bytes()).collect()
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl RibbonGraph {
    pub fn canonical_code(&self) -> CanonicalCode {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut components: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let darts = self.component_darts(start);
            for &d in &darts {
                seen[d] = true;
            }
            let best = darts
                .iter()
                .map(|&root| self.rooted_code(root, darts.len()))
                .min()
                .unwrap();
            components.push(best);
        }
        components.sort();

        let mut words = vec![self.isolated_count() as u32, components.len() as u32];
        for c in components {
            words.push(c.len() as u32);
            words.extend(c);
        }
        CanonicalCode(words)
    }

    fn component_darts(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.dart_count()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(d) = stack.pop() {
            out.push(d);
            for x in [self.sigma()[d], self.alpha(d)] {
                if !std::mem::replace(&mut seen[x], true) {
                    stack.push(x);
                }
            }
        }
        out
    }

    fn rooted_code(&self, root: usize, size: usize) -> Vec<u32> {
        let mut label = vec![u32::MAX; self.dart_count()];
        let mut order = Vec::with_capacity(size);
        label[root] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for x in [self.sigma()[d], self.alpha(d)] {
                if label[x] == u32::MAX {
                    label[x] = order.len() as u32;
                    order.push(x);
                }
            }
            i += 1;
        }
        order
            .iter()
            .flat_map(|&d| [label[self.sigma()[d]], label[self.alpha(d)]])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    /// Renames darts by `perm` (old -> new), keeping edge directions.
    fn relabel(g: &RibbonGraph, perm: &[usize]) -> RibbonGraph {
        let cycles: Vec<Vec<usize>> = g
            .rotation()
            .iter()
            .map(|c| c.iter().map(|&d| perm[d]).collect())
            .collect();
        let edges = g.edge_pairs().iter().map(|&[t, h]| [perm[t], perm[h]]).collect();
        RibbonGraph::from_rotation(&cycles, edges).unwrap()
    }

    #[test]
    fn kite_relabelings_agree() {
        let g = kite();
        let perm = [7, 3, 11, 0, 5, 9, 1, 10, 2, 6, 4, 8];
        let h = relabel(&g, &perm);
        assert_ne!(g, h);
        assert_eq!(g.canonical_code(), h.canonical_code());
        let rev: Vec<usize> = (0..12).rev().collect();
        assert_eq!(g.canonical_code(), relabel(&g, &rev).canonical_code());
    }

    #[test]
    fn different_maps_differ() {
        assert_ne!(bridge().canonical_code(), contractible_loop().canonical_code());
        assert_ne!(torus().canonical_code(), kite().canonical_code());
        assert_ne!(
            RibbonGraph::isolated_vertices(1).canonical_code(),
            RibbonGraph::isolated_vertices(2).canonical_code()
        );
    }

    #[test]
    fn mirror_image_is_distinguished_only_when_chiral() {
        // reversing every rotation gives the mirror map; the torus map is
        // achiral so the codes agree
        let t = torus();
        let mirrored: Vec<Vec<usize>> = t.rotation().iter().map(|c| c.iter().rev().copied().collect()).collect();
        let m = RibbonGraph::from_rotation(&mirrored, t.edge_pairs().to_vec()).unwrap();
        assert_eq!(m.canonical_code(), t.canonical_code());
    }
}
