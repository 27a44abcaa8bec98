//! Dart-based combinatorial maps.
//!
//! A [`RibbonGraph`] is stored as a rotation system: a permutation `sigma`
//! of the darts whose cycles are the counterclockwise dart orders around the
//! vertices, and a list of edges `[tail, head]`. The unordered pairing is the
//! fixed-point-free involution `alpha`; the ordering of each pair is the
//! reference orientation of that edge. Faces are the orbits of
//! `phi = sigma . alpha`, that is `d -> sigma(alpha(d))`.
//!
//! With `sigma` counterclockwise, the face containing dart `d` lies on the
//! right-hand side of `d` when `d` is walked away from its vertex. So for an
//! edge `[t, h]` traversed in its reference direction the right face is
//! `face_of(t)` and the left face is `face_of(h)`.
//!
//! Vertices are numbered by the smallest dart they carry; isolated vertices
//! (no darts) come last. Each isolated vertex also owns one dart-free face,
//! numbered after the faces that carry darts.

mod abstract_graph;
mod boundary;
mod canon;
mod cycles;
mod io;
mod ops;

pub use abstract_graph::AbstractGraph;
pub use boundary::{FaceMatrix, SignedBoundaryVector};
pub use canon::CanonicalCode;
pub use cycles::{fundamental_cycles_of, simple_cycles, Cocycle, Cycle, Step};
pub use io::{read_corpus, write_corpus, Labels, MapFile};

use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex, edge, face and component counts together with the genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EulerData {
    pub v_count: usize,
    pub e_count: usize,
    pub f_count: usize,
    pub components: usize,
    pub genus: usize,
}

impl EulerData {
    pub fn euler_characteristic(&self) -> i64 {
        self.v_count as i64 - self.e_count as i64 + self.f_count as i64
    }
}

#[derive(Debug, Clone)]
pub struct RibbonGraph {
    sigma: Vec<usize>,
    edges: Vec<[usize; 2]>,
    isolated: usize,
    labels: Option<Labels>,

    alpha: Vec<usize>,
    edge_of: Vec<usize>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
    components: usize,
    euler: EulerData,
}

impl PartialEq for RibbonGraph {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.edges == other.edges && self.isolated == other.isolated
    }
}

impl Eq for RibbonGraph {}

impl RibbonGraph {
    /// Builds a map from a rotation permutation `sigma` (image of each dart),
    /// the edge pairs and a number of isolated vertices.
    pub fn build(
        dart_count: usize,
        sigma: Vec<usize>,
        edge_pairs: Vec<[usize; 2]>,
        isolated: usize,
    ) -> Result<Self> {
        if !dart_count.is_multiple_of(2) {
            return Err(Error::OddDartCount(dart_count));
        }
        if sigma.len() != dart_count {
            return Err(Error::NonPermutation(format!(
                "sigma has {} entries for {dart_count} darts",
                sigma.len()
            )));
        }
        let mut seen = vec![false; dart_count];
        for &img in &sigma {
            if img >= dart_count {
                return Err(Error::NonPermutation(format!("dart {img} out of range")));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::NonPermutation(format!("dart {img} has two preimages")));
            }
        }
        let alpha = validate_pairs(dart_count, &edge_pairs)?;
        Ok(Self::assemble(sigma, edge_pairs, alpha, isolated))
    }

    /// Builds a map from vertex cycles (darts in counterclockwise order).
    /// An empty cycle is an isolated vertex.
    pub fn from_rotation(cycles: &[Vec<usize>], edge_pairs: Vec<[usize; 2]>) -> Result<Self> {
        let dart_count: usize = cycles.iter().map(Vec::len).sum();
        if !dart_count.is_multiple_of(2) {
            return Err(Error::OddDartCount(dart_count));
        }
        let mut sigma = vec![usize::MAX; dart_count];
        let mut isolated = 0;
        for cycle in cycles {
            if cycle.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, &d) in cycle.iter().enumerate() {
                if d >= dart_count {
                    return Err(Error::NonPermutation(format!("dart {d} out of range")));
                }
                if sigma[d] != usize::MAX {
                    return Err(Error::NonPermutation(format!("dart {d} appears twice")));
                }
                sigma[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::build(dart_count, sigma, edge_pairs, isolated)
    }

    /// A map with `n` isolated vertices and nothing else.
    pub fn isolated_vertices(n: usize) -> Self {
        Self::assemble(Vec::new(), Vec::new(), Vec::new(), n)
    }

    fn assemble(
        sigma: Vec<usize>,
        edges: Vec<[usize; 2]>,
        alpha: Vec<usize>,
        isolated: usize,
    ) -> Self {
        let n = sigma.len();
        let mut edge_of = vec![0; n];
        for (e, &[t, h]) in edges.iter().enumerate() {
            edge_of[t] = e;
            edge_of[h] = e;
        }
        let (vertex_of, vertices) = orbits(n, |d| sigma[d]);
        let (face_of, faces) = orbits(n, |d| sigma[alpha[d]]);

        let mut uf = UnionFind::new(n);
        for d in 0..n {
            uf.union(d, sigma[d]);
            uf.union(d, alpha[d]);
        }
        let components = uf.count() + isolated;

        let v_count = vertices.len() + isolated;
        let f_count = faces.len() + isolated;
        let e_count = edges.len();
        let twice_genus = 2 * components as i64 - v_count as i64 + e_count as i64 - f_count as i64;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        let euler = EulerData {
            v_count,
            e_count,
            f_count,
            components,
            genus: (twice_genus / 2) as usize,
        };
        RibbonGraph {
            sigma,
            edges,
            isolated,
            labels: None,
            alpha,
            edge_of,
            vertex_of,
            vertices,
            face_of,
            faces,
            components,
            euler,
        }
    }

    pub fn with_labels(mut self, labels: Option<Labels>) -> Self {
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.euler.v_count
    }

    pub fn face_count(&self) -> usize {
        self.euler.f_count
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn genus(&self) -> usize {
        self.euler.genus
    }

    pub fn euler_data(&self) -> EulerData {
        self.euler
    }

    /// Every component is a sphere.
    pub fn is_planar(&self) -> bool {
        self.euler.genus == 0
    }

    pub fn isolated_count(&self) -> usize {
        self.isolated
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    pub fn edge_pairs(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn tail_dart(&self, e: usize) -> usize {
        self.edges[e][0]
    }

    pub fn head_dart(&self, e: usize) -> usize {
        self.edges[e][1]
    }

    pub fn edge_of(&self, d: usize) -> usize {
        self.edge_of[d]
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// Darts around vertex `v` in counterclockwise order (empty when isolated).
    pub fn vertex_darts(&self, v: usize) -> &[usize] {
        self.vertices.get(v).map_or(&[], Vec::as_slice)
    }

    /// Darts of face `f` in `phi` order (empty for the face of an isolated vertex).
    pub fn face_darts(&self, f: usize) -> &[usize] {
        self.faces.get(f).map_or(&[], Vec::as_slice)
    }

    /// Vertex cycles, isolated vertices included as empty cycles.
    pub fn rotation(&self) -> Vec<Vec<usize>> {
        let mut out = self.vertices.clone();
        out.extend(std::iter::repeat_n(Vec::new(), self.isolated));
        out
    }

    /// `(tail vertex, head vertex)` of edge `e` in its reference orientation.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let [t, h] = self.edges[e];
        (self.vertex_of[t], self.vertex_of[h])
    }

    /// `(right face, left face)` of edge `e` in its reference orientation.
    pub fn edge_faces(&self, e: usize) -> (usize, usize) {
        let [t, h] = self.edges[e];
        (self.face_of[t], self.face_of[h])
    }

    /// The edge borders the same face on both sides; its dual edge is a loop.
    pub fn is_single_face_edge(&self, e: usize) -> bool {
        let (r, l) = self.edge_faces(e);
        r == l
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    /// The underlying abstract graph with the same vertex and edge numbering.
    pub fn underlying(&self) -> AbstractGraph {
        let edges = (0..self.edge_count()).map(|e| self.endpoints(e)).collect();
        AbstractGraph::new_unchecked(self.vertex_count(), edges)
    }

    /// The dual map as an abstract graph: vertices are faces of `self`, and
    /// edge `e` runs from its right face to its left face.
    pub fn dual_incidence(&self) -> AbstractGraph {
        let edges = (0..self.edge_count()).map(|e| self.edge_faces(e)).collect();
        AbstractGraph::new_unchecked(self.face_count(), edges)
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edge_count() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub(crate) fn check_face(&self, f: usize) -> Result<()> {
        if f < self.face_count() {
            Ok(())
        } else {
            Err(Error::UnknownFace(f))
        }
    }
}

fn validate_pairs(dart_count: usize, pairs: &[[usize; 2]]) -> Result<Vec<usize>> {
    if pairs.len() * 2 != dart_count {
        return Err(Error::BadPairing(format!(
            "{} edges cannot pair {dart_count} darts",
            pairs.len()
        )));
    }
    let mut alpha = vec![usize::MAX; dart_count];
    for &[t, h] in pairs {
        if t == h {
            return Err(Error::BadPairing(format!("dart {t} paired with itself")));
        }
        for d in [t, h] {
            if d >= dart_count {
                return Err(Error::BadPairing(format!("dart {d} out of range")));
            }
            if alpha[d] != usize::MAX {
                return Err(Error::BadPairing(format!("dart {d} in two edges")));
            }
        }
        alpha[t] = h;
        alpha[h] = t;
    }
    Ok(alpha)
}

/// Orbits of a permutation, numbered by their smallest element.
fn orbits(n: usize, next: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut id = vec![usize::MAX; n];
    let mut list = Vec::new();
    for start in 0..n {
        if id[start] != usize::MAX {
            continue;
        }
        let k = list.len();
        let mut orbit = Vec::new();
        let mut d = start;
        loop {
            id[d] = k;
            orbit.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        list.push(orbit);
    }
    (id, list)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}
