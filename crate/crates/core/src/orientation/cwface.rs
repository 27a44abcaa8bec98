//! Clockwise faces of totally bi-walkable orientations.
//!
//! A face is clockwise when every edge on its boundary has the face on its
//! left, so the boundary runs clockwise around it as seen from inside. In
//! the dual these are the sinks of the dual orientation. A face bounded by no
//! edge counts as clockwise; a face on both sides of an edge never does.

use serde::Serialize;

use super::{class_masks, Orientation, OrientationClass};
use crate::enumeration::IntegerPolynomial;
use crate::error::Result;
use crate::limits::Limits;
use crate::ribbon::{RibbonGraph, UnionFind};

pub fn cw_faces(g: &RibbonGraph, o: &Orientation) -> Result<Vec<usize>> {
    o.check(g.edge_count())?;
    let mut cw = vec![true; g.face_count()];
    for e in 0..g.edge_count() {
        let (r, l) = g.edge_faces(e);
        let right = if o.is_forward(e) { r } else { l };
        cw[right] = false;
    }
    Ok((0..g.face_count()).filter(|&f| cw[f]).collect())
}

/// `counts[j]` is the number of totally bi-walkable orientations with
/// exactly `j` clockwise faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CwFaceHistogram {
    pub counts: Vec<u64>,
}

impl CwFaceHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `sum_j counts[j] q^j`
    pub fn to_polynomial(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.counts.iter().map(|&c| c as i64).collect())
    }
}

pub fn tbo_histogram(g: &RibbonGraph) -> Result<CwFaceHistogram> {
    let m = g.edge_count();
    let mut counts = vec![0u64; g.face_count() + 1];
    for mask in class_masks(g, OrientationClass::Tbo)? {
        counts[cw_faces(g, &Orientation::from_mask(m, mask))?.len()] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(CwFaceHistogram { counts })
}

/// The closed form for the clockwise-face generating polynomial, a sum over
/// edge subsets `S` of the dual:
///
/// `sum_S (-1)^(|S| - n + c(S)) prod_C (1 - (1 - q)^|V(C)|)`
///
/// where `C` runs over the components of the spanning subgraph of the dual
/// with edge set `S`, `c(S)` is their number and `n` is `sign_vertex_count`.
pub fn tbo_formula_with_vertex_count(g: &RibbonGraph, sign_vertex_count: usize) -> Result<IntegerPolynomial> {
    let m = g.edge_count();
    Limits::global().check_subsets(m, "edge")?;
    let faces = g.face_count();
    let dual = g.dual_incidence();
    let one_minus_q = IntegerPolynomial::new(vec![1, -1]);
    let block: Vec<IntegerPolynomial> = (0..=faces)
        .map(|n| IntegerPolynomial::constant(1).add(&one_minus_q.pow(n as u32).scale(-1)))
        .collect();
    let mut total = IntegerPolynomial::zero();
    for s in 0u64..1 << m {
        let mut uf = UnionFind::new(faces);
        for (e, &(a, b)) in dual.edges().iter().enumerate() {
            if s >> e & 1 == 1 {
                uf.union(a, b);
            }
        }
        let mut sizes = vec![0usize; faces];
        for f in 0..faces {
            sizes[uf.find(f)] += 1;
        }
        let components = sizes.iter().filter(|&&n| n > 0).count();
        let product = sizes
            .iter()
            .filter(|&&n| n > 0)
            .fold(IntegerPolynomial::constant(1), |acc, &n| acc.mul(&block[n]));
        let exponent = s.count_ones() as i64 - sign_vertex_count as i64 + components as i64;
        let sign = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
        total = total.add(&product.scale(sign));
    }
    Ok(total)
}

/// The closed form with the sign taken relative to the number of faces,
/// which are the vertices of the dual.
pub fn tbo_generating_poly_formula(g: &RibbonGraph) -> Result<IntegerPolynomial> {
    tbo_formula_with_vertex_count(g, g.face_count())
}
