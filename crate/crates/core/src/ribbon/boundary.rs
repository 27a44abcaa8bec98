//! Face boundaries, their signed versions, and the face matrix.
//!
//! Faces carry the orientation induced by the counterclockwise surface, so a
//! face sees an edge as positively oriented when the face lies on the edge's
//! left. For edge `[t, h]` that is the face of `h`.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::RibbonGraph;
use crate::error::Result;
use crate::orientation::Orientation;

/// Per-edge values in `{0, +1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedBoundaryVector(pub Vec<i8>);

impl SignedBoundaryVector {
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &v)| v != 0).map(|(e, _)| e)
    }

    /// All nonzero entries share one sign and there is at least one of them.
    pub fn is_coherent(&self) -> bool {
        let mut nonzero = self.0.iter().filter(|&&v| v != 0);
        match nonzero.next() {
            None => false,
            Some(&first) => nonzero.all(|&v| v == first),
        }
    }
}

/// The `F x E` matrix whose row `f` is the signed boundary of face `f`
/// under the reference orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceMatrix {
    pub rows: Vec<Vec<i8>>,
    pub edge_count: usize,
}

impl FaceMatrix {
    pub fn face_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.edge_count)
            .map(|e| self.rows.iter().map(|r| r[e] as i64).sum())
            .collect()
    }

    /// Sum of the rows indexed by `faces`.
    pub fn row_sum(&self, faces: &[usize]) -> Vec<i64> {
        let mut out = vec![0i64; self.edge_count];
        for &f in faces {
            for (acc, &v) in out.iter_mut().zip(&self.rows[f]) {
                *acc += v as i64;
            }
        }
        out
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(&a, &b)| a as i64 * b).sum())
            .collect()
    }

    pub fn apply_rational(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .filter(|(&a, _)| a != 0)
                    .fold(BigRational::zero(), |acc, (&a, b)| {
                        if a > 0 {
                            acc + b
                        } else {
                            acc - b
                        }
                    })
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer((v as i64).into())).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.edge_count {
            let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let p = m[rank][col].clone();
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && !row[col].is_zero() {
                    let factor = &row[col] / &p;
                    for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                        *x -= &factor * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl RibbonGraph {
    fn face_mask(&self, faces: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.face_count()];
        for &f in faces {
            self.check_face(f)?;
            mask[f] = true;
        }
        Ok(mask)
    }

    /// Edges with two distinct adjacent faces exactly one of which is in `faces`.
    pub fn boundary(&self, faces: &[usize]) -> Result<Vec<usize>> {
        let mask = self.face_mask(faces)?;
        Ok((0..self.edge_count())
            .filter(|&e| {
                let (r, l) = self.edge_faces(e);
                r != l && mask[r] != mask[l]
            })
            .collect())
    }

    /// The boundary of `faces` with the orientation induced by those faces,
    /// compared edge by edge against `o`.
    pub fn signed_boundary(&self, faces: &[usize], o: &Orientation) -> Result<SignedBoundaryVector> {
        o.check(self.edge_count())?;
        let mask = self.face_mask(faces)?;
        Ok(self.signed_boundary_mask(&mask, o))
    }

    pub(crate) fn signed_boundary_mask(&self, mask: &[bool], o: &Orientation) -> SignedBoundaryVector {
        let v = (0..self.edge_count())
            .map(|e| {
                let (r, l) = self.edge_faces(e);
                if r == l || mask[r] == mask[l] {
                    return 0;
                }
                // induced direction agrees with the reference iff the chosen
                // face is on the left
                let induced_forward = mask[l];
                if induced_forward == o.is_forward(e) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        SignedBoundaryVector(v)
    }

    pub fn face_matrix(&self) -> FaceMatrix {
        let mut rows = vec![vec![0i8; self.edge_count()]; self.face_count()];
        for e in (0..self.edge_count()).filter(|&e| !self.is_single_face_edge(e)) {
            let (r, l) = self.edge_faces(e);
            rows[l][e] = 1;
            rows[r][e] = -1;
        }
        FaceMatrix {
            rows,
            edge_count: self.edge_count(),
        }
    }
}
