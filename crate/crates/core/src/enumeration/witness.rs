//! An explicit vector certifying that an orientation is boundary acyclic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::RationalVector;
use crate::error::{Error, Result};
use crate::orientation::{cocycle_is_coherent, is_boundary_acyclic, Orientation};
use crate::ribbon::RibbonGraph;

/// Sum over the coherent cocycles `C` of `C`'s edges directed by `o`,
/// written in reference coordinates (`+1` where `o` agrees with the
/// reference direction, `-1` where it opposes it).
///
/// The result lies in the kernel of the face matrix, is nonzero on every
/// edge, and has the sign pattern of `o`.
pub fn bao_witness_vector(g: &RibbonGraph, o: &Orientation) -> Result<RationalVector> {
    if !is_boundary_acyclic(g, o)? {
        return Err(Error::NotBoundaryAcyclic);
    }
    let mut p = vec![0i64; g.edge_count()];
    for c in g.cocycles() {
        if cocycle_is_coherent(g, &c, o) {
            for e in c.edges() {
                p[e] += o.sign(e);
            }
        }
    }
    let p = RationalVector(p.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))).collect());
    debug_assert!(is_witness(g, o, &p));
    Ok(p)
}

/// `D p = 0`, `p` nowhere zero, and `p_e > 0` exactly where `o` agrees with
/// the reference orientation.
pub fn is_witness(g: &RibbonGraph, o: &Orientation, p: &RationalVector) -> bool {
    p.0.len() == g.edge_count()
        && g.face_matrix().apply_rational(&p.0).iter().all(Zero::is_zero)
        && p.0
            .iter()
            .enumerate()
            .all(|(e, x)| if o.is_forward(e) { x.is_positive() } else { x.is_negative() })
}
