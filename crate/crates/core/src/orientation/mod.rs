//! Edge orientations and the four orientation classes.

mod classes;
mod cwface;
mod predicates;

pub use classes::{
    class_masks, count_acyclic_abstract, count_class, count_totally_cyclic_abstract, enumerate_class,
    is_in_class,
};
pub use cwface::{cw_faces, tbo_formula_with_vertex_count, tbo_generating_poly_formula, tbo_histogram, CwFaceHistogram};
pub use predicates::{
    boundary_acyclic_by_boundaries, boundary_acyclic_by_duality, cocycle_is_coherent, dual_orientation,
    is_acyclic, is_acyclic_abstract, is_boundary_acyclic, is_totally_biwalkable, is_totally_cyclic,
    totally_biwalkable_by_cocycles, totally_biwalkable_by_duality, totally_cyclic_by_cuts,
    totally_cyclic_by_scc,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One direction per edge, recorded relative to the reference orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    /// Every edge in its reference direction.
    pub fn reference(edge_count: usize) -> Self {
        Orientation {
            forward: vec![true; edge_count],
        }
    }

    pub fn from_forward(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    /// Bit `e` of `mask` set means edge `e` is reversed.
    pub fn from_mask(edge_count: usize, mask: u64) -> Self {
        Orientation {
            forward: (0..edge_count).map(|e| mask >> e & 1 == 0).collect(),
        }
    }

    pub fn to_mask(&self) -> u64 {
        self.forward
            .iter()
            .enumerate()
            .filter(|(_, &f)| !f)
            .fold(0, |m, (e, _)| m | 1 << e)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn is_forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    /// `+1` where the edge agrees with the reference orientation, `-1` otherwise.
    pub fn sign(&self, e: usize) -> i64 {
        if self.forward[e] {
            1
        } else {
            -1
        }
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// Keeps the entries whose `keep` flag is set.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        Orientation {
            forward: self
                .forward
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(&f, _)| f)
                .collect(),
        }
    }

    pub(crate) fn check(&self, edge_count: usize) -> Result<()> {
        if self.forward.len() == edge_count {
            Ok(())
        } else {
            Err(Error::GraphMismatch {
                expected: edge_count,
                found: self.forward.len(),
            })
        }
    }
}

/// Accepts `+` and `-` (or the Unicode minus sign), one per edge.
impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '\u{2212}' => Ok(false),
                other => Err(Error::BadOrientation(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Orientation::from_forward)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &fw in &self.forward {
            f.write_str(if fw { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationClass {
    /// Acyclic: no directed cycle.
    Ao,
    /// Totally cyclic: every edge on a directed cycle.
    Tco,
    /// Boundary acyclic: no coherently oriented face boundary.
    Bao,
    /// Totally bi-walkable: no coherently oriented cocycle.
    Tbo,
}

impl OrientationClass {
    pub const ALL: [OrientationClass; 4] = [
        OrientationClass::Ao,
        OrientationClass::Tco,
        OrientationClass::Bao,
        OrientationClass::Tbo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrientationClass::Ao => "ao",
            OrientationClass::Tco => "tco",
            OrientationClass::Bao => "bao",
            OrientationClass::Tbo => "tbo",
        }
    }

    /// The class that `dual_orientation` maps this one onto.
    pub fn dual(self) -> Self {
        match self {
            OrientationClass::Ao => OrientationClass::Tbo,
            OrientationClass::Tbo => OrientationClass::Ao,
            OrientationClass::Bao => OrientationClass::Tco,
            OrientationClass::Tco => OrientationClass::Bao,
        }
    }
}

impl fmt::Display for OrientationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrientationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrientationClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadOrientation(format!("unknown orientation class {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        let o: Orientation = "+-+".parse().unwrap();
        assert_eq!(o.to_string(), "+-+");
        assert_eq!(o.to_mask(), 0b010);
        assert_eq!(Orientation::from_mask(3, 0b010), o);
        let u: Orientation = "+\u{2212}+".parse().unwrap();
        assert_eq!(u, o);
        assert!("+x".parse::<Orientation>().is_err());
        assert_eq!("".parse::<Orientation>().unwrap().len(), 0);
    }

    #[test]
    fn reversal_and_restriction() {
        let o = Orientation::from_mask(4, 0b0110);
        assert_eq!(o.reversed().to_mask(), 0b1001);
        assert_eq!(o.restrict(&[true, false, true, false]).to_string(), "+-");
    }

    #[test]
    fn class_names() {
        for c in OrientationClass::ALL {
            assert_eq!(c.name().parse::<OrientationClass>().unwrap(), c);
            assert_eq!(c.dual().dual(), c);
        }
    }
}
