//! Enumeration guards.
//!
//! Every brute-force routine checks its search-space size against the
//! process-wide [`Limits`] before starting. Setting the environment variable
//! `SURFGRAPH_GUARD_OVERRIDE=1` lifts all guards.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const GUARD_OVERRIDE_ENV: &str = "SURFGRAPH_GUARD_OVERRIDE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count for a `2^|E|` orientation scan.
    pub max_orientation_edges: usize,
    /// Largest number of edge assignments a single count may visit.
    pub max_assignments: u128,
    /// Largest edge count accepted by the map generator.
    pub max_generator_edges: usize,
    /// Largest face (or vertex) count for subset scans.
    pub max_subset_scan: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orientation_edges: 20,
            max_assignments: 100_000_000,
            max_generator_edges: 5,
            max_subset_scan: 20,
        }
    }
}

static GLOBAL: OnceLock<Limits> = OnceLock::new();

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_orientation_edges: 63,
            max_assignments: u128::MAX,
            max_generator_edges: usize::MAX,
            max_subset_scan: 63,
        }
    }

    pub fn from_env() -> Self {
        match std::env::var(GUARD_OVERRIDE_ENV) {
            Ok(v) if v == "1" => Limits::unlimited(),
            _ => Limits::default(),
        }
    }

    /// Process-wide limits; initialised from the environment on first use.
    pub fn global() -> &'static Limits {
        GLOBAL.get_or_init(Limits::from_env)
    }

    /// Installs process-wide limits. Returns `false` if they were already fixed.
    pub fn install(limits: Limits) -> bool {
        GLOBAL.set(limits).is_ok()
    }

    pub(crate) fn check_orientations(&self, edges: usize) -> Result<()> {
        if edges > self.max_orientation_edges {
            return Err(Error::TooLarge(format!(
                "2^{edges} orientations exceeds 2^{}",
                self.max_orientation_edges
            )));
        }
        Ok(())
    }

    pub(crate) fn check_assignments(&self, base: u64, edges: usize) -> Result<()> {
        let total = (base as u128).checked_pow(edges as u32);
        match total {
            Some(t) if t <= self.max_assignments => Ok(()),
            _ => Err(Error::TooLarge(format!(
                "{base}^{edges} assignments exceeds {}",
                self.max_assignments
            ))),
        }
    }

    pub(crate) fn check_subsets(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_subset_scan {
            return Err(Error::TooLarge(format!(
                "2^{n} {what} subsets exceeds 2^{}",
                self.max_subset_scan
            )));
        }
        Ok(())
    }
}
