//! Homogeneous linear constraint systems over `Z_k` or bounded integers,
//! solved by backtracking over the edges.
//!
//! Each row is checked as soon as its last edge is assigned. When that edge
//! has coefficient `+-1` its value is forced rather than enumerated.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Where edge values live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `Z_k`, values `0..k`.
    Modular(u64),
    /// Integers with absolute value below `k`.
    Integral(u64),
}

impl Domain {
    fn values(self, nowhere_zero: bool) -> Vec<i64> {
        let all: Vec<i64> = match self {
            Domain::Modular(k) => (0..k as i64).collect(),
            Domain::Integral(k) => {
                let b = k as i64 - 1;
                (-b..=b).collect()
            }
        };
        all.into_iter().filter(|&v| !nowhere_zero || v != 0).collect()
    }

    fn base(self) -> u64 {
        match self {
            Domain::Modular(k) => k,
            Domain::Integral(k) => (2 * k).saturating_sub(1),
        }
    }

    fn check(self) -> Result<()> {
        match self {
            Domain::Modular(0) | Domain::Integral(0) => Err(Error::BadModulus(0)),
            _ => Ok(()),
        }
    }

    /// Normal form of `v`, or `None` when `v` is not in the domain.
    fn reduce(self, v: i64) -> Option<i64> {
        match self {
            Domain::Modular(k) => Some(v.rem_euclid(k as i64)),
            Domain::Integral(k) => (v.unsigned_abs() < k).then_some(v),
        }
    }

    fn is_zero(self, v: i64) -> bool {
        self.reduce(v) == Some(0)
    }
}

/// Rows of `(edge, coefficient)` pairs; a vector `x` is a solution when
/// every row sums to zero in the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    edge_count: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

struct Plan {
    /// Rows to check once edge `i` is assigned.
    ending: Vec<Vec<usize>>,
    /// Row whose `+-1` coefficient at edge `i` forces the value of `x_i`.
    forcing: Vec<Option<(usize, i64)>>,
    free: usize,
}

impl LinearSystem {
    pub fn new(edge_count: usize) -> Self {
        LinearSystem {
            edge_count,
            rows: Vec::new(),
        }
    }

    /// Adds a row, merging repeated edges and dropping zero coefficients.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for (e, c) in entries {
            assert!(e < self.edge_count, "edge {e} out of range");
            match merged.iter_mut().find(|(f, _)| *f == e) {
                Some(slot) => slot.1 += c,
                None => merged.push((e, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        merged.sort_unstable();
        if !merged.is_empty() {
            self.rows.push(merged);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn is_solution(&self, x: &[i64], domain: Domain) -> bool {
        self.rows
            .iter()
            .all(|r| domain.is_zero(r.iter().map(|&(e, c)| c * x[e]).sum()))
    }

    fn plan(&self) -> Plan {
        let mut ending = vec![Vec::new(); self.edge_count];
        let mut forcing = vec![None; self.edge_count];
        for (i, r) in self.rows.iter().enumerate() {
            let &(last, c) = r.last().unwrap();
            ending[last].push(i);
            if forcing[last].is_none() && c.abs() == 1 {
                forcing[last] = Some((i, c));
            }
        }
        let free = forcing.iter().filter(|f| f.is_none()).count();
        Plan { ending, forcing, free }
    }

    /// Calls `visit` on every solution with values in `domain` (nonzero
    /// everywhere when `nowhere_zero`), in lexicographic order of edges.
    pub fn for_each_solution(
        &self,
        domain: Domain,
        nowhere_zero: bool,
        mut visit: impl FnMut(&[i64]),
    ) -> Result<()> {
        domain.check()?;
        let plan = self.plan();
        Limits::global().check_assignments(domain.base(), plan.free)?;
        let values = domain.values(nowhere_zero);
        let mut x = vec![0i64; self.edge_count];
        self.search(0, &plan, &values, domain, nowhere_zero, &mut x, &mut visit);
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        i: usize,
        plan: &Plan,
        values: &[i64],
        domain: Domain,
        nz: bool,
        x: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if i == self.edge_count {
            visit(x);
            return;
        }
        let row_ok = |x: &[i64], r: usize| domain.is_zero(self.rows[r].iter().map(|&(e, c)| c * x[e]).sum());
        if let Some((r, c)) = plan.forcing[i] {
            let partial: i64 = self.rows[r][..self.rows[r].len() - 1]
                .iter()
                .map(|&(e, a)| a * x[e])
                .sum();
            let Some(v) = domain.reduce(-c * partial) else {
                return;
            };
            if nz && v == 0 {
                return;
            }
            x[i] = v;
            if plan.ending[i].iter().all(|&r| row_ok(x, r)) {
                self.search(i + 1, plan, values, domain, nz, x, visit);
            }
        } else {
            for &v in values {
                x[i] = v;
                if plan.ending[i].iter().all(|&r| row_ok(x, r)) {
                    self.search(i + 1, plan, values, domain, nz, x, visit);
                }
            }
        }
        x[i] = 0;
    }

    /// Number of solutions, splitting the first free edge across threads.
    pub fn count(&self, domain: Domain, nowhere_zero: bool) -> Result<u64> {
        Ok(self
            .support_histogram(domain, nowhere_zero)?
            .values()
            .sum())
    }

    /// Solutions grouped by a key derived from each solution.
    pub fn histogram<K, F>(&self, domain: Domain, nowhere_zero: bool, key: F) -> Result<HashMap<K, u64>>
    where
        K: Eq + std::hash::Hash + Send,
        F: Fn(&[i64]) -> K + Sync,
    {
        domain.check()?;
        let plan = self.plan();
        Limits::global().check_assignments(domain.base(), plan.free)?;
        let values = domain.values(nowhere_zero);
        let merge = |mut a: HashMap<K, u64>, b: HashMap<K, u64>| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        };
        // split on the first edge when it is free
        let first_free = self.edge_count > 0 && plan.forcing[0].is_none();
        if !first_free {
            let mut h = HashMap::new();
            let mut x = vec![0i64; self.edge_count];
            self.search(0, &plan, &values, domain, nowhere_zero, &mut x, &mut |x| {
                *h.entry(key(x)).or_insert(0) += 1
            });
            return Ok(h);
        }
        Ok(values
            .par_iter()
            .map(|&v| {
                let mut h = HashMap::new();
                let mut x = vec![0i64; self.edge_count];
                x[0] = v;
                let ok = plan.ending[0]
                    .iter()
                    .all(|&r| domain.is_zero(self.rows[r].iter().map(|&(e, c)| c * x[e]).sum()));
                if ok {
                    self.search(1, &plan, &values, domain, nowhere_zero, &mut x, &mut |x| {
                        *h.entry(key(x)).or_insert(0) += 1
                    });
                }
                h
            })
            .reduce(HashMap::new, merge))
    }

    /// Solutions grouped by support (bit `e` set where `x_e != 0`).
    pub fn support_histogram(&self, domain: Domain, nowhere_zero: bool) -> Result<HashMap<u64, u64>> {
        if self.edge_count > 64 {
            return Err(Error::TooLarge(format!("{} edges exceed a 64-bit support mask", self.edge_count)));
        }
        self.histogram(domain, nowhere_zero, support_mask)
    }
}

pub fn support_mask(x: &[i64]) -> u64 {
    x.iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .fold(0, |m, (e, _)| m | 1 << e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sys: &LinearSystem, domain: Domain, nz: bool) -> u64 {
        let values = domain.values(nz);
        let m = sys.edge_count();
        if values.is_empty() {
            return u64::from(m == 0);
        }
        let mut count = 0;
        let mut idx = vec![0usize; m];
        'outer: loop {
            let x: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            if sys.is_solution(&x, domain) {
                count += 1;
            }
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < values.len() {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
        count
    }

    #[test]
    fn backtracking_matches_brute_force() {
        let mut sys = LinearSystem::new(4);
        sys.push_row([(0, 1), (1, -1), (2, 1)]);
        sys.push_row([(1, 1), (3, 1)]);
        sys.push_row([(0, 2), (3, 1)]);
        for k in 1..6 {
            for nz in [false, true] {
                for d in [Domain::Modular(k), Domain::Integral(k)] {
                    assert_eq!(sys.count(d, nz).unwrap(), brute(&sys, d, nz), "{d:?} nz={nz}");
                }
            }
        }
    }

    #[test]
    fn empty_system_counts_assignments() {
        let sys = LinearSystem::new(2);
        assert_eq!(sys.count(Domain::Modular(3), false).unwrap(), 9);
        assert_eq!(sys.count(Domain::Integral(3), true).unwrap(), 16);
        assert_eq!(LinearSystem::new(0).count(Domain::Modular(1), true).unwrap(), 1);
        assert!(matches!(sys.count(Domain::Modular(0), false), Err(Error::BadModulus(0))));
    }

    #[test]
    fn rows_merge_repeated_edges() {
        let mut sys = LinearSystem::new(2);
        sys.push_row([(0, 1), (0, -1)]);
        assert!(sys.rows().is_empty());
        sys.push_row([(1, 1), (0, 1), (1, 1)]);
        assert_eq!(sys.rows(), &[vec![(0, 1), (1, 2)]]);
    }
}
