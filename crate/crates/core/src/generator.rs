//! Exhaustive generation of small maps by scanning every rotation
//! permutation of `2m` darts with the fixed pairing `(0 1)(2 3)...`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ribbon::{CanonicalCode, EulerData, RibbonGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub edges: usize,
    pub genus: Option<usize>,
    /// `Some(true)` keeps only planar maps, `Some(false)` only non-planar ones.
    pub planar: Option<bool>,
    pub connected: bool,
    pub dedupe: bool,
}

impl CorpusSpec {
    /// Connected maps with `edges` edges, deduplicated, no other filter.
    pub fn new(edges: usize) -> Self {
        CorpusSpec {
            edges,
            genus: None,
            planar: None,
            connected: true,
            dedupe: true,
        }
    }

    pub fn genus(mut self, genus: usize) -> Self {
        self.genus = Some(genus);
        self
    }

    pub fn planar(mut self, planar: bool) -> Self {
        self.planar = Some(planar);
        self
    }

    fn check(&self) -> Result<()> {
        match (self.genus, self.planar) {
            (Some(g), Some(true)) if g > 0 => Err(Error::InvalidSpec(format!("genus {g} contradicts planarity"))),
            (Some(0), Some(false)) => Err(Error::InvalidSpec("genus 0 contradicts non-planarity".into())),
            _ => Ok(()),
        }
    }

    fn accepts(&self, g: &RibbonGraph) -> bool {
        (!self.connected || g.component_count() == 1)
            && self.genus.is_none_or(|x| g.genus() == x)
            && self.planar.is_none_or(|p| g.is_planar() == p)
    }
}

/// All maps matching `spec`, sorted by canonical code. With deduplication
/// each isomorphism class is represented by its member with the
/// lexicographically smallest rotation permutation.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<RibbonGraph>> {
    spec.check()?;
    let m = spec.edges;
    if m > Limits::global().max_generator_edges {
        return Err(Error::TooLarge(format!(
            "generating maps with {m} edges exceeds the limit of {}",
            Limits::global().max_generator_edges
        )));
    }
    if m == 0 {
        let g = RibbonGraph::isolated_vertices(1);
        return Ok(if spec.accepts(&g) { vec![g] } else { Vec::new() });
    }
    let n = 2 * m;
    let pairs: Vec<[usize; 2]> = (0..m).map(|i| [2 * i, 2 * i + 1]).collect();

    let found: Vec<Vec<(CanonicalCode, Vec<usize>)>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut sigma = vec![usize::MAX; n];
            let mut used = vec![false; n];
            sigma[0] = first;
            used[first] = true;
            scan(1, &mut sigma, &mut used, &mut |sigma| {
                let g = RibbonGraph::build(n, sigma.to_vec(), pairs.clone(), 0).expect("valid by construction");
                if spec.accepts(&g) {
                    out.push((g.canonical_code(), sigma.to_vec()));
                }
            });
            out
        })
        .collect();

    let mut all: Vec<(CanonicalCode, Vec<usize>)> = found.into_iter().flatten().collect();
    all.sort();
    if spec.dedupe {
        all.dedup_by(|a, b| a.0 == b.0);
    }
    Ok(all
        .into_iter()
        .map(|(_, sigma)| RibbonGraph::build(n, sigma, pairs.clone(), 0).expect("valid by construction"))
        .collect())
}

fn scan(i: usize, sigma: &mut [usize], used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
    if i == sigma.len() {
        visit(sigma);
        return;
    }
    for v in 0..sigma.len() {
        if !used[v] {
            used[v] = true;
            sigma[i] = v;
            scan(i + 1, sigma, used, visit);
            used[v] = false;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    #[serde(flatten)]
    pub euler: EulerData,
    pub count: u64,
}

/// Number of maps per `(V, E, F, c, g)`, sorted by those values.
pub fn corpus_stats<'a>(graphs: impl IntoIterator<Item = &'a RibbonGraph>) -> Vec<StatsRow> {
    let mut table: BTreeMap<EulerData, u64> = BTreeMap::new();
    for g in graphs {
        *table.entry(g.euler_data()).or_insert(0) += 1;
    }
    table
        .into_iter()
        .map(|(euler, count)| StatsRow { euler, count })
        .collect()
}
