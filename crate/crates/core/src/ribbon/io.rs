//! JSON map files: `{"sigma": [[dart, ...], ...], "edges": [[tail, head], ...], "labels": {...}}`.
//!
//! Each inner `sigma` list is one vertex, darts in counterclockwise order; an
//! empty list is an isolated vertex. Vertex labels follow the file's vertex
//! order; face labels follow the face numbering of [`RibbonGraph`].

use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::RibbonGraph;
use crate::error::Result;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub sigma: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Labels>,
}

impl MapFile {
    pub fn into_graph(self) -> Result<RibbonGraph> {
        let g = RibbonGraph::from_rotation(&self.sigma, self.edges)?;
        let labels = self.labels.map(|mut l| {
            if let Some(names) = l.vertices.take() {
                l.vertices = Some(reorder_vertex_labels(&self.sigma, names));
            }
            l
        });
        Ok(g.with_labels(labels))
    }
}

/// Moves vertex labels from file order to the graph's vertex numbering:
/// vertices sorted by smallest dart, isolated vertices last.
fn reorder_vertex_labels(cycles: &[Vec<usize>], names: Vec<String>) -> Vec<String> {
    let mut keyed: Vec<(usize, usize, String)> = cycles
        .iter()
        .zip(names)
        .enumerate()
        .map(|(i, (c, name))| (c.iter().min().copied().unwrap_or(usize::MAX), i, name))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, n)| n).collect()
}

impl From<&RibbonGraph> for MapFile {
    fn from(g: &RibbonGraph) -> Self {
        MapFile {
            sigma: g.rotation(),
            edges: g.edge_pairs().to_vec(),
            labels: g.labels().cloned(),
        }
    }
}

impl RibbonGraph {
    pub fn from_json(text: &str) -> Result<RibbonGraph> {
        serde_json::from_str::<MapFile>(text)?.into_graph()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapFile::from(self)).expect("map files always serialize")
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<RibbonGraph> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// Reads newline-delimited map documents, skipping blank lines.
pub fn read_corpus(reader: impl BufRead) -> Result<Vec<RibbonGraph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(RibbonGraph::from_json(&line)?);
    }
    Ok(out)
}

pub fn write_corpus<'a>(
    mut writer: impl Write,
    graphs: impl IntoIterator<Item = &'a RibbonGraph>,
) -> Result<()> {
    for g in graphs {
        writeln!(writer, "{}", g.to_json())?;
    }
    Ok(())
}
