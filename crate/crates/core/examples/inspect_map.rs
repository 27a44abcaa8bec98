//! Prints the vertices, faces and edge sides of a map file.
//!
//! `cargo run --example inspect_map -- crates/core/data/kite.json`

use surfgraph::RibbonGraph;

fn main() -> surfgraph::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "crates/core/data/kite.json".into());
    let g = RibbonGraph::read_file(&path)?;
    let labels = g.labels().cloned().unwrap_or_default();
    let name = |names: &Option<Vec<String>>, i: usize, prefix: &str| {
        names
            .as_ref()
            .and_then(|n| n.get(i).cloned())
            .unwrap_or_else(|| format!("{prefix}{i}"))
    };
    let e = g.euler_data();
    println!(
        "V={} E={} F={} components={} genus={}",
        e.v_count, e.e_count, e.f_count, e.components, e.genus
    );
    for v in 0..g.vertex_count() {
        println!("vertex {}: darts {:?}", name(&labels.vertices, v, "v"), g.vertex_darts(v));
    }
    for f in 0..g.face_count() {
        let mut edges: Vec<String> = g.face_darts(f).iter().map(|&d| name(&labels.edges, g.edge_of(d), "e")).collect();
        edges.dedup();
        println!("face {}: darts {:?}, edges {}", name(&labels.faces, f, "f"), g.face_darts(f), edges.join(" "));
    }
    for edge in 0..g.edge_count() {
        let (t, h) = g.endpoints(edge);
        let (r, l) = g.edge_faces(edge);
        println!(
            "edge {}: {} -> {}, right face {}, left face {}",
            name(&labels.edges, edge, "e"),
            name(&labels.vertices, t, "v"),
            name(&labels.vertices, h, "v"),
            name(&labels.faces, r, "f"),
            name(&labels.faces, l, "f"),
        );
    }
    Ok(())
}
