//! Clockwise faces of totally bi-walkable orientations, tallied and compared
//! with the subset-sum formula.
//!
//! `cargo run --example cw_faces -- crates/core/data/triangle.json`

use surfgraph::orientation::{tbo_formula_with_vertex_count, tbo_generating_poly_formula, tbo_histogram};
use surfgraph::RibbonGraph;

fn main() -> surfgraph::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/triangle.json").into());
    let g = RibbonGraph::read_file(path)?;
    let h = tbo_histogram(&g)?;
    println!("histogram (index = number of cw-faces): {:?}", h.counts);
    println!("as a polynomial:       {}", h.to_polynomial().display_in("q"));
    println!("formula (|V(G*)| sign): {}", tbo_generating_poly_formula(&g)?.display_in("q"));
    println!("formula (|V(G)| sign):  {}", tbo_formula_with_vertex_count(&g, g.vertex_count())?.display_in("q"));
    Ok(())
}
