//! The four nowhere-zero counting polynomials of a map and of its dual.
//!
//! `cargo run --example polynomials -- crates/core/data/torus.json`

use surfgraph::enumeration::polynomial;
use surfgraph::{Kind, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/torus.json").into());
    let g = RibbonGraph::read_file(path)?;
    let d = g.dual();
    for kind in Kind::ALL {
        println!("{:>14}(G)  = {}", kind.name(), polynomial(&g, kind)?);
        println!("{:>14}(G*) = {}", kind.name(), polynomial(&d, kind)?);
    }
    Ok(())
}
