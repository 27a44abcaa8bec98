//! Face boundaries, signed boundaries and the face matrix.
//!
//! `cargo run --example boundaries`

use surfgraph::{Orientation, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let dir = env!("CARGO_MANIFEST_DIR");
    let kite = RibbonGraph::read_file(format!("{dir}/data/kite.json"))?;
    let face = |name: &str| {
        let names = kite.labels().and_then(|l| l.faces.clone()).unwrap_or_default();
        names.iter().position(|n| n == name).expect("labelled face")
    };
    let top_and_bottom = [face("f1"), face("f3")];
    let boundary: Vec<usize> = kite.boundary(&top_and_bottom)?.iter().map(|e| e + 1).collect();
    println!("boundary of {{f1, f3}}: edges {boundary:?}");
    let signed = kite.signed_boundary(&top_and_bottom, &Orientation::reference(kite.edge_count()))?;
    println!("signed boundary: {:?} (coherent: {})", signed.0, signed.is_coherent());

    let example = RibbonGraph::read_file(format!("{dir}/data/face_matrix_example.json"))?;
    let d = example.face_matrix();
    println!("face matrix of the two-face example (rank {}):", d.rank());
    for row in &d.rows {
        println!("  {row:?}");
    }
    Ok(())
}
