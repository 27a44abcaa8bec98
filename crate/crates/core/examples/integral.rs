//! Integral local tensions: the fitted quasipolynomial and its reciprocity
//! with boundary acyclic orientations.
//!
//! `cargo run --example integral -- crates/core/data/face_matrix_example.json`

use surfgraph::enumeration::{check_integral_reciprocity, count_integral_local_tensions, integral_quasipolynomial};
use surfgraph::orientation::count_class;
use surfgraph::{Kind, OrientationClass, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/face_matrix_example.json").into());
    let g = RibbonGraph::read_file(path)?;
    for k in 1..=4 {
        println!("k={k}: {} nowhere-zero integral local tensions", count_integral_local_tensions(&g, k)?);
    }
    let q = integral_quasipolynomial(&g, Kind::LocalTension, 6)?;
    println!("quasipolynomial: {}", serde_json::to_string(&q).expect("serializable"));
    println!("boundary acyclic orientations: {}", count_class(&g, OrientationClass::Bao)?);
    for k in 0..=3 {
        let c = check_integral_reciprocity(&g, &q, k)?;
        println!("k={k}: pairs {} vs {:?} ({})", c.pairs, c.signed_value, if c.holds { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
