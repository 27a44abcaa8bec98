//! Witness vectors in the kernel of the face matrix, one per boundary
//! acyclic orientation.
//!
//! `cargo run --example witness`

use surfgraph::enumeration::{bao_witness_vector, is_witness};
use surfgraph::orientation::enumerate_class;
use surfgraph::{OrientationClass, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let g = RibbonGraph::read_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/face_matrix_example.json"))?;
    for o in enumerate_class(&g, OrientationClass::Bao)? {
        let p = bao_witness_vector(&g, &o)?;
        let entries: Vec<String> = p.0.iter().map(ToString::to_string).collect();
        println!("{o}  p = ({})  valid: {}", entries.join(", "), is_witness(&g, &o, &p));
    }
    Ok(())
}
