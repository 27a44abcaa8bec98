//! Counts the four orientation classes of a map and checks that the dual
//! orientation carries them onto the dual classes of the dual map.
//!
//! `cargo run --example orientation_classes -- crates/core/data/kite.json`

use std::collections::BTreeSet;

use surfgraph::orientation::{dual_orientation, enumerate_class};
use surfgraph::{OrientationClass, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/kite.json").into());
    let g = RibbonGraph::read_file(path)?;
    let d = g.dual();
    for class in OrientationClass::ALL {
        let own = enumerate_class(&g, class)?;
        let image: BTreeSet<String> = own
            .iter()
            .map(|o| dual_orientation(&g, o).map(|x| x.to_string()))
            .collect::<surfgraph::Result<_>>()?;
        let target: BTreeSet<String> = enumerate_class(&d, class.dual())?.iter().map(|o| o.to_string()).collect();
        println!(
            "|{class}(G)| = {:>3}   dual image equals {}(G*): {}",
            own.len(),
            class.dual(),
            image == target
        );
    }
    Ok(())
}
