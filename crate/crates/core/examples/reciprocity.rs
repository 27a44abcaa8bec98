//! Pair counts against the counting polynomials evaluated at `-k`.
//!
//! `cargo run --example reciprocity -- crates/core/data/kite.json 3`

use surfgraph::enumeration::{check_reciprocity, polynomial};
use surfgraph::{Kind, RibbonGraph};

fn main() -> surfgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/kite.json").into());
    let kmax: u64 = args.next().map_or(3, |s| s.parse().expect("kmax must be a number"));
    let g = RibbonGraph::read_file(path)?;
    for kind in Kind::ALL {
        let p = polynomial(&g, kind)?;
        for k in 1..=kmax {
            let c = check_reciprocity(&g, kind, &p, k)?;
            println!(
                "{:>14} k={k}: pairs {:>6}  signed value {:>6}  {}",
                kind.name(),
                c.pairs,
                c.signed_value,
                if c.holds { "ok" } else { "MISMATCH" }
            );
        }
    }
    Ok(())
}
