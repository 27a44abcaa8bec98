//! Runs the complete identity suite over every connected map with at most
//! `m` edges.
//!
//! `cargo run --release --example verify_corpus -- 3 3`

use surfgraph::verify::verify_corpus;
use surfgraph::CorpusSpec;

fn main() -> surfgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(3, |s| s.parse().expect("edge count"));
    let kmax: u64 = args.next().map_or(3, |s| s.parse().expect("kmax"));
    for edges in 0..=m {
        let report = verify_corpus(&CorpusSpec::new(edges), kmax)?;
        println!("{edges} edges: {} maps, {} with failures", report.graphs, report.failures);
        for (name, tally) in &report.identities {
            if tally.fail > 0 {
                println!("  {name}: {} failed", tally.fail);
            }
        }
    }
    Ok(())
}
