//! Generates all connected maps with a given number of edges and prints
//! their Euler statistics.
//!
//! `cargo run --example generate_corpus -- 3`

use surfgraph::{corpus_stats, generate, CorpusSpec};

fn main() -> surfgraph::Result<()> {
    let m: usize = std::env::args().nth(1).map_or(3, |s| s.parse().expect("edge count"));
    let corpus = generate(&CorpusSpec::new(m))?;
    println!("{} maps with {m} edges up to isomorphism", corpus.len());
    println!("  V  E  F  c  g  count");
    for row in corpus_stats(&corpus) {
        let e = row.euler;
        println!("{:>3}{:>3}{:>3}{:>3}{:>3}{:>7}", e.v_count, e.e_count, e.f_count, e.components, e.genus, row.count);
    }
    Ok(())
}
