//! Dual, deletion, contraction and the coloop-aware `\\` operation on the
//! kite map.
//!
//! `cargo run --example minors`

use surfgraph::RibbonGraph;

fn describe(name: &str, g: &RibbonGraph) {
    let e = g.euler_data();
    println!(
        "{name:>24}: V={} E={} F={} c={} g={}",
        e.v_count, e.e_count, e.f_count, e.components, e.genus
    );
}

fn main() -> surfgraph::Result<()> {
    let g = RibbonGraph::read_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/kite.json"))?;
    describe("kite", &g);
    describe("dual", &g.dual());
    assert_eq!(g.dual().dual(), g);
    describe("delete e1", &g.delete(&[0])?);
    describe("contract e1", &g.contract(&[0])?);
    describe("contract e3", &g.contract(&[2])?);
    describe("delete e1, e2", &g.delete(&[0, 1])?);
    describe("\\\\ {e1, e2, e3}", &g.double_slash(&[0, 1, 2])?);
    let ag = g.underlying().abstract_contract(&[2])?;
    println!("{:>24}: {} vertices, {} edges", "underlying // e3", ag.vertex_count(), ag.edge_count());
    Ok(())
}
