//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use surfgraph::enumeration::{
    bao_witness_vector, check_integral_reciprocity, count_nz_balanced_flows, count_nz_flows, count_nz_local_tensions,
    count_nz_tensions, integral_local_tension_reciprocity_pairs, integral_quasipolynomial, is_witness, polynomial,
    reciprocity_pairs, signed_value_at_negative, tension_system, tension_system_all_cycles, Domain,
};
use surfgraph::orientation::{
    boundary_acyclic_by_boundaries, boundary_acyclic_by_duality, class_masks, cw_faces, dual_orientation,
    enumerate_class, is_acyclic, tbo_formula_with_vertex_count, tbo_generating_poly_formula, tbo_histogram,
    totally_biwalkable_by_cocycles, totally_biwalkable_by_duality, totally_cyclic_by_cuts, totally_cyclic_by_scc,
};
use surfgraph::{Kind, Orientation, OrientationClass, RibbonGraph};

use common::{
    acyclic_oracle, all_orientations, bao_oracle, corpus, proper_colorings, tbo_walk_oracle, totally_cyclic_oracle,
};

/// Largest edge count of the exhaustive corpus.
const CORPUS_EDGES: usize = 4;
const ANCHOR_BUDGET: Duration = Duration::from_secs(1);
const DUALITY_BUDGET: Duration = Duration::from_secs(300);
const DUALITY_KMAX: u64 = 5;
const RECIPROCITY_KMAX: u64 = 3;
const INTEGRAL_KMAX: u64 = 3;
const MAX_PERIOD: usize = 6;
const WALK_ORACLE_EDGES: usize = 3;
const COLORING_KMAX: u64 = 4;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn(&[RibbonGraph]) -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: surfgraph::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn name(g: &RibbonGraph) -> String {
    let e = g.euler_data();
    format!("map {} (V={} E={} F={} g={})", g.to_json(), e.v_count, e.e_count, e.f_count, e.genus)
}

fn data(file: &str) -> RibbonGraph {
    RibbonGraph::read_file(format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))).expect("data file")
}

fn for_all(corpus: &[RibbonGraph], f: impl Fn(&RibbonGraph) -> Check + Sync) -> Check {
    corpus.par_iter().map(|g| f(g).map_err(|e| format!("{}: {e}", name(g)))).collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} maps", corpus.len()))
}

fn mask_set(g: &RibbonGraph, class: OrientationClass) -> std::result::Result<BTreeSet<u64>, String> {
    Ok(lib(class_masks(g, class))?.into_iter().collect())
}

fn reference_anchors(_: &[RibbonGraph]) -> Check {
    let start = Instant::now();
    let torus = data("torus.json");
    let dual = torus.dual();
    for k in 1..=6u64 {
        ensure!(lib(count_nz_tensions(&torus, k))? == 0, "torus tension count at k={k} is not 0");
        let flows = lib(count_nz_flows(&dual, k))?;
        ensure!(flows == (k - 1) * (k - 1), "dual torus flows at k={k}: {flows}");
    }

    let kite = data("kite.json");
    let labels = kite.labels().cloned().unwrap_or_default();
    let faces = labels.faces.unwrap_or_default();
    let edges = labels.edges.unwrap_or_default();
    let face = |n: &str| faces.iter().position(|x| x == n).expect("kite face label");
    let chosen = [face("f1"), face("f3")];
    let boundary: Vec<&str> = lib(kite.boundary(&chosen))?.iter().map(|&e| edges[e].as_str()).collect();
    ensure!(boundary == ["e3", "e4", "e5", "e6"], "kite boundary {boundary:?}");
    let signed = lib(kite.signed_boundary(&chosen, &Orientation::reference(6)))?;
    ensure!(signed.0 == [0, 0, 1, -1, 1, -1], "kite signed boundary {:?}", signed.0);

    let example = data("face_matrix_example.json");
    let d = example.face_matrix();
    let expected: Vec<Vec<i8>> = vec![vec![1, 0, 1, 0], vec![-1, 0, -1, 0]];
    let negated: Vec<Vec<i8>> = expected.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
    let mut rows = d.rows.clone();
    rows.sort();
    let mut a = expected.clone();
    a.sort();
    let mut b = negated;
    b.sort();
    ensure!(rows == a || rows == b, "face matrix {:?}", d.rows);
    let baos = lib(enumerate_class(&example, OrientationClass::Bao))?;
    ensure!(baos.len() == 8, "face matrix example has {} boundary acyclic orientations", baos.len());
    let e3_e4_reversed: Orientation = "++--".parse().expect("orientation");
    ensure!(baos.contains(&e3_e4_reversed), "reversing e3 and e4 is not boundary acyclic");

    let elapsed = start.elapsed();
    ensure!(elapsed < ANCHOR_BUDGET, "took {elapsed:?}");
    Ok(format!("torus, kite and face-matrix anchors exact in {elapsed:.2?}"))
}

fn duality_suite(corpus: &[RibbonGraph]) -> Check {
    let start = Instant::now();
    let summary = for_all(corpus, |g| {
        let d = g.dual();
        let m = g.edge_count();
        for (from, to) in [(OrientationClass::Bao, OrientationClass::Tco), (OrientationClass::Ao, OrientationClass::Tbo)] {
            let mut image = BTreeSet::new();
            for mask in lib(class_masks(g, from))? {
                let o = lib(dual_orientation(g, &Orientation::from_mask(m, mask)))?;
                ensure!(image.insert(o.to_mask()), "dual orientation is not injective on {from}");
            }
            ensure!(image == mask_set(&d, to)?, "{from}(G) does not map onto {to}(G*)");
        }
        for k in 1..=DUALITY_KMAX {
            let (t, b) = (lib(count_nz_tensions(g, k))?, lib(count_nz_balanced_flows(&d, k))?);
            ensure!(t == b, "k={k}: tension {t} vs balanced flow of dual {b}");
            let (l, f) = (lib(count_nz_local_tensions(g, k))?, lib(count_nz_flows(&d, k))?);
            ensure!(l == f, "k={k}: local tension {l} vs flow of dual {f}");
        }
        Ok(String::new())
    })?;
    let elapsed = start.elapsed();
    ensure!(elapsed < DUALITY_BUDGET, "took {elapsed:?}");
    Ok(format!("{summary}, k=1..{DUALITY_KMAX}, {elapsed:.2?}"))
}

fn class_of(kind: Kind) -> OrientationClass {
    match kind {
        Kind::Tension => OrientationClass::Ao,
        Kind::Flow => OrientationClass::Tco,
        Kind::LocalTension => OrientationClass::Bao,
        Kind::BalancedFlow => OrientationClass::Tbo,
    }
}

fn minus_one(corpus: &[RibbonGraph]) -> Check {
    for_all(corpus, |g| {
        for kind in Kind::ALL {
            let p = lib(polynomial(g, kind))?;
            let class = class_of(kind);
            let n = mask_set(g, class)?.len() as u128;
            ensure!(p.eval(-1).unsigned_abs() == n, "|{kind}(-1)| = {} but |{class}| = {n}", p.eval(-1));
        }
        Ok(String::new())
    })
}

fn reciprocity(corpus: &[RibbonGraph]) -> Check {
    let summary = for_all(corpus, |g| {
        for kind in Kind::ALL {
            let p = lib(polynomial(g, kind))?;
            for k in 1..=RECIPROCITY_KMAX {
                let pairs = lib(reciprocity_pairs(g, kind, k))? as i128;
                let value = p.eval(-(k as i64));
                ensure!(value.abs() == pairs, "{kind} k={k}: pairs {pairs} vs |p(-k)| = {}", value.abs());
                if kind == Kind::LocalTension {
                    let signed = signed_value_at_negative(g, kind, &p, k);
                    ensure!(signed == pairs, "signed local tension identity at k={k}: {signed} vs {pairs}");
                }
            }
        }
        Ok(String::new())
    })?;
    let torus = data("torus.json");
    for k in 1..=4u64 {
        let pairs = lib(reciprocity_pairs(&torus, Kind::LocalTension, k))?;
        ensure!(pairs == (k + 1) * (k + 1), "torus pairs at k={k}: {pairs}");
    }
    Ok(format!("{summary}, k=1..{RECIPROCITY_KMAX}; torus (k+1)^2 for k=1..4"))
}

fn integral(corpus: &[RibbonGraph]) -> Check {
    let small: Vec<RibbonGraph> = corpus.iter().filter(|g| g.edge_count() <= 4).cloned().collect();
    let summary = for_all(&small, |g| {
        let q = lib(integral_quasipolynomial(g, Kind::LocalTension, MAX_PERIOD))?;
        for k in 0..=INTEGRAL_KMAX {
            let c = lib(check_integral_reciprocity(g, &q, k))?;
            let value = q.eval_integer(-(k as i64));
            ensure!(
                value.map(i128::abs) == Some(c.pairs as i128),
                "k={k}: pairs {} vs quasipolynomial {value:?}",
                c.pairs
            );
        }
        let bao = mask_set(g, OrientationClass::Bao)?.len() as u64;
        let at_zero = lib(integral_local_tension_reciprocity_pairs(g, 0))?;
        ensure!(at_zero == bao, "k=0 pairs {at_zero} vs |BAO| {bao}");
        Ok(String::new())
    })?;
    let mut periods = BTreeSet::new();
    for g in &small {
        periods.insert(lib(integral_quasipolynomial(g, Kind::LocalTension, MAX_PERIOD))?.period);
    }
    Ok(format!("{summary}, k=0..{INTEGRAL_KMAX}, detected periods {periods:?}"))
}

fn planar_collapse(corpus: &[RibbonGraph]) -> Check {
    let planar: Vec<RibbonGraph> = corpus.iter().filter(|g| g.is_planar()).cloned().collect();
    let summary = for_all(&planar, |g| {
        ensure!(mask_set(g, OrientationClass::Bao)? == mask_set(g, OrientationClass::Ao)?, "BAO != AO");
        ensure!(mask_set(g, OrientationClass::Tbo)? == mask_set(g, OrientationClass::Tco)?, "TBO != TCO");
        Ok(String::new())
    })?;
    Ok(format!("{summary} on the sphere"))
}

fn oracles(corpus: &[RibbonGraph]) -> Check {
    let pairs = corpus.iter().map(|g| 1u64 << g.edge_count()).sum::<u64>();
    for_all(corpus, |g| {
        let ag = g.underlying();
        let dual = g.dual_incidence();
        for o in all_orientations(g.edge_count()) {
            let ao = lib(is_acyclic(g, &o))?;
            ensure!(ao == acyclic_oracle(&ag, &o), "acyclic disagrees with oracle at {o}");
            let tco = lib(totally_cyclic_by_scc(&ag, &o))?;
            ensure!(tco == lib(totally_cyclic_by_cuts(&ag, &o))?, "totally cyclic routes disagree at {o}");
            ensure!(tco == totally_cyclic_oracle(&ag, &o), "totally cyclic disagrees with oracle at {o}");
            let bao = lib(boundary_acyclic_by_boundaries(g, &o))?;
            ensure!(bao == lib(boundary_acyclic_by_duality(g, &o))?, "boundary acyclic routes disagree at {o}");
            ensure!(bao == bao_oracle(g, &o), "boundary acyclic disagrees with oracle at {o}");
            let tbo = lib(totally_biwalkable_by_cocycles(g, &o))?;
            ensure!(tbo == lib(totally_biwalkable_by_duality(g, &o))?, "bi-walkable routes disagree at {o}");
            if g.edge_count() <= WALK_ORACLE_EDGES {
                let walk = tbo_walk_oracle(g, &o, 2 * g.edge_count());
                ensure!(tbo == walk, "bi-walkable disagrees with walk oracle at {o}");
            }
            ensure!(
                lib(is_acyclic(&g.dual(), &o))? == tbo && totally_cyclic_oracle(&dual, &o) == bao,
                "dual characterisations disagree at {o}"
            );
        }
        if g.edge_count() <= 4 {
            let fundamental = tension_system(&ag);
            let all_cycles = tension_system_all_cycles(&ag);
            for k in 1..=4u64 {
                let total = k.pow(g.edge_count() as u32);
                for index in 0..total {
                    let x: Vec<i64> = (0..g.edge_count())
                        .map(|e| (index / k.pow(e as u32) % k) as i64)
                        .collect();
                    let d = Domain::Modular(k);
                    ensure!(
                        fundamental.is_solution(&x, d) == all_cycles.is_solution(&x, d),
                        "tension checks disagree at {x:?} mod {k}"
                    );
                }
            }
        }
        for k in 1..=COLORING_KMAX {
            let tensions = lib(count_nz_tensions(g, k))?;
            let colourings = proper_colorings(&ag, k);
            ensure!(
                k.pow(g.component_count() as u32) * tensions == colourings,
                "k={k}: k^c * tensions = {} but {colourings} colourings",
                k.pow(g.component_count() as u32) * tensions
            );
        }
        Ok(String::new())
    })
    .map(|s| format!("{s}, {pairs} (map, orientation) pairs, walk oracle up to {WALK_ORACLE_EDGES} edges"))
}

fn witnesses(corpus: &[RibbonGraph]) -> Check {
    let count = std::sync::atomic::AtomicUsize::new(0);
    let summary = for_all(corpus, |g| {
        for o in lib(enumerate_class(g, OrientationClass::Bao))? {
            let p = lib(bao_witness_vector(g, &o))?;
            ensure!(is_witness(g, &o, &p), "witness for {o} fails its postconditions");
            let d = g.face_matrix();
            ensure!(d.apply_rational(&p.0).iter().all(num_traits::Zero::is_zero), "witness for {o} is not in ker D");
            count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        Ok(String::new())
    })?;
    Ok(format!("{summary}, {} witness vectors", count.into_inner()))
}

fn cw_face_checks(corpus: &[RibbonGraph]) -> Check {
    let primal_mismatch = std::sync::atomic::AtomicUsize::new(0);
    let summary = for_all(corpus, |g| {
        let tau_dual = lib(polynomial(&g.dual(), Kind::Tension))?;
        let tbo = lib(class_masks(g, OrientationClass::Tbo))?;
        ensure!(
            tau_dual.eval(-1).unsigned_abs() == tbo.len() as u128,
            "|tension(G*; -1)| = {} vs |TBO| = {}",
            tau_dual.eval(-1),
            tbo.len()
        );
        let mut unique = vec![0u64; g.face_count()];
        for &mask in &tbo {
            if let [f] = lib(cw_faces(g, &Orientation::from_mask(g.edge_count(), mask)))?[..] {
                unique[f] += 1;
            }
        }
        let constant = tau_dual.coeff(0).unsigned_abs();
        ensure!(unique.iter().all(|&u| u == constant), "unique cw-face counts {unique:?} vs |constant| {constant}");
        let hist = lib(tbo_histogram(g))?.to_polynomial();
        let formula = lib(tbo_generating_poly_formula(g))?;
        ensure!(hist == formula, "histogram {hist} vs formula {formula}");
        if lib(tbo_formula_with_vertex_count(g, g.vertex_count()))? != formula {
            primal_mismatch.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        Ok(String::new())
    })?;
    Ok(format!(
        "{summary}; sign read from |V(G)| instead disagrees on {} maps",
        primal_mismatch.into_inner()
    ))
}

fn main() {
    let start = Instant::now();
    let corpus = corpus(CORPUS_EDGES);
    println!("corpus: {} connected maps with at most {CORPUS_EDGES} edges", corpus.len());
    let criteria: [Criterion; 9] = [
        ("reference anchors", reference_anchors),
        ("exhaustive duality", duality_suite),
        ("minus-one identities", minus_one),
        ("reciprocity", reciprocity),
        ("integral reciprocity", integral),
        ("planar collapse", planar_collapse),
        ("oracle agreement", oracles),
        ("witness vectors", witnesses),
        ("cw-face identities", cw_face_checks),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check(&corpus) {
            Ok(detail) => println!("criterion {}: PASS {title}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {title}: {why} [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
