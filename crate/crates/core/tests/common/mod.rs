//! Independent oracles written directly from the definitions, sharing no
//! algorithm with the library beyond reading the map structure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use surfgraph::{generate, AbstractGraph, CorpusSpec, Orientation, RibbonGraph};

/// Every connected map with at most `max_edges` edges, up to isomorphism.
pub fn corpus(max_edges: usize) -> Vec<RibbonGraph> {
    (0..=max_edges)
        .flat_map(|m| generate(&CorpusSpec::new(m)).expect("corpus generation"))
        .collect()
}

pub fn all_orientations(m: usize) -> impl Iterator<Item = Orientation> {
    (0..1u64 << m).map(move |mask| Orientation::from_mask(m, mask))
}

/// Proper vertex colourings with `k` colours, by trying every colouring.
pub fn proper_colorings(g: &AbstractGraph, k: u64) -> u64 {
    let n = g.vertex_count();
    if k == 0 {
        return u64::from(n == 0);
    }
    let mut colour = vec![0u64; n];
    let mut count = 0;
    loop {
        if g.edges().iter().all(|&(a, b)| colour[a] != colour[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
    }
}

pub fn arcs(g: &AbstractGraph, o: &Orientation) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| if o.is_forward(e) { (a, b) } else { (b, a) })
        .collect()
}

fn reaches(n: usize, arcs: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &(x, y) in arcs {
            if x == v && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// An edge `u -> v` lies on a directed cycle exactly when `v` reaches `u`.
fn edge_on_directed_cycle(g: &AbstractGraph, o: &Orientation) -> Vec<bool> {
    let a = arcs(g, o);
    a.iter().map(|&(u, v)| reaches(g.vertex_count(), &a, v, u)).collect()
}

pub fn acyclic_oracle(g: &AbstractGraph, o: &Orientation) -> bool {
    edge_on_directed_cycle(g, o).iter().all(|&c| !c)
}

pub fn totally_cyclic_oracle(g: &AbstractGraph, o: &Orientation) -> bool {
    edge_on_directed_cycle(g, o).iter().all(|&c| c)
}

/// Right and left face of edge `e` as directed by `o`, read off the darts:
/// the face traced from a dart lies to its right.
fn directed_sides(g: &RibbonGraph, o: &Orientation, e: usize) -> (usize, usize) {
    let (t, h) = (g.tail_dart(e), g.head_dart(e));
    let (from, to) = if o.is_forward(e) { (t, h) } else { (h, t) };
    (g.face_of(from), g.face_of(to))
}

/// No nonempty face set whose boundary, oriented by the faces, agrees or
/// disagrees with `o` on every boundary edge.
pub fn bao_oracle(g: &RibbonGraph, o: &Orientation) -> bool {
    let f = g.face_count();
    for s in 1u64..1 << f {
        let inside = |x: usize| s >> x & 1 == 1;
        let mut signs = BTreeSet::new();
        for e in 0..g.edge_count() {
            let (right, left) = directed_sides(g, o, e);
            if right != left && inside(right) != inside(left) {
                // a chosen face on the left of the directed edge induces the same direction
                signs.insert(inside(left));
            }
        }
        if signs.len() == 1 {
            return false;
        }
    }
    true
}

/// Totally bi-walkable by the walk definition: every edge lies on a
/// directed closed walk of at most `max_len` steps that meets each cocycle
/// either not at all or in two edges crossing it in opposite directions.
pub fn tbo_walk_oracle(g: &RibbonGraph, o: &Orientation, max_len: usize) -> bool {
    let ag = g.underlying();
    let a = arcs(&ag, o);
    let cocycles = g.cocycles();
    let crossing = |c: &surfgraph::ribbon::Cocycle| -> Vec<(usize, bool)> {
        c.faces
            .iter()
            .zip(&c.steps)
            .map(|(&from, s)| (s.edge, directed_sides(g, o, s.edge).0 == from))
            .collect()
    };
    let crossings: Vec<Vec<(usize, bool)>> = cocycles.iter().map(crossing).collect();
    let bidirectional = |used: &BTreeSet<usize>| {
        crossings.iter().all(|c| {
            let hit: Vec<bool> = c.iter().filter(|(e, _)| used.contains(e)).map(|&(_, d)| d).collect();
            hit.is_empty() || (hit.contains(&true) && hit.contains(&false))
        })
    };
    (0..g.edge_count()).all(|e| {
        let mut found = false;
        let mut walk = vec![e];
        extend_walks(&a, a[e].0, a[e].1, max_len, &mut walk, &mut |w| {
            let used: BTreeSet<usize> = w.iter().copied().collect();
            if bidirectional(&used) {
                found = true;
            }
        });
        found
    })
}

fn extend_walks(
    arcs: &[(usize, usize)],
    start: usize,
    at: usize,
    max_len: usize,
    walk: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if at == start {
        visit(walk);
    }
    if walk.len() == max_len {
        return;
    }
    for (e, &(x, y)) in arcs.iter().enumerate() {
        if x == at {
            walk.push(e);
            extend_walks(arcs, start, y, max_len, walk, visit);
            walk.pop();
        }
    }
}
