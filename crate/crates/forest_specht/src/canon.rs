//! Canonical forms of colored graphs, used as memo keys and to decide
//! diagram equivalence.
//!
//! Forest components get an exact rooted-tree encoding (centroid rooting
//! plus sorted subtree codes). Non-forest components go through color
//! refinement followed by a minimal-labeling search within the refined
//! cells; every graph that reaches this path in practice has at most a
//! dozen edges, so the search space stays tiny.

use std::collections::BTreeMap;

use crate::graph::{BipartiteGraph, Color};

/// Opaque canonical key: equal keys if and only if the colored graphs are
/// isomorphic by a color-preserving map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(Vec<u8>);

const MARK_OPEN: u8 = 250;
const MARK_CLOSE: u8 = 251;
const MARK_TREE: u8 = 252;
const MARK_GENERAL: u8 = 253;
const MARK_SEP: u8 = 254;

/// Canonical key of a colored graph.
pub fn key(g: &BipartiteGraph) -> CanonKey {
    let mut parts: Vec<Vec<u8>> = g
        .components()
        .iter()
        .map(|comp| component_key(g, comp))
        .collect();
    parts.sort();
    let mut out = Vec::new();
    for p in parts {
        out.extend_from_slice(&p);
        out.push(MARK_SEP);
    }
    CanonKey(out)
}

/// Color-preserving isomorphism test.
pub fn isomorphic(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    key(a) == key(b)
}

fn component_key(g: &BipartiteGraph, comp_edges: &[usize]) -> Vec<u8> {
    let sub = g.edge_subgraph(comp_edges);
    if sub.is_forest() {
        tree_key(&sub)
    } else {
        general_key(&sub)
    }
}

fn color_byte(c: Color) -> u8 {
    match c {
        Color::White => 0,
        Color::Black => 1,
    }
}

/// Exact encoding of a colored tree: root at the center (or the central
/// edge) and emit sorted subtree codes.
fn tree_key(t: &BipartiteGraph) -> Vec<u8> {
    let centers = tree_centers(t);
    let mut best: Option<Vec<u8>> = None;
    for &c in &centers {
        let mut code = vec![MARK_TREE];
        code.extend(encode_rooted(t, c, None));
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("tree has a center")
}

fn tree_centers(t: &BipartiteGraph) -> Vec<u32> {
    let mut degree: BTreeMap<u32, usize> =
        t.vertices().iter().map(|&(v, _)| (v, t.degree(v))).collect();
    let mut remaining: Vec<u32> = degree.keys().copied().collect();
    while remaining.len() > 2 {
        let leaves: Vec<u32> = remaining
            .iter()
            .copied()
            .filter(|v| degree[v] <= 1)
            .collect();
        for leaf in &leaves {
            for &(_, u) in t.incident(*leaf) {
                if let Some(d) = degree.get_mut(&u) {
                    *d = d.saturating_sub(1);
                }
            }
            degree.remove(leaf);
        }
        remaining.retain(|v| degree.contains_key(v));
    }
    remaining
}

fn encode_rooted(t: &BipartiteGraph, v: u32, parent: Option<u32>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .incident(v)
        .iter()
        .filter(|&&(_, u)| Some(u) != parent)
        .map(|&(_, u)| encode_rooted(t, u, Some(v)))
        .collect();
    children.sort();
    let mut out = vec![color_byte(t.color(v)), MARK_OPEN];
    for c in children {
        out.extend_from_slice(&c);
    }
    out.push(MARK_CLOSE);
    out
}

/// Minimal-labeling encoding of a small non-forest component.
fn general_key(g: &BipartiteGraph) -> Vec<u8> {
    let vertices: Vec<u32> = g.vertices().iter().map(|&(v, _)| v).collect();

    // Color refinement: signature = (old rank, sorted neighbor ranks).
    let mut rank: BTreeMap<u32, usize> = vertices
        .iter()
        .map(|&v| (v, color_byte(g.color(v)) as usize))
        .collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, u32)> = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = g.incident(v).iter().map(|&(_, u)| rank[&u]).collect();
                nb.sort_unstable();
                (rank[&v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next: BTreeMap<u32, usize> = BTreeMap::new();
        let mut r = 0usize;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                r += 1;
            }
            next.insert(sigs[i].2, r);
        }
        if next == rank {
            break;
        }
        rank = next;
    }

    // Cells in rank order; every cell is color-pure because the initial
    // signature contains the color.
    let mut cells: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for &v in &vertices {
        cells.entry(rank[&v]).or_default().push(v);
    }
    let cells: Vec<Vec<u32>> = cells.into_values().collect();

    // Assign positions cell by cell, trying every within-cell order and
    // keeping the lexicographically least edge encoding.
    let mut best: Option<Vec<u8>> = None;
    let mut assignment: BTreeMap<u32, u8> = BTreeMap::new();
    search_cells(g, &cells, 0, &mut assignment, &mut best);
    let mut out = vec![MARK_GENERAL, vertices.len() as u8];
    out.extend(best.expect("search always yields a labeling"));
    out
}

fn search_cells(
    g: &BipartiteGraph,
    cells: &[Vec<u32>],
    idx: usize,
    assignment: &mut BTreeMap<u32, u8>,
    best: &mut Option<Vec<u8>>,
) {
    if idx == cells.len() {
        let code = encode_assignment(g, assignment);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let cell = &cells[idx];
    let base = assignment.len() as u8;
    permute(cell, &mut |order| {
        for (i, &v) in order.iter().enumerate() {
            assignment.insert(v, base + i as u8);
        }
        search_cells(g, cells, idx + 1, assignment, best);
        for &v in order {
            assignment.remove(&v);
        }
    });
}

fn permute(items: &[u32], f: &mut impl FnMut(&[u32])) {
    let mut v = items.to_vec();
    permute_rec(&mut v, 0, f);
}

fn permute_rec(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute_rec(v, k + 1, f);
        v.swap(k, i);
    }
}

fn encode_assignment(g: &BipartiteGraph, assignment: &BTreeMap<u32, u8>) -> Vec<u8> {
    let mut colors: Vec<(u8, u8)> = assignment
        .iter()
        .map(|(&v, &p)| (p, color_byte(g.color(v))))
        .collect();
    colors.sort_unstable();
    let mut edges: Vec<(u8, u8)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (pa, pb) = (assignment[&a], assignment[&b]);
            (pa.min(pb), pa.max(pb))
        })
        .collect();
    edges.sort_unstable();
    let mut out: Vec<u8> = colors.iter().map(|&(_, c)| c).collect();
    out.push(MARK_SEP);
    for (a, b) in edges {
        out.push(a);
        out.push(b);
    }
    out
}
