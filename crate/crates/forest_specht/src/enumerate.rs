//! Exhaustive enumeration of small graphs up to color-preserving
//! isomorphism, and of matchings within a fixed graph.
//!
//! Representatives are grown edge by edge: every forest with `n` edges
//! arises from one with `n - 1` edges by adding a pendant or an isolated
//! edge, and general bipartite graphs additionally by joining two
//! existing vertices. Duplicates are removed via canonical keys.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::canon;
use crate::diagram::{Diagram, Transversal};
use crate::graph::{is_almost_perfect, is_special, BipartiteGraph, Color, Matching};

fn grow(reps: &[BipartiteGraph], allow_joins: bool) -> Vec<BipartiteGraph> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    let mut push = |g: BipartiteGraph| {
        let key = canon::key(&g);
        if seen.insert(key, ()).is_none() {
            out.push(g);
        }
    };
    for g in reps {
        let next_id = g.max_vertex_id() + 1;
        // Fresh isolated edge.
        {
            let mut vs = g.vertices().to_vec();
            vs.push((next_id, Color::White));
            vs.push((next_id + 1, Color::Black));
            let mut es = g.edges().to_vec();
            es.push((next_id, next_id + 1));
            push(BipartiteGraph::new(vs, es).expect("isolated edge keeps validity"));
        }
        // Pendant leaf at every vertex.
        for &(v, c) in g.vertices() {
            let mut vs = g.vertices().to_vec();
            vs.push((next_id, c.flip()));
            let mut es = g.edges().to_vec();
            es.push((v, next_id));
            push(BipartiteGraph::new(vs, es).expect("pendant keeps validity"));
        }
        // Joining edge between existing opposite-color non-adjacent pairs.
        if allow_joins {
            for &(a, ca) in g.vertices() {
                for &(b, cb) in g.vertices() {
                    if ca != Color::White || cb != Color::Black {
                        continue;
                    }
                    let adjacent = g
                        .edges()
                        .iter()
                        .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
                    if adjacent {
                        continue;
                    }
                    let mut es = g.edges().to_vec();
                    es.push((a, b));
                    push(
                        BipartiteGraph::new(g.vertices().to_vec(), es)
                            .expect("join keeps validity"),
                    );
                }
            }
        }
    }
    out
}

fn single_edge() -> BipartiteGraph {
    BipartiteGraph::new(vec![(1, Color::White), (2, Color::Black)], vec![(1, 2)])
        .expect("single edge")
}

/// Canonical representatives of all forests with exactly `n` edges.
pub fn forests_with_edges(n: u32) -> Vec<BipartiteGraph> {
    assert!(n >= 1);
    let mut reps = vec![single_edge()];
    for _ in 1..n {
        reps = grow(&reps, false);
    }
    reps
}

/// Canonical representatives of all forests with `1..=n` edges.
pub fn forests_up_to(n: u32) -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    let mut reps = vec![single_edge()];
    for _ in 1..=n {
        out.extend(reps.iter().cloned());
        reps = grow(&reps, false);
    }
    out
}

/// Canonical representatives of all bipartite graphs (no isolated
/// vertices) with exactly `n` edges. Quadratic in the output size; meant
/// for small `n` only.
pub fn bipartite_graphs_with_edges(n: u32) -> Vec<BipartiteGraph> {
    assert!(n >= 1);
    let mut reps = vec![single_edge()];
    for _ in 1..n {
        reps = grow(&reps, true);
    }
    reps
}

/// Canonical representatives of all bipartite graphs with `1..=n` edges.
pub fn bipartite_graphs_up_to(n: u32) -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    let mut reps = vec![single_edge()];
    for _ in 1..=n {
        out.extend(reps.iter().cloned());
        reps = grow(&reps, true);
    }
    out
}

/// Every matching of `g`, the empty one included.
pub fn all_matchings(g: &BipartiteGraph) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used: BTreeSet<u32> = BTreeSet::new();
    fn rec(
        g: &BipartiteGraph,
        e: usize,
        chosen: &mut Vec<usize>,
        used: &mut BTreeSet<u32>,
        out: &mut Vec<Matching>,
    ) {
        if e == g.n_edges() {
            out.push(Matching::new(g, chosen.clone()).expect("built disjoint"));
            return;
        }
        rec(g, e + 1, chosen, used, out);
        let (a, b) = g.edges()[e];
        if !used.contains(&a) && !used.contains(&b) {
            used.insert(a);
            used.insert(b);
            chosen.push(e);
            rec(g, e + 1, chosen, used, out);
            chosen.pop();
            used.remove(&a);
            used.remove(&b);
        }
    }
    rec(g, 0, &mut chosen, &mut used, &mut out);
    out
}

/// Every almost perfect matching of `g`.
pub fn all_apms(g: &BipartiteGraph) -> Vec<Matching> {
    all_matchings(g)
        .into_iter()
        .filter(|m| is_almost_perfect(g, m))
        .collect()
}

/// Every special transversal of a diagram, as box sets, together with the
/// matchings they came from. Skips the empty transversal.
pub fn all_special_transversals(d: &Diagram) -> Vec<Transversal> {
    let Ok((g, boxes)) = d.to_graph() else {
        return Vec::new();
    };
    all_matchings(&g)
        .into_iter()
        .filter(|m| !m.is_empty() && is_special(&g, m))
        .map(|m| {
            let bs: Vec<(u32, u32)> = m.edge_ids().iter().map(|&e| boxes[e]).collect();
            Transversal::new(d, bs).expect("matching boxes form a transversal")
        })
        .collect()
}
