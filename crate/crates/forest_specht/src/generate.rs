//! Deterministic graph generators for the CLI, the check suite, and tests.
//!
//! Randomness comes from a self-contained splitmix64 stream so that a
//! fixed seed yields byte-identical graphs across runs and platforms.

use crate::graph::{BipartiteGraph, Color};
use crate::{Error, Result};

/// Tiny deterministic PRNG (splitmix64).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

fn parity_color(i: u32) -> Color {
    if i % 2 == 1 {
        Color::White
    } else {
        Color::Black
    }
}

/// Path with `n` edges on vertices `1..=n+1`; odd ids are white.
pub fn path(n: u32) -> BipartiteGraph {
    assert!(n >= 1);
    let vertices = (1..=n + 1).map(|i| (i, parity_color(i))).collect();
    let edges = (1..=n).map(|i| (i, i + 1)).collect();
    BipartiteGraph::new(vertices, edges).expect("path is valid")
}

/// Star with `n` edges; vertex 1 is the center.
pub fn star(n: u32, center: Color) -> BipartiteGraph {
    assert!(n >= 1);
    let mut vertices = vec![(1, center)];
    vertices.extend((2..=n + 1).map(|i| (i, center.flip())));
    let edges = (2..=n + 1).map(|i| (1, i)).collect();
    BipartiteGraph::new(vertices, edges).expect("star is valid")
}

/// Even cycle with `n` edges on vertices `1..=n`.
pub fn cycle(n: u32) -> Result<BipartiteGraph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParam(format!(
            "cycle length must be even and at least 4, got {n}"
        )));
    }
    let vertices = (1..=n).map(|i| (i, parity_color(i))).collect();
    let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    BipartiteGraph::new(vertices, edges)
}

pub fn cycle4() -> BipartiteGraph {
    cycle(4).expect("4 is a valid cycle length")
}

/// Caterpillar: a spine path with `spine` edges and `legs` pendant leaves
/// attached to every spine vertex.
pub fn caterpillar(spine: u32, legs: u32) -> BipartiteGraph {
    assert!(spine >= 1);
    let mut vertices: Vec<(u32, Color)> =
        (1..=spine + 1).map(|i| (i, parity_color(i))).collect();
    let mut edges: Vec<(u32, u32)> = (1..=spine).map(|i| (i, i + 1)).collect();
    let mut next = spine + 2;
    for v in 1..=spine + 1 {
        for _ in 0..legs {
            vertices.push((next, parity_color(v).flip()));
            edges.push((v, next));
            next += 1;
        }
    }
    BipartiteGraph::new(vertices, edges).expect("caterpillar is valid")
}

/// Disjoint union; vertex ids of later summands are shifted to keep them
/// distinct, edge ids concatenate in the order given.
pub fn disjoint_union(parts: &[BipartiteGraph]) -> BipartiteGraph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut offset = 0u32;
    for g in parts {
        for &(v, c) in g.vertices() {
            vertices.push((v + offset, c));
        }
        for &(a, b) in g.edges() {
            edges.push((a + offset, b + offset));
        }
        offset = vertices.iter().map(|&(v, _)| v).max().unwrap_or(offset);
    }
    BipartiteGraph::new(vertices, edges).expect("union of valid graphs")
}

/// Random forest with `n` edges grown by leaf attachment: each new edge
/// either starts a fresh component or hangs a new leaf on a uniformly
/// random existing vertex.
pub fn random_forest(n: u32, seed: u64) -> BipartiteGraph {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut vertices: Vec<(u32, Color)> = vec![(1, Color::White), (2, Color::Black)];
    let mut edges: Vec<(u32, u32)> = vec![(1, 2)];
    let mut next = 3u32;
    for _ in 1..n {
        let fresh_component = rng.below(4) == 0;
        if fresh_component {
            vertices.push((next, Color::White));
            vertices.push((next + 1, Color::Black));
            edges.push((next, next + 1));
            next += 2;
        } else {
            let target = vertices[rng.below(vertices.len() as u64) as usize];
            vertices.push((next, target.1.flip()));
            edges.push((target.0, next));
            next += 1;
        }
    }
    BipartiteGraph::new(vertices, edges).expect("grown forest is valid")
}

/// The three related forests of the pendant-edge recurrence:
/// `g` carries pendants at both chosen vertices, `g1` and `g2` trade one
/// pendant for the connecting edge.
#[derive(Debug, Clone)]
pub struct LeafTriple {
    pub g: BipartiteGraph,
    pub g1: BipartiteGraph,
    pub g2: BipartiteGraph,
}

/// Samples a core forest with up to `max_core_edges` edges plus the two
/// attachment vertices, then builds the recurrence triple around them.
pub fn random_leaf_triple(max_core_edges: u32, seed: u64) -> LeafTriple {
    let mut rng = SplitMix64::new(seed);
    let core_edges = rng.below(u64::from(max_core_edges) + 1) as u32;
    let mut vertices: Vec<(u32, Color)> = vec![];
    let mut edges: Vec<(u32, u32)> = vec![];
    if core_edges > 0 {
        let h = random_forest(core_edges, rng.next_u64());
        vertices = h.vertices().to_vec();
        edges = h.edges().to_vec();
    }
    let mut next = vertices.iter().map(|&(v, _)| v).max().unwrap_or(0) + 1;

    // v1: a fresh vertex or any existing one.
    let v1 = if vertices.is_empty() || rng.below(3) == 0 {
        let v = (next, Color::White);
        vertices.push(v);
        next += 1;
        v
    } else {
        vertices[rng.below(vertices.len() as u64) as usize]
    };

    // v2: opposite color, in a different component than v1 (fresh vertices
    // are their own components until the pendants are added).
    let component_of_v1: Vec<u32> = component_of(&vertices, &edges, v1.0);
    let mut candidates: Vec<(u32, Color)> = vertices
        .iter()
        .copied()
        .filter(|&(v, c)| c == v1.1.flip() && !component_of_v1.contains(&v))
        .collect();
    candidates.push((u32::MAX, v1.1.flip())); // sentinel: mint a fresh vertex
    let pick = candidates[rng.below(candidates.len() as u64) as usize];
    let v2 = if pick.0 == u32::MAX {
        let v = (next, v1.1.flip());
        vertices.push(v);
        next += 1;
        v
    } else {
        pick
    };

    let p1 = (next, v1.1.flip());
    let p2 = (next + 1, v2.1.flip());

    let build = |extra_vertices: &[(u32, Color)], extra_edges: &[(u32, u32)]| {
        let mut vs = vertices.clone();
        vs.extend_from_slice(extra_vertices);
        let mut es = edges.clone();
        es.extend_from_slice(extra_edges);
        // The core may have left v1 or v2 isolated when they were minted
        // fresh; each variant attaches edges to both, so validity holds.
        let vs = vs
            .into_iter()
            .filter(|&(v, _)| es.iter().any(|&(a, b)| a == v || b == v))
            .collect();
        BipartiteGraph::new(vs, es).expect("triple member is valid")
    };

    let g = build(&[p1, p2], &[(v1.0, p1.0), (v2.0, p2.0)]);
    let g1 = build(&[p1], &[(v1.0, p1.0), (v1.0, v2.0)]);
    let g2 = build(&[p2], &[(v2.0, p2.0), (v1.0, v2.0)]);
    let _ = edges.len();
    LeafTriple { g, g1, g2 }
}

fn component_of(vertices: &[(u32, Color)], edges: &[(u32, u32)], start: u32) -> Vec<u32> {
    let mut comp = vec![start];
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for &(a, b) in edges {
            let other = if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            };
            if let Some(u) = other {
                if !comp.contains(&u) {
                    comp.push(u);
                    frontier.push(u);
                }
            }
        }
    }
    let _ = vertices;
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_forest(6, 1);
        let b = random_forest(6, 1);
        assert_eq!(a, b);
        assert_ne!(random_forest(6, 2), a);
    }

    #[test]
    fn random_forests_are_forests() {
        for seed in 0..50 {
            let g = random_forest(8, seed);
            assert!(g.is_forest());
            assert_eq!(g.n_edges(), 8);
        }
    }

    #[test]
    fn leaf_triples_are_valid_forests() {
        for seed in 0..100 {
            let t = random_leaf_triple(4, seed);
            assert!(t.g.is_forest(), "seed {seed}");
            assert!(t.g1.is_forest(), "seed {seed}");
            assert!(t.g2.is_forest(), "seed {seed}");
            assert_eq!(t.g.n_edges(), t.g1.n_edges());
            assert_eq!(t.g.n_edges(), t.g2.n_edges());
        }
    }

    #[test]
    fn caterpillar_shape() {
        let g = caterpillar(2, 1);
        assert_eq!(g.n_edges(), 5);
        assert!(g.is_forest());
    }
}
