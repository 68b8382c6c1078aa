//! Bipartitioned graphs, matchings, almost perfect matchings, and the
//! pendant-edge rewrite that drives the leaf recurrences.
//!
//! Vertices carry explicit ids and colors; edge ids are positional
//! (`0..n-1`) and stable under every operation that does not delete an
//! edge. All "choose any" steps from the underlying constructions are
//! resolved canonically: vertices compare by `(color, id)` with white
//! before black, edges by the `(min, max)` pair of their endpoint ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Vertex color of the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A bipartitioned graph without isolated vertices.
///
/// The empty graph (no vertices, no edges) is allowed; it shows up as the
/// base case of the edge-deletion recursions.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    vertices: Vec<(u32, Color)>,
    edges: Vec<(u32, u32)>,
    colors: BTreeMap<u32, Color>,
    adj: BTreeMap<u32, Vec<(usize, u32)>>,
    forest: bool,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}
impl Eq for BipartiteGraph {}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: u32,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[u32; 2]>,
}

impl BipartiteGraph {
    /// Validates a raw vertex/edge description.
    ///
    /// Rejects edges between same-colored vertices, duplicate edges
    /// (regardless of endpoint order), references to unknown vertices,
    /// and isolated vertices. Forest-ness is computed here and cached.
    pub fn new(vertices: Vec<(u32, Color)>, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut colors = BTreeMap::new();
        for &(id, color) in &vertices {
            if colors.insert(id, color).is_some() {
                return Err(Error::InvalidParam(format!("duplicate vertex id {id}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut adj: BTreeMap<u32, Vec<(usize, u32)>> = BTreeMap::new();
        for (eid, &(a, b)) in edges.iter().enumerate() {
            let ca = *colors.get(&a).ok_or(Error::UnknownVertex(a))?;
            let cb = *colors.get(&b).ok_or(Error::UnknownVertex(b))?;
            if ca == cb {
                return Err(Error::NonBipartiteEdge(a, b));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj.entry(a).or_default().push((eid, b));
            adj.entry(b).or_default().push((eid, a));
        }
        for &(id, _) in &vertices {
            if !adj.contains_key(&id) {
                return Err(Error::IsolatedVertex(id));
            }
        }
        let forest = {
            let comps = count_components(&vertices, &adj);
            edges.len() + comps == vertices.len() || vertices.is_empty()
        };
        Ok(BipartiteGraph {
            vertices,
            edges,
            colors,
            adj,
            forest,
        })
    }

    pub fn empty() -> Self {
        BipartiteGraph::new(vec![], vec![]).unwrap()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_forest(&self) -> bool {
        self.forest
    }

    pub fn vertices(&self) -> &[(u32, Color)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn color(&self, v: u32) -> Color {
        self.colors[&v]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj.get(&v).map_or(0, |a| a.len())
    }

    /// Incident `(edge id, other endpoint)` pairs of `v`.
    pub fn incident(&self, v: u32) -> &[(usize, u32)] {
        self.adj.get(&v).map_or(&[], |a| a.as_slice())
    }

    /// Endpoints of edge `e` ordered as `(white, black)`.
    pub fn endpoints(&self, e: usize) -> (u32, u32) {
        let (a, b) = self.edges[e];
        match self.colors[&a] {
            Color::White => (a, b),
            Color::Black => (b, a),
        }
    }

    /// White vertex ids in increasing order.
    pub fn whites(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self
            .vertices
            .iter()
            .filter(|&&(_, c)| c == Color::White)
            .map(|&(id, _)| id)
            .collect();
        w.sort_unstable();
        w
    }

    /// Black vertex ids in increasing order.
    pub fn blacks(&self) -> Vec<u32> {
        let mut b: Vec<u32> = self
            .vertices
            .iter()
            .filter(|&&(_, c)| c == Color::Black)
            .map(|&(id, _)| id)
            .collect();
        b.sort_unstable();
        b
    }

    /// Canonical sort key for an edge: the `(min, max)` endpoint pair.
    pub fn edge_key(&self, e: usize) -> (u32, u32) {
        let (a, b) = self.edges[e];
        (a.min(b), a.max(b))
    }

    /// The graph with every vertex color flipped. The matching polytope
    /// does not see colors, so volume routes must be invariant under this.
    pub fn color_flip(&self) -> BipartiteGraph {
        BipartiteGraph::new(
            self.vertices.iter().map(|&(id, c)| (id, c.flip())).collect(),
            self.edges.clone(),
        )
        .expect("flip preserves validity")
    }

    /// Center of a star: a vertex contained in every edge, if one exists.
    /// For a single edge both endpoints qualify; the white one is returned.
    pub fn star_center(&self) -> Option<u32> {
        if self.edges.is_empty() {
            return None;
        }
        let (w, b) = self.endpoints(0);
        [w, b]
            .into_iter()
            .find(|&cand| self.degree(cand) == self.n_edges())
    }

    pub fn is_star_centered_at(&self, v: u32) -> bool {
        !self.edges.is_empty() && self.degree(v) == self.n_edges()
    }

    /// Least white vertex, the canonical root of a connected graph.
    pub fn canonical_root(&self) -> Option<u32> {
        self.whites().first().copied()
    }

    /// Connected components as sets of edge ids, sorted by their least
    /// vertex under `(color, id)` order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut out = Vec::new();
        let mut order: Vec<u32> = self.vertices.iter().map(|&(id, _)| id).collect();
        order.sort_unstable_by_key(|&id| (self.colors[&id], id));
        for start in order {
            if seen.contains(&start) {
                continue;
            }
            let mut comp_edges = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                for &(eid, u) in self.incident(v) {
                    comp_edges.insert(eid);
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp_edges.into_iter().collect());
        }
        out
    }

    /// Induced subgraph on the given edge ids. Vertex ids are preserved;
    /// edge ids are renumbered in the order given.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> BipartiteGraph {
        let mut vs = BTreeSet::new();
        let mut edges = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            let (a, b) = self.edges[e];
            vs.insert(a);
            vs.insert(b);
            edges.push((a, b));
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|(id, _)| vs.contains(id))
            .copied()
            .collect();
        BipartiteGraph::new(vertices, edges).expect("subgraph of a valid graph")
    }

    /// The graph with edge `e` deleted and any newly isolated vertices
    /// dropped. Edge ids above `e` shift down by one.
    pub fn delete_edge(&self, e: usize) -> BipartiteGraph {
        let keep: Vec<usize> = (0..self.n_edges()).filter(|&f| f != e).collect();
        self.edge_subgraph(&keep)
    }

    /// Largest vertex id in use, for minting fresh pendant vertices.
    pub fn max_vertex_id(&self) -> u32 {
        self.vertices.iter().map(|&(id, _)| id).max().unwrap_or(0)
    }

    /// BFS distances from `root`, for vertices in the same component.
    pub fn distances_from(&self, root: u32) -> BTreeMap<u32, usize> {
        let mut dist = BTreeMap::from([(root, 0usize)]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &(_, u) in self.incident(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(u) {
                    e.insert(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Sum of distances from all vertices to `root`; the termination
    /// measure of the leaf recursion.
    pub fn distance_sum(&self, root: u32) -> usize {
        self.distances_from(root).values().sum()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(s)?;
        BipartiteGraph::new(
            raw.vertices.into_iter().map(|v| (v.id, v.color)).collect(),
            raw.edges.into_iter().map(|[a, b]| (a, b)).collect(),
        )
    }

    /// Compact JSON in the canonical field order; parsing it back yields
    /// an equal graph and re-serializing is byte-identical.
    pub fn to_json_string(&self) -> String {
        let raw = GraphJson {
            vertices: self
                .vertices
                .iter()
                .map(|&(id, color)| VertexJson { id, color })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&raw).expect("graph serialization cannot fail")
    }
}

fn count_components(
    vertices: &[(u32, Color)],
    adj: &BTreeMap<u32, Vec<(usize, u32)>>,
) -> usize {
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut comps = 0;
    for &(start, _) in vertices {
        if seen.contains(&start) {
            continue;
        }
        comps += 1;
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for &(_, u) in adj.get(&v).into_iter().flatten() {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
    }
    comps
}

/// A set of pairwise vertex-disjoint edges, stored as sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<usize>,
}

/// The definitional predicates for a matching, evaluated together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingFlags {
    pub is_matching: bool,
    pub is_almost_perfect: bool,
    pub is_special: bool,
}

impl Matching {
    /// Validates that no two of the given edges share a vertex.
    pub fn new(g: &BipartiteGraph, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut used: BTreeMap<u32, usize> = BTreeMap::new();
        for &e in &edges {
            let (a, b) = g.edges()[e];
            for v in [a, b] {
                if let Some(&f) = used.get(&v) {
                    return Err(Error::NotAMatching(f, e));
                }
                used.insert(v, e);
            }
        }
        Ok(Matching { edges })
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn flags(&self, g: &BipartiteGraph) -> MatchingFlags {
        MatchingFlags {
            is_matching: true,
            is_almost_perfect: is_almost_perfect(g, self),
            is_special: is_special(g, self),
        }
    }
}

/// True iff every isolated edge of `g` lies in `m` and every non-leaf
/// vertex of `g` is covered by `m`.
pub fn is_almost_perfect(g: &BipartiteGraph, m: &Matching) -> bool {
    let covered: BTreeSet<u32> = m
        .edge_ids()
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.edges()[e];
            [a, b]
        })
        .collect();
    for e in 0..g.n_edges() {
        let (a, b) = g.edges()[e];
        if g.degree(a) == 1 && g.degree(b) == 1 && !m.contains(e) {
            return false;
        }
    }
    g.vertices()
        .iter()
        .all(|&(v, _)| g.degree(v) < 2 || covered.contains(&v))
}

/// True iff no cycle of `g` has exactly half of its edges in `m`.
///
/// Such a cycle necessarily alternates between matched and unmatched
/// edges, so it corresponds to a directed cycle after orienting matched
/// edges white-to-black and unmatched edges black-to-white.
pub fn is_special(g: &BipartiteGraph, m: &Matching) -> bool {
    let mut arcs: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for e in 0..g.n_edges() {
        let (w, b) = g.endpoints(e);
        if m.contains(e) {
            arcs.entry(w).or_default().push(b);
        } else {
            arcs.entry(b).or_default().push(w);
        }
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state: BTreeMap<u32, u8> = BTreeMap::new();
    fn dfs(v: u32, arcs: &BTreeMap<u32, Vec<u32>>, state: &mut BTreeMap<u32, u8>) -> bool {
        state.insert(v, 1);
        for &u in arcs.get(&v).into_iter().flatten() {
            match state.get(&u).copied().unwrap_or(0) {
                0 => {
                    if dfs(u, arcs, state) {
                        return true;
                    }
                }
                1 => return true,
                _ => {}
            }
        }
        state.insert(v, 2);
        false
    }
    for &(v, _) in g.vertices() {
        if state.get(&v).copied().unwrap_or(0) == 0 && dfs(v, &arcs, &mut state) {
            return false;
        }
    }
    true
}

/// Builds the canonical almost perfect matching of a forest.
///
/// Follows the constructive existence proof: root each component at its
/// least white vertex, take the least edge incident to the root, delete
/// both endpoints, and re-root the remaining components at the vertex
/// that was closest to the removed edge.
pub fn find_apm(g: &BipartiteGraph) -> Result<Matching> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut alive = vec![true; g.n_edges()];
    let mut out = Vec::new();

    fn take_at_root(
        g: &BipartiteGraph,
        root: u32,
        alive: &mut Vec<bool>,
        out: &mut Vec<usize>,
    ) {
        let e = g
            .incident(root)
            .iter()
            .filter(|&&(eid, _)| alive[eid])
            .min_by_key(|&&(eid, _)| g.edge_key(eid))
            .map(|&(eid, _)| eid);
        let Some(e) = e else { return };
        out.push(e);
        let (a, b) = g.edges()[e];
        let mut next_roots = Vec::new();
        for v in [a, b] {
            for &(f, x) in g.incident(v) {
                if alive[f] {
                    alive[f] = false;
                    if x != a && x != b {
                        next_roots.push((g.edge_key(f), x));
                    }
                }
            }
        }
        next_roots.sort_unstable();
        for (_, x) in next_roots {
            if g.incident(x).iter().any(|&(f, _)| alive[f]) {
                take_at_root(g, x, alive, out);
            }
        }
    }

    for comp in g.components() {
        let sub_vertices: BTreeSet<u32> = comp
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.edges()[e];
                [a, b]
            })
            .collect();
        let root = sub_vertices
            .iter()
            .copied()
            .filter(|&v| g.color(v) == Color::White)
            .min()
            .expect("every component has a white vertex");
        take_at_root(g, root, &mut alive, &mut out);
    }

    let m = Matching::new(g, out)?;
    debug_assert!(is_almost_perfect(g, &m));
    Ok(m)
}

/// Result of one application of the pendant-edge rewrite.
///
/// `f(g) = f(h) - f(gp)` for any `f` satisfying the leaf recurrence;
/// `h` is disconnected and `gp` has a strictly smaller distance sum to
/// the root, which together make the recursion terminate.
#[derive(Debug, Clone)]
pub struct LeafStep {
    pub h: BipartiteGraph,
    pub gp: BipartiteGraph,
    /// The leaf whose pendant edge is removed in `gp`.
    pub leaf: u32,
    /// The neighbor of `leaf`.
    pub v1: u32,
    /// The neighbor of `v1` nearest the root.
    pub v2: u32,
    /// The freshly minted pendant vertex attached to `v2`.
    pub pendant: u32,
}

/// Applies the pendant-edge rewrite to a connected tree rooted at a white
/// vertex. Errors if the tree is a star centered at the root (the base
/// case) or if the graph is disconnected.
pub fn leaf_step(g: &BipartiteGraph, root: u32) -> Result<LeafStep> {
    if g.is_empty() || g.components().len() != 1 {
        return Err(Error::Disconnected);
    }
    if !g.vertices().iter().any(|&(v, _)| v == root) || g.color(root) != Color::White {
        return Err(Error::BadRoot(root));
    }
    if g.is_star_centered_at(root) {
        return Err(Error::WhiteStarBase);
    }
    let dist = g.distances_from(root);
    let leaf = g
        .vertices()
        .iter()
        .map(|&(v, c)| (c, v))
        .filter(|&(_, v)| g.degree(v) == 1 && dist[&v] >= 2)
        .min()
        .map(|(_, v)| v)
        .expect("a non-star tree has a leaf at depth >= 2");
    let v1 = g.incident(leaf)[0].1;
    let v2 = g
        .incident(v1)
        .iter()
        .map(|&(_, u)| u)
        .find(|u| dist[u] + 1 == dist[&v1])
        .expect("non-root vertex has a parent");
    let pendant = g.max_vertex_id() + 1;
    let pendant_color = g.color(v2).flip();

    let replace_edge = |target: (u32, u32)| -> BipartiteGraph {
        let mut vertices = g.vertices().to_vec();
        vertices.push((pendant, pendant_color));
        let edges: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if (a, b) == target || (b, a) == target {
                    (v2, pendant)
                } else {
                    (a, b)
                }
            })
            .collect();
        let vertices = vertices
            .into_iter()
            .filter(|&(v, _)| edges_contain(&edges, v))
            .collect();
        BipartiteGraph::new(vertices, edges).expect("rewrite preserves validity")
    };

    let h = replace_edge((v1, v2));
    let gp = replace_edge((v1, leaf));
    debug_assert!(h.components().len() > 1);
    debug_assert!(gp.distance_sum(root) + 1 == g.distance_sum(root));
    Ok(LeafStep {
        h,
        gp,
        leaf,
        v1,
        v2,
        pendant,
    })
}

fn edges_contain(edges: &[(u32, u32)], v: u32) -> bool {
    edges.iter().any(|&(a, b)| a == v || b == v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn single_edge_is_a_forest() {
        let g = BipartiteGraph::new(vec![(1, Color::White), (2, Color::Black)], vec![(1, 2)])
            .unwrap();
        assert!(g.is_forest());
        assert_eq!(g.n_edges(), 1);
    }

    #[test]
    fn same_color_edge_is_rejected() {
        let err = BipartiteGraph::new(
            vec![(1, Color::White), (2, Color::White)],
            vec![(1, 2)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonBipartiteEdge(1, 2)));
    }

    #[test]
    fn four_cycle_is_bipartite_but_not_a_forest() {
        let g = generate::cycle4();
        assert!(!g.is_forest());
        assert_eq!(g.n_edges(), 4);
    }

    #[test]
    fn duplicate_and_isolated_are_rejected() {
        let dup = BipartiteGraph::new(
            vec![(1, Color::White), (2, Color::Black)],
            vec![(1, 2), (2, 1)],
        );
        assert!(matches!(dup.unwrap_err(), Error::DuplicateEdge(2, 1)));
        let iso = BipartiteGraph::new(
            vec![(1, Color::White), (2, Color::Black), (3, Color::White)],
            vec![(1, 2)],
        );
        assert!(matches!(iso.unwrap_err(), Error::IsolatedVertex(3)));
    }

    #[test]
    fn apm_of_single_edge_is_that_edge() {
        let g = generate::star(1, Color::White);
        assert_eq!(find_apm(&g).unwrap().edge_ids(), &[0]);
    }

    #[test]
    fn apm_of_path3_is_outer_pair() {
        let g = generate::path(3);
        let m = find_apm(&g).unwrap();
        assert_eq!(m.edge_ids(), &[0, 2]);
        assert!(is_almost_perfect(&g, &m));
        let middle = Matching::new(&g, vec![1]).unwrap();
        assert!(is_almost_perfect(&g, &middle));
        let first = Matching::new(&g, vec![0]).unwrap();
        assert!(!is_almost_perfect(&g, &first));
    }

    #[test]
    fn apm_of_star_is_least_edge() {
        let g = generate::star(3, Color::White);
        assert_eq!(find_apm(&g).unwrap().edge_ids(), &[0]);
    }

    #[test]
    fn empty_matching_misses_isolated_edge() {
        let g = generate::star(1, Color::White);
        let m = Matching::new(&g, vec![]).unwrap();
        assert!(!is_almost_perfect(&g, &m));
    }

    #[test]
    fn forest_matchings_are_special() {
        let g = generate::path(4);
        for edges in [vec![], vec![0], vec![0, 2], vec![1, 3]] {
            let m = Matching::new(&g, edges).unwrap();
            assert!(is_special(&g, &m));
        }
    }

    #[test]
    fn c4_perfect_matching_is_not_special() {
        let g = generate::cycle4();
        let perfect = Matching::new(&g, vec![0, 2]).unwrap();
        assert!(!is_special(&g, &perfect));
        let single = Matching::new(&g, vec![0]).unwrap();
        assert!(is_special(&g, &single));
    }

    #[test]
    fn leaf_step_on_black_star() {
        // Black center 3, white leaves 1 and 2; rooted at white 1.
        let g = BipartiteGraph::new(
            vec![(1, Color::White), (2, Color::White), (3, Color::Black)],
            vec![(1, 3), (2, 3)],
        )
        .unwrap();
        let step = leaf_step(&g, 1).unwrap();
        assert_eq!(step.h.components().len(), 2);
        assert_eq!(step.h.n_edges(), 2);
        // gp is the white-centered two-edge star.
        assert_eq!(step.gp.star_center(), Some(1));
        assert_eq!(step.gp.color(1), Color::White);
    }

    #[test]
    fn leaf_step_on_path3_splits_two_and_one() {
        let g = generate::path(3);
        let step = leaf_step(&g, 1).unwrap();
        let mut sizes: Vec<usize> = step.h.components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(
            step.gp.distance_sum(1),
            g.distance_sum(1) - 1,
        );
    }

    #[test]
    fn leaf_step_rejects_white_star() {
        let g = generate::star(4, Color::White);
        let root = g.canonical_root().unwrap();
        assert!(matches!(leaf_step(&g, root), Err(Error::WhiteStarBase)));
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let g = generate::path(3);
        let s = g.to_json_string();
        let back = BipartiteGraph::from_json_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), s);
    }
}
