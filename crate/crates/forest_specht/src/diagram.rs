//! Diagrams of lattice boxes, transversals, standard form, and the
//! row/column split.
//!
//! A diagram is any finite set of boxes `(row, col)` with 1-based positive
//! coordinates; rows and columns need not be contiguous. Diagrams and
//! bipartitioned graphs are interchangeable: box `(i, j)` corresponds to
//! an edge between white vertex `i` and black vertex `j`, and two diagrams
//! are equivalent exactly when those graphs are isomorphic.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{BipartiteGraph, Color};
use crate::{Error, Result};

/// A finite set of boxes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Diagram {
    boxes: BTreeSet<(u32, u32)>,
}

impl Diagram {
    pub fn new(boxes: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let boxes: BTreeSet<(u32, u32)> = boxes.into_iter().collect();
        if boxes.iter().any(|&(r, c)| r == 0 || c == 0) {
            return Err(Error::InvalidParam(
                "box coordinates are 1-based and positive".into(),
            ));
        }
        Ok(Diagram { boxes })
    }

    pub fn empty() -> Self {
        Diagram::default()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: (u32, u32)) -> bool {
        self.boxes.contains(&b)
    }

    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.boxes.iter().copied()
    }

    /// Boxes in row-major order; this ordering indexes boxes by edge id
    /// whenever a plain diagram enters the group-algebra machinery.
    pub fn box_list(&self) -> Vec<(u32, u32)> {
        self.boxes.iter().copied().collect()
    }

    pub fn row(&self, r: u32) -> Vec<(u32, u32)> {
        self.boxes().filter(|&(br, _)| br == r).collect()
    }

    pub fn col(&self, c: u32) -> Vec<(u32, u32)> {
        self.boxes().filter(|&(_, bc)| bc == c).collect()
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            boxes: self.boxes.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    pub fn without(&self, removed: &BTreeSet<(u32, u32)>) -> Diagram {
        Diagram {
            boxes: self.boxes.difference(removed).copied().collect(),
        }
    }

    pub fn without_box(&self, b: (u32, u32)) -> Diagram {
        let mut boxes = self.boxes.clone();
        boxes.remove(&b);
        Diagram { boxes }
    }

    pub fn without_column(&self, c: u32) -> Diagram {
        Diagram {
            boxes: self.boxes.iter().copied().filter(|&(_, bc)| bc != c).collect(),
        }
    }

    pub fn without_row_and_column(&self, r: u32, c: u32) -> Diagram {
        Diagram {
            boxes: self
                .boxes
                .iter()
                .copied()
                .filter(|&(br, bc)| br != r && bc != c)
                .collect(),
        }
    }

    /// One line per row from row 1 to the last used row, `#` for a box and
    /// `.` for an absent cell, every line padded to the widest used column.
    pub fn to_ascii(&self) -> String {
        let Some(max_r) = self.boxes.iter().map(|&(r, _)| r).max() else {
            return String::new();
        };
        let max_c = self.boxes.iter().map(|&(_, c)| c).max().unwrap();
        let mut out = String::new();
        for r in 1..=max_r {
            for c in 1..=max_c {
                out.push(if self.contains((r, c)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_ascii(s: &str) -> Result<Diagram> {
        let mut boxes = BTreeSet::new();
        for (i, line) in s.lines().enumerate() {
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' => {
                        boxes.insert((i as u32 + 1, j as u32 + 1));
                    }
                    '.' => {}
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in diagram at line {}",
                            i + 1
                        )))
                    }
                }
            }
        }
        Ok(Diagram { boxes })
    }

    /// The bipartite graph of this diagram together with the boxes in edge
    /// id order. White vertex ids are the row labels; black vertex ids are
    /// the column labels shifted past the largest row label.
    pub fn to_graph(&self) -> Result<(BipartiteGraph, Vec<(u32, u32)>)> {
        if self.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let shift = self.boxes.iter().map(|&(r, _)| r).max().unwrap();
        let order = self.box_list();
        let mut vertices: Vec<(u32, Color)> = Vec::new();
        let rows: BTreeSet<u32> = self.boxes.iter().map(|&(r, _)| r).collect();
        let cols: BTreeSet<u32> = self.boxes.iter().map(|&(_, c)| c).collect();
        vertices.extend(rows.iter().map(|&r| (r, Color::White)));
        vertices.extend(cols.iter().map(|&c| (shift + c, Color::Black)));
        let edges = order.iter().map(|&(r, c)| (r, shift + c)).collect();
        let g = BipartiteGraph::new(vertices, edges)?;
        Ok((g, order))
    }
}

/// The diagram of a graph: box `(i, j)` for an edge between the `i`-th
/// white and the `j`-th black vertex (1-based, in increasing id order).
pub fn graph_to_diagram(g: &BipartiteGraph) -> Diagram {
    graph_to_diagram_with_edges(g).0
}

/// Same, plus the box of every edge indexed by edge id.
pub fn graph_to_diagram_with_edges(g: &BipartiteGraph) -> (Diagram, Vec<(u32, u32)>) {
    let white_index: BTreeMap<u32, u32> = g
        .whites()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect();
    let black_index: BTreeMap<u32, u32> = g
        .blacks()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect();
    let per_edge: Vec<(u32, u32)> = (0..g.n_edges())
        .map(|e| {
            let (w, b) = g.endpoints(e);
            (white_index[&w], black_index[&b])
        })
        .collect();
    let d = Diagram::new(per_edge.iter().copied()).expect("positive coordinates");
    debug_assert_eq!(d.len(), g.n_edges());
    (d, per_edge)
}

/// Inverse of [`graph_to_diagram`] up to vertex relabeling.
pub fn diagram_to_graph(d: &Diagram) -> Result<BipartiteGraph> {
    Ok(d.to_graph()?.0)
}

/// A set of boxes with no two in the same row or column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    boxes: Vec<(u32, u32)>,
}

impl Transversal {
    pub fn new(d: &Diagram, boxes: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let boxes: BTreeSet<(u32, u32)> = boxes.into_iter().collect();
        for &b in &boxes {
            if !d.contains(b) {
                return Err(Error::NotATransversalBox(b.0, b.1));
            }
        }
        let rows: BTreeSet<u32> = boxes.iter().map(|&(r, _)| r).collect();
        let cols: BTreeSet<u32> = boxes.iter().map(|&(_, c)| c).collect();
        if rows.len() != boxes.len() || cols.len() != boxes.len() {
            return Err(Error::SharedRowOrColumn);
        }
        Ok(Transversal {
            boxes: boxes.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[(u32, u32)] {
        &self.boxes
    }

    pub fn contains(&self, b: (u32, u32)) -> bool {
        self.boxes.binary_search(&b).is_ok()
    }
}

/// A diagram relabeled so its transversal occupies the leading diagonal.
///
/// Rows and columns `1..=size` host the transversal at `(i, i)` with no
/// box strictly above the diagonal in that range; `row_perm[k]` and
/// `col_perm[k]` give the original labels of new row/column `k + 1`.
#[derive(Debug, Clone)]
pub struct StandardFormDiagram {
    pub diagram: Diagram,
    pub size: usize,
    pub row_perm: Vec<u32>,
    pub col_perm: Vec<u32>,
}

impl StandardFormDiagram {
    /// The original transversal boxes in diagonal order.
    pub fn diagonal_order(&self) -> Vec<(u32, u32)> {
        (0..self.size)
            .map(|i| (self.row_perm[i], self.col_perm[i]))
            .collect()
    }

    /// Maps a box of the standard-form diagram back to original labels.
    pub fn to_original(&self, b: (u32, u32)) -> (u32, u32) {
        (
            self.row_perm[b.0 as usize - 1],
            self.col_perm[b.1 as usize - 1],
        )
    }
}

/// Reorders rows and columns so the transversal lies along the diagonal.
///
/// Succeeds exactly when the transversal is special: the digraph on the
/// transversal with an arc `i -> j` whenever box `(row_i, col_j)` is
/// present must be acyclic, and a topological order of it is the diagonal
/// order. Ties are broken toward the least original box.
pub fn standard_form(d: &Diagram, u: &Transversal) -> Result<StandardFormDiagram> {
    let n = u.len();
    let uboxes = u.boxes().to_vec();
    // out[i] = arcs i -> j, meaning box (row_i, col_j) is present.
    let mut out_deg = vec![0usize; n];
    let mut in_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && d.contains((uboxes[i].0, uboxes[j].1)) {
                out_deg[i] += 1;
                in_arcs[j].push(i);
            }
        }
    }
    // Positions are filled from the top: a box may sit at the next free
    // diagonal slot only once nothing still unplaced must go below it.
    let mut placed = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&i| !placed[i] && out_deg[i] == 0)
            .min_by_key(|&i| uboxes[i]);
        let Some(i) = pick else {
            return Err(Error::NotSpecial);
        };
        placed[i] = true;
        order.push(i);
        for &j in &in_arcs[i] {
            out_deg[j] -= 1;
        }
    }

    let diag_rows: Vec<u32> = order.iter().map(|&i| uboxes[i].0).collect();
    let diag_cols: Vec<u32> = order.iter().map(|&i| uboxes[i].1).collect();
    let mut row_perm = diag_rows.clone();
    let mut col_perm = diag_cols.clone();
    let all_rows: BTreeSet<u32> = d.boxes().map(|(r, _)| r).collect();
    let all_cols: BTreeSet<u32> = d.boxes().map(|(_, c)| c).collect();
    row_perm.extend(all_rows.iter().copied().filter(|r| !diag_rows.contains(r)));
    col_perm.extend(all_cols.iter().copied().filter(|c| !diag_cols.contains(c)));

    let row_new: BTreeMap<u32, u32> = row_perm
        .iter()
        .enumerate()
        .map(|(k, &r)| (r, k as u32 + 1))
        .collect();
    let col_new: BTreeMap<u32, u32> = col_perm
        .iter()
        .enumerate()
        .map(|(k, &c)| (c, k as u32 + 1))
        .collect();
    let diagram = Diagram::new(d.boxes().map(|(r, c)| (row_new[&r], col_new[&c])))?;
    debug_assert!((1..=n as u32).all(|i| diagram.contains((i, i))));
    debug_assert!(!diagram
        .boxes()
        .any(|(r, c)| r < c && c <= n as u32));
    Ok(StandardFormDiagram {
        diagram,
        size: n,
        row_perm,
        col_perm,
    })
}

/// The row and column splits of `d` at boxes `b1` and `b2`.
///
/// Requires `b1` and `b2` in `d` with both off-corners absent. The row
/// split empties row `i1` into row `i2` where possible (intersection stays
/// on `i1`, union lands on `i2`); the column split does the same with the
/// two columns.
pub fn split_diagram(
    d: &Diagram,
    b1: (u32, u32),
    b2: (u32, u32),
) -> Result<(Diagram, Diagram)> {
    let (i1, j1) = b1;
    let (i2, j2) = b2;
    if !d.contains(b1) || !d.contains(b2) || d.contains((i1, j2)) || d.contains((i2, j1)) {
        return Err(Error::BadSplit);
    }
    let mut row_split = BTreeSet::new();
    let mut col_split = BTreeSet::new();
    for (r, c) in d.boxes() {
        if r != i1 && r != i2 {
            row_split.insert((r, c));
        }
        if c != j1 && c != j2 {
            col_split.insert((r, c));
        }
    }
    let all_cols: BTreeSet<u32> = d.boxes().map(|(_, c)| c).collect();
    for &c in &all_cols {
        let top = d.contains((i1, c));
        let bot = d.contains((i2, c));
        if top && bot {
            row_split.insert((i1, c));
        }
        if top || bot {
            row_split.insert((i2, c));
        }
    }
    let all_rows: BTreeSet<u32> = d.boxes().map(|(r, _)| r).collect();
    for &r in &all_rows {
        let left = d.contains((r, j1));
        let right = d.contains((r, j2));
        if left && right {
            col_split.insert((r, j1));
        }
        if left || right {
            col_split.insert((r, j2));
        }
    }
    debug_assert_eq!(row_split.len(), d.len());
    debug_assert_eq!(col_split.len(), d.len());
    Ok((Diagram { boxes: row_split }, Diagram { boxes: col_split }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;
    use crate::generate;


    #[test]
    fn star_diagram_is_a_row() {
        let d = graph_to_diagram(&generate::star(3, Color::White));
        assert_eq!(d.box_list(), vec![(1, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn path3_diagram() {
        let d = graph_to_diagram(&generate::path(3));
        assert_eq!(d.box_list(), vec![(1, 1), (2, 1), (2, 2)]);
    }

    #[test]
    fn cycle4_diagram_is_full_square() {
        let d = graph_to_diagram(&generate::cycle4());
        assert_eq!(d.box_list(), vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn small_diagrams_to_graphs() {
        let row = Diagram::new([(1, 1), (1, 2)]).unwrap();
        let g = diagram_to_graph(&row).unwrap();
        assert!(canon::isomorphic(&g, &generate::star(2, Color::White)));

        let col = Diagram::new([(1, 1), (2, 1)]).unwrap();
        let g = diagram_to_graph(&col).unwrap();
        assert!(canon::isomorphic(&g, &generate::star(2, Color::Black)));

        let diag = Diagram::new([(1, 1), (2, 2)]).unwrap();
        let g = diagram_to_graph(&diag).unwrap();
        let two_edges = generate::disjoint_union(&[
            generate::star(1, Color::White),
            generate::star(1, Color::White),
        ]);
        assert!(canon::isomorphic(&g, &two_edges));
    }

    #[test]
    fn empty_diagram_has_no_graph() {
        assert!(matches!(
            diagram_to_graph(&Diagram::empty()),
            Err(Error::EmptyDiagram)
        ));
    }

    #[test]
    fn standard_form_of_row_is_identity() {
        let d = Diagram::new([(1, 1), (1, 2), (1, 3)]).unwrap();
        let u = Transversal::new(&d, [(1, 1)]).unwrap();
        let sf = standard_form(&d, &u).unwrap();
        assert_eq!(sf.size, 1);
        assert_eq!(sf.diagram, d);
        assert_eq!(sf.row_perm, vec![1]);
        assert_eq!(sf.col_perm, vec![1, 2, 3]);
    }

    #[test]
    fn standard_form_swaps_path3_rows() {
        let d = Diagram::new([(1, 1), (2, 1), (2, 2)]).unwrap();
        let u = Transversal::new(&d, [(2, 1)]).unwrap();
        let sf = standard_form(&d, &u).unwrap();
        assert_eq!(
            sf.diagram.box_list(),
            vec![(1, 1), (1, 2), (2, 1)],
        );
        assert_eq!(sf.diagonal_order(), vec![(2, 1)]);
    }

    #[test]
    fn standard_form_rejects_c4_perfect_transversal() {
        let d = graph_to_diagram(&generate::cycle4());
        let u = Transversal::new(&d, [(1, 1), (2, 2)]).unwrap();
        assert!(matches!(standard_form(&d, &u), Err(Error::NotSpecial)));
    }

    #[test]
    fn split_of_two_diagonal_boxes() {
        let d = Diagram::new([(1, 1), (2, 2)]).unwrap();
        let (da, db) = split_diagram(&d, (1, 1), (2, 2)).unwrap();
        assert_eq!(da.box_list(), vec![(2, 1), (2, 2)]);
        assert_eq!(db.box_list(), vec![(1, 2), (2, 2)]);
        // The column split is the black-centered two-edge star, i.e. the
        // same diagram class as {(1,1),(2,1)}.
        let expected = Diagram::new([(1, 1), (2, 1)]).unwrap();
        assert!(canon::isomorphic(
            &diagram_to_graph(&db).unwrap(),
            &diagram_to_graph(&expected).unwrap()
        ));
    }

    #[test]
    fn split_rejects_shared_rows() {
        let d = Diagram::new([(1, 1), (1, 2)]).unwrap();
        assert!(split_diagram(&d, (1, 1), (1, 2)).is_err());
    }

    #[test]
    fn ascii_round_trip() {
        let d = graph_to_diagram(&generate::path(3));
        let s = d.to_ascii();
        assert_eq!(s, "#.\n##\n");
        let back = Diagram::parse_ascii(&s).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_ascii(), s);
    }

    #[test]
    fn split_at_pendant_boxes_yields_the_recurrence_pair() {
        // Splitting the diagram of the pendant-pendant forest at its two
        // pendant boxes produces the diagrams of the two recurrence
        // variants, up to equivalence.
        for seed in 0..25u64 {
            let t = generate::random_leaf_triple(3, seed);
            let (d, boxes) = graph_to_diagram_with_edges(&t.g);
            let n = t.g.n_edges();
            // The generator appends the two pendant edges last.
            let b1 = boxes[n - 2];
            let b2 = boxes[n - 1];
            let (da, db) = split_diagram(&d, b1, b2).unwrap();
            let ga = diagram_to_graph(&da).unwrap();
            let gb = diagram_to_graph(&db).unwrap();
            let mut produced = vec![canon::key(&ga), canon::key(&gb)];
            let mut expected = vec![canon::key(&t.g1), canon::key(&t.g2)];
            produced.sort();
            expected.sort();
            assert_eq!(produced, expected, "seed {seed}");
        }
    }
}
