//! Horizontal strips of forest diagrams and the semistandard/standard
//! tableaux they generate.
//!
//! Strips are defined against a fixed almost perfect matching transversal
//! threaded through the recursion: the strip either contains the last
//! diagonal box (and continues on the diagram minus that column, with the
//! rewired transversal from [`derive_u_prime`]) or it does not (and
//! continues on the diagram minus that row and column). Tableau
//! enumeration re-derives the canonical transversal of each sub-diagram
//! at the top of every label level; only the per-level strip recursion
//! threads transversals.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{standard_form, Diagram, StandardFormDiagram, Transversal};
use crate::graph::find_apm;
use crate::{Error, Result};

/// A filling of diagram boxes with positive labels.
pub type ForestTableau = BTreeMap<(u32, u32), u32>;

/// A set of boxes removable together; at most one box per column.
pub type HorizontalStrip = BTreeSet<(u32, u32)>;

/// Diagram-level almost perfect matching test: isolated boxes belong to
/// the transversal and every row or column with two or more boxes meets
/// it.
pub fn is_apm_transversal(d: &Diagram, u: &Transversal) -> bool {
    for b in d.boxes() {
        let (r, c) = b;
        let row_len = d.row(r).len();
        let col_len = d.col(c).len();
        if row_len == 1 && col_len == 1 && !u.contains(b) {
            return false;
        }
    }
    let rows: BTreeSet<u32> = d.boxes().map(|(r, _)| r).collect();
    for r in rows {
        if d.row(r).len() >= 2 && !d.row(r).iter().any(|&b| u.contains(b)) {
            return false;
        }
    }
    let cols: BTreeSet<u32> = d.boxes().map(|(_, c)| c).collect();
    for c in cols {
        if d.col(c).len() >= 2 && !d.col(c).iter().any(|&b| u.contains(b)) {
            return false;
        }
    }
    true
}

/// The canonical almost perfect matching of a diagram, as a transversal.
pub fn canonical_apm_transversal(d: &Diagram) -> Result<Transversal> {
    let (g, boxes) = d.to_graph()?;
    let m = find_apm(&g)?;
    Transversal::new(d, m.edge_ids().iter().map(|&e| boxes[e]))
}

/// Rewires the transversal when the last diagonal column is removed.
///
/// Starting from the last diagonal box, repeatedly pick the least-column
/// box sharing its row, hop to the diagonal box of that column, and
/// continue until either no row-mate or no diagonal box exists. The
/// visited diagonal boxes are traded for the visited row-mates, giving an
/// almost perfect matching transversal of the diagram minus the last
/// column. Coordinates are those of the standard form.
pub fn derive_u_prime(sfd: &StandardFormDiagram) -> Result<Transversal> {
    let u = sfd.size as u32;
    if u == 0 {
        return Err(Error::InvalidParam(
            "transversal is empty; nothing to rewire".into(),
        ));
    }
    let d = &sfd.diagram;
    let mut replaced: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut gained: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut x = (u, u);
    for _ in 0..=d.len() {
        replaced.insert(x);
        let y = d
            .row(x.0)
            .into_iter()
            .filter(|&b| b != x && !gained.contains(&b))
            .min_by_key(|&(_, c)| c);
        let Some(y) = y else { break };
        gained.insert(y);
        let c = y.1;
        if c <= u && d.contains((c, c)) && !replaced.contains(&(c, c)) {
            x = (c, c);
        } else {
            break;
        }
    }
    let dprime = d.without_column(u);
    let mut boxes: Vec<(u32, u32)> = (1..=u)
        .map(|i| (i, i))
        .filter(|b| !replaced.contains(b))
        .collect();
    boxes.extend(gained.iter().copied());
    let t = Transversal::new(&dprime, boxes)?;
    debug_assert!(is_apm_transversal(&dprime, &t));
    Ok(t)
}

/// All horizontal strips of `d` with respect to the almost perfect
/// matching transversal `u`, in the coordinates of `d`.
pub fn horizontal_strips(d: &Diagram, u: &Transversal) -> Result<Vec<HorizontalStrip>> {
    if d.is_empty() {
        return Ok(vec![HorizontalStrip::new()]);
    }
    if !is_apm_transversal(d, u) {
        return Err(Error::InvalidParam(
            "strip recursion needs an almost perfect matching transversal".into(),
        ));
    }
    let sf = standard_form(d, u)?;
    let diag = sf.diagonal_order();
    let last = *diag.last().expect("nonempty transversal");
    let (last_row, last_col) = last;

    // Strips containing the last diagonal box: recurse on the diagram
    // minus its column, with the rewired transversal.
    let uprime_sf = derive_u_prime(&sf)?;
    let dprime = d.without_column(last_col);
    let uprime = Transversal::new(
        &dprime,
        uprime_sf.boxes().iter().map(|&b| sf.to_original(b)),
    )?;
    let mut out: BTreeSet<HorizontalStrip> = BTreeSet::new();
    for mut strip in horizontal_strips(&dprime, &uprime)? {
        strip.insert(last);
        out.insert(strip);
    }

    // Strips avoiding it: recurse on the diagram minus its row and column
    // with the shortened transversal.
    let dsecond = d.without_row_and_column(last_row, last_col);
    let usecond = Transversal::new(
        &dsecond,
        u.boxes().iter().copied().filter(|&b| b != last),
    )?;
    for strip in horizontal_strips(&dsecond, &usecond)? {
        out.insert(strip);
    }

    debug_assert!(out.iter().all(|s| {
        let cols: BTreeSet<u32> = s.iter().map(|&(_, c)| c).collect();
        cols.len() == s.len()
    }));
    Ok(out.into_iter().collect())
}

/// Horizontal strips with respect to the canonical transversal.
pub fn canonical_strips(d: &Diagram) -> Result<Vec<HorizontalStrip>> {
    if d.is_empty() {
        return Ok(vec![HorizontalStrip::new()]);
    }
    horizontal_strips(d, &canonical_apm_transversal(d)?)
}

/// All semistandard tableaux of shape `d` with labels at most `n_labels`:
/// chains of diagrams whose successive differences are horizontal strips,
/// the boxes of the `i`-th difference labeled `i`.
pub fn ssyt_enumerate(d: &Diagram, n_labels: u32) -> Result<Vec<ForestTableau>> {
    if d.is_empty() {
        return Ok(vec![ForestTableau::new()]);
    }
    if n_labels == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for strip in canonical_strips(d)? {
        let removed: BTreeSet<(u32, u32)> = strip.iter().copied().collect();
        let rest = d.without(&removed);
        for mut t in ssyt_enumerate(&rest, n_labels - 1)? {
            for &b in &strip {
                t.insert(b, n_labels);
            }
            out.push(t);
        }
    }
    Ok(out)
}

/// `|SS(d, N)|` with an explicit transversal for the top level only;
/// deeper levels use canonical choices. Used to check that counts do not
/// depend on the choice of almost perfect matching.
pub fn ssyt_count_with_top_transversal(
    d: &Diagram,
    n_labels: u32,
    top: &Transversal,
) -> Result<BigInt> {
    if d.is_empty() {
        return Ok(BigInt::one());
    }
    if n_labels == 0 {
        return Ok(BigInt::zero());
    }
    let mut acc = BigInt::zero();
    for strip in horizontal_strips(d, top)? {
        let removed: BTreeSet<(u32, u32)> = strip.iter().copied().collect();
        let rest = d.without(&removed);
        acc += BigInt::from(ssyt_enumerate(&rest, n_labels - 1)?.len());
    }
    Ok(acc)
}

/// Standard tableaux: semistandard with each label `1..=n` exactly once.
pub fn standard_tableaux(d: &Diagram) -> Result<Vec<ForestTableau>> {
    let n = d.len() as u32;
    let all = ssyt_enumerate(d, n)?;
    Ok(all
        .into_iter()
        .filter(|t| {
            let mut seen: BTreeSet<u32> = BTreeSet::new();
            t.values().all(|&v| seen.insert(v))
        })
        .collect())
}

/// Standard labelings by the direct recursion: the largest label sits on
/// a canonical-transversal box and the rest labels the remaining diagram.
pub fn standard_labelings_by_recursion(d: &Diagram) -> Result<Vec<ForestTableau>> {
    if d.is_empty() {
        return Ok(vec![ForestTableau::new()]);
    }
    let n = d.len() as u32;
    let u = canonical_apm_transversal(d)?;
    let mut out = Vec::new();
    for &b in u.boxes() {
        for mut t in standard_labelings_by_recursion(&d.without_box(b))? {
            t.insert(b, n);
            out.push(t);
        }
    }
    Ok(out)
}

/// Content statistics of `SS(d, N)`: content vector (length `N`) to the
/// number of tableaux realizing it.
pub fn ssyt_generating_function(
    d: &Diagram,
    n_labels: u32,
) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for t in ssyt_enumerate(d, n_labels)? {
        let mut content = vec![0u32; n_labels as usize];
        for &v in t.values() {
            content[v as usize - 1] += 1;
        }
        *out.entry(content).or_insert_with(BigInt::zero) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::graph_to_diagram;
    use crate::generate;
    use crate::graph::Color;
    use crate::partition::binomial;

    fn strip(boxes: &[(u32, u32)]) -> HorizontalStrip {
        boxes.iter().copied().collect()
    }

    fn sf_of(boxes: &[(u32, u32)], u: &[(u32, u32)]) -> StandardFormDiagram {
        let d = Diagram::new(boxes.iter().copied()).unwrap();
        let t = Transversal::new(&d, u.iter().copied()).unwrap();
        standard_form(&d, &t).unwrap()
    }

    #[test]
    fn u_prime_examples() {
        // Single box: the chain stops immediately and U' is empty.
        let sf = sf_of(&[(1, 1)], &[(1, 1)]);
        let up = derive_u_prime(&sf).unwrap();
        assert!(up.is_empty());

        // Standard-form path diagram: one chain step.
        let sf = sf_of(&[(1, 1), (1, 2), (2, 1)], &[(1, 1)]);
        let up = derive_u_prime(&sf).unwrap();
        assert_eq!(up.boxes(), &[(1, 2)]);

        // Two diagonal boxes: nothing shares row 2.
        let sf = sf_of(&[(1, 1), (2, 2)], &[(1, 1), (2, 2)]);
        let up = derive_u_prime(&sf).unwrap();
        assert_eq!(up.boxes(), &[(1, 1)]);
    }

    #[test]
    fn strips_of_small_diagrams() {
        let d = Diagram::new([(1, 1)]).unwrap();
        let u = Transversal::new(&d, [(1, 1)]).unwrap();
        let ys = horizontal_strips(&d, &u).unwrap();
        assert_eq!(ys, vec![strip(&[]), strip(&[(1, 1)])]);

        let d = Diagram::new([(1, 1), (1, 2), (2, 1)]).unwrap();
        let u = Transversal::new(&d, [(1, 1)]).unwrap();
        let ys = horizontal_strips(&d, &u).unwrap();
        assert_eq!(
            ys,
            vec![strip(&[]), strip(&[(1, 1)]), strip(&[(1, 1), (1, 2)])]
        );

        let d = Diagram::new([(1, 1), (2, 2)]).unwrap();
        let u = Transversal::new(&d, [(1, 1), (2, 2)]).unwrap();
        let ys = horizontal_strips(&d, &u).unwrap();
        assert_eq!(
            ys,
            vec![
                strip(&[]),
                strip(&[(1, 1)]),
                strip(&[(1, 1), (2, 2)]),
                strip(&[(2, 2)])
            ]
        );
    }

    #[test]
    fn size_one_strips_are_the_transversal() {
        for g in crate::enumerate::forests_up_to(5) {
            let d = graph_to_diagram(&g);
            let u = canonical_apm_transversal(&d).unwrap();
            let singles: BTreeSet<(u32, u32)> = horizontal_strips(&d, &u)
                .unwrap()
                .into_iter()
                .filter(|s| s.len() == 1)
                .map(|s| *s.iter().next().unwrap())
                .collect();
            let expected: BTreeSet<(u32, u32)> = u.boxes().iter().copied().collect();
            assert_eq!(singles, expected);
        }
    }

    #[test]
    fn ssyt_counts() {
        for n in 1..=4u32 {
            let row = Diagram::new((1..=n).map(|c| (1, c))).unwrap();
            for nv in 1..=3u32 {
                let count = ssyt_enumerate(&row, nv).unwrap().len();
                assert_eq!(BigInt::from(count), binomial(n + nv - 1, n));
            }
        }
        let p3 = graph_to_diagram(&generate::path(3));
        assert_eq!(ssyt_enumerate(&p3, 2).unwrap().len(), 2);
        // With one label, only fully-strippable diagrams survive.
        let row2 = Diagram::new([(1, 1), (1, 2)]).unwrap();
        assert_eq!(ssyt_enumerate(&row2, 1).unwrap().len(), 1);
        let col2 = Diagram::new([(1, 1), (2, 1)]).unwrap();
        assert_eq!(ssyt_enumerate(&col2, 1).unwrap().len(), 0);
    }

    #[test]
    fn standard_counts_match_both_routes() {
        for g in [
            generate::star(4, Color::White),
            generate::path(3),
            generate::path(4),
        ] {
            let d = graph_to_diagram(&g);
            let via_ssyt: BTreeSet<ForestTableau> =
                standard_tableaux(&d).unwrap().into_iter().collect();
            let direct: BTreeSet<ForestTableau> = standard_labelings_by_recursion(&d)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(via_ssyt, direct);
        }
        let t4 = graph_to_diagram(&generate::star(4, Color::White));
        assert_eq!(standard_tableaux(&t4).unwrap().len(), 1);
        let p3 = graph_to_diagram(&generate::path(3));
        assert_eq!(standard_tableaux(&p3).unwrap().len(), 2);
        let p4 = graph_to_diagram(&generate::path(4));
        assert_eq!(standard_tableaux(&p4).unwrap().len(), 5);
    }

    #[test]
    fn generating_functions() {
        let row2 = Diagram::new([(1, 1), (1, 2)]).unwrap();
        let gf = ssyt_generating_function(&row2, 2).unwrap();
        let expect: BTreeMap<Vec<u32>, BigInt> = [
            (vec![2, 0], BigInt::one()),
            (vec![1, 1], BigInt::one()),
            (vec![0, 2], BigInt::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(gf, expect);

        let p3 = graph_to_diagram(&generate::path(3));
        let gf = ssyt_generating_function(&p3, 2).unwrap();
        let expect: BTreeMap<Vec<u32>, BigInt> = [
            (vec![2, 1], BigInt::one()),
            (vec![1, 2], BigInt::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(gf, expect);

        let col2 = Diagram::new([(1, 1), (2, 1)]).unwrap();
        let gf = ssyt_generating_function(&col2, 2).unwrap();
        let expect: BTreeMap<Vec<u32>, BigInt> =
            [(vec![1, 1], BigInt::one())].into_iter().collect();
        assert_eq!(gf, expect);
    }
}
