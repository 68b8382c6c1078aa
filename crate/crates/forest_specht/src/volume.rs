//! Normalized volume of the matching polytope, by four independent
//! routes, plus the restricted lattice count `m_G(N)`.
//!
//! - [`v_apm`]: recursion over the canonical almost perfect matching.
//! - [`v_leaf`]: the star/product/leaf-rewrite recursion.
//! - [`v_ehrhart`]: exact interpolation of the Ehrhart polynomial from
//!   brute-force lattice counts (the oracle route).
//! - [`count_standard_labelings`]: the labeling count that the volume
//!   equals.
//!
//! Everything is exact; there is no floating point in this module.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::{self, CanonKey};
use crate::diagram::{diagram_to_graph, Diagram};
use crate::graph::{find_apm, leaf_step, BipartiteGraph, Color, Matching};
use crate::linalg::{interpolate, rational_to_nonneg_integer};
use crate::partition::{factorial, multinomial};
use crate::{Caps, Error, Result};

const MEMO_CAP: usize = 1 << 20;

fn apm_memo() -> &'static Mutex<HashMap<CanonKey, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<CanonKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn leaf_memo() -> &'static Mutex<HashMap<CanonKey, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<CanonKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn memo_insert(table: &Mutex<HashMap<CanonKey, BigInt>>, key: CanonKey, value: &BigInt) {
    let mut t = table.lock().unwrap();
    if t.len() < MEMO_CAP {
        t.insert(key, value.clone());
    }
}

fn product_over_components(
    g: &BipartiteGraph,
    comps: &[Vec<usize>],
    eval: &mut dyn FnMut(&BipartiteGraph) -> BigInt,
) -> BigInt {
    let sizes: Vec<u32> = comps.iter().map(|c| c.len() as u32).collect();
    let mut acc = multinomial(&sizes);
    for c in comps {
        acc *= eval(&g.edge_subgraph(c));
    }
    acc
}

/// Volume by the almost-perfect-matching recursion. Stars of either
/// center color are the base case: the polytope does not see colors, so
/// the white-star base extends to black stars by color invariance.
pub fn v_apm(g: &BipartiteGraph) -> Result<BigInt> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(v_apm_rec(g))
}

fn v_apm_rec(g: &BipartiteGraph) -> BigInt {
    if g.is_empty() {
        return BigInt::one();
    }
    let key = canon::key(g);
    if let Some(hit) = apm_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let comps = g.components();
    let value = if comps.len() > 1 {
        product_over_components(g, &comps, &mut v_apm_rec)
    } else if g.star_center().is_some() {
        BigInt::one()
    } else {
        let m = find_apm(g).expect("forest has an almost perfect matching");
        m.edge_ids()
            .iter()
            .map(|&e| v_apm_rec(&g.delete_edge(e)))
            .sum()
    };
    memo_insert(apm_memo(), key, &value);
    value
}

/// Volume by the uniqueness recursion: white-star base 1, binomial
/// product over disjoint unions, pendant-edge rewrite otherwise.
pub fn v_leaf(g: &BipartiteGraph) -> Result<BigInt> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(v_leaf_rec(g))
}

fn v_leaf_rec(g: &BipartiteGraph) -> BigInt {
    if g.is_empty() {
        return BigInt::one();
    }
    let key = canon::key(g);
    if let Some(hit) = leaf_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let comps = g.components();
    let value = if comps.len() > 1 {
        product_over_components(g, &comps, &mut v_leaf_rec)
    } else {
        let root = g.canonical_root().expect("nonempty graph has a white vertex");
        v_leaf_rooted(g, root)
    };
    memo_insert(leaf_memo(), key, &value);
    value
}

fn v_leaf_rooted(g: &BipartiteGraph, root: u32) -> BigInt {
    if g.is_star_centered_at(root) {
        return BigInt::one();
    }
    let key = canon::key(g);
    if let Some(hit) = leaf_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let step = leaf_step(g, root).expect("connected non-star tree");
    let value = v_leaf_rec(&step.h) - v_leaf_rooted(&step.gp, root);
    memo_insert(leaf_memo(), key, &value);
    value
}

/// Membership test for the `t`-fold dilate of the matching polytope: the
/// weighting (indexed by edge id) must be nonnegative with every vertex
/// sum at most `t`.
pub fn weighting_in_dilate(g: &BipartiteGraph, w: &[u32], t: u32) -> bool {
    if w.len() != g.n_edges() {
        return false;
    }
    g.vertices().iter().all(|&(v, _)| {
        let sum: u64 = g.incident(v).iter().map(|&(e, _)| u64::from(w[e])).sum();
        sum <= u64::from(t)
    })
}

/// Number of nonnegative integer edge weightings with all vertex sums at
/// most `t`: the lattice points of the `t`-fold dilate. Brute-force
/// enumeration with per-vertex pruning; this is the oracle the other
/// routes are checked against.
pub fn lattice_count(g: &BipartiteGraph, t: u32) -> BigInt {
    let index: BTreeMap<u32, usize> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &(v, _))| (v, i))
        .collect();
    let mut caps = vec![i64::from(t); g.vertices().len()];
    let mut count = 0u128;
    fn rec(
        g: &BipartiteGraph,
        index: &BTreeMap<u32, usize>,
        e: usize,
        caps: &mut Vec<i64>,
        count: &mut u128,
    ) {
        if e == g.n_edges() {
            *count += 1;
            return;
        }
        let (a, b) = g.edges()[e];
        let (ia, ib) = (index[&a], index[&b]);
        let bound = caps[ia].min(caps[ib]);
        for w in 0..=bound {
            caps[ia] -= w;
            caps[ib] -= w;
            rec(g, index, e + 1, caps, count);
            caps[ia] += w;
            caps[ib] += w;
        }
    }
    rec(g, &index, 0, &mut caps, &mut count);
    BigInt::from(count)
}

/// Volume via the Ehrhart polynomial: interpolate the lattice counts at
/// `t = 0..=n` with exact rationals and return `n!` times the leading
/// coefficient, which must come out a nonnegative integer.
pub fn v_ehrhart(g: &BipartiteGraph) -> Result<BigInt> {
    v_ehrhart_with(g, &Caps::default())
}

pub fn v_ehrhart_with(g: &BipartiteGraph, caps: &Caps) -> Result<BigInt> {
    let n = g.n_edges();
    if n > caps.ehrhart_n_max {
        return Err(Error::CapExceeded {
            name: "ehrhart_n_max",
            needed: n as u128,
            limit: caps.ehrhart_n_max as u128,
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let points: Vec<(BigRational, BigRational)> = (0..=n as u32)
        .map(|t| {
            (
                BigRational::from_integer(BigInt::from(t)),
                BigRational::from_integer(lattice_count(g, t)),
            )
        })
        .collect();
    let coeffs = interpolate(&points);
    let leading = coeffs[n].clone() * BigRational::from_integer(factorial(n as u32));
    rational_to_nonneg_integer(&leading)
}

/// Number of nonnegative integer weightings with white sums at most
/// `N - 1` and black sums at most `N - deg(v)`.
pub fn m_count(g: &BipartiteGraph, n_vars: u32) -> Result<BigInt> {
    if n_vars < 1 {
        return Err(Error::InvalidParam("N must be at least 1".into()));
    }
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(m_count_unchecked(g, n_vars))
}

fn m_count_unchecked(g: &BipartiteGraph, n_vars: u32) -> BigInt {
    let index: BTreeMap<u32, usize> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &(v, _))| (v, i))
        .collect();
    let mut caps: Vec<i64> = g
        .vertices()
        .iter()
        .map(|&(v, c)| match c {
            Color::White => i64::from(n_vars) - 1,
            Color::Black => i64::from(n_vars) - g.degree(v) as i64,
        })
        .collect();
    if caps.iter().any(|&c| c < 0) {
        return BigInt::zero();
    }
    let mut count = 0u128;
    fn rec(
        g: &BipartiteGraph,
        index: &BTreeMap<u32, usize>,
        e: usize,
        caps: &mut Vec<i64>,
        count: &mut u128,
    ) {
        if e == g.n_edges() {
            *count += 1;
            return;
        }
        let (a, b) = g.edges()[e];
        let (ia, ib) = (index[&a], index[&b]);
        let bound = caps[ia].min(caps[ib]);
        for w in 0..=bound {
            caps[ia] -= w;
            caps[ib] -= w;
            rec(g, index, e + 1, caps, count);
            caps[ia] += w;
            caps[ib] += w;
        }
    }
    rec(g, &index, 0, &mut caps, &mut count);
    BigInt::from(count)
}

/// `m_count` on a diagram; the empty diagram counts one (empty) labeling.
pub fn m_count_diagram(d: &Diagram, n_vars: u32) -> Result<BigInt> {
    if d.is_empty() {
        return Ok(BigInt::one());
    }
    m_count(&diagram_to_graph(d)?, n_vars)
}

/// Number of standard labelings with the canonical almost perfect
/// matching chosen at every level.
pub fn count_standard_labelings(g: &BipartiteGraph) -> Result<BigInt> {
    count_standard_labelings_with(g, &|g| find_apm(g))
}

/// Same, but the almost perfect matching used at each recursion level is
/// supplied by `choice`. Theorem-level counts must not depend on it.
pub fn count_standard_labelings_with(
    g: &BipartiteGraph,
    choice: &dyn Fn(&BipartiteGraph) -> Result<Matching>,
) -> Result<BigInt> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if g.is_empty() {
        return Ok(BigInt::one());
    }
    let m = choice(g)?;
    let mut acc = BigInt::zero();
    for &e in m.edge_ids() {
        acc += count_standard_labelings_with(&g.delete_edge(e), choice)?;
    }
    Ok(acc)
}
