//! Specht modules of diagrams as explicit left ideals, and tensor-space
//! Schur modules, with dimensions, characters, and decompositions.
//!
//! The left ideal generated by the symmetrizer is built by closing the
//! span of the generator under left multiplication by adjacent
//! transpositions, inserting vectors into a reduced echelon basis until a
//! full pass adds no rank. Vectors are stored on right-coset
//! representatives: every ideal element is constant on cosets of the row
//! stabilizer, which shrinks both coordinates and generator supports by a
//! factor of `|R_D|`.
//!
//! Ranks are computed over a word-sized prime field (optionally two, or
//! exact rationals on small instances); a random large prime can only
//! underestimate the true rank, and the surrounding identity suites pin
//! the values exactly.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::Diagram;
use crate::linalg::{Echelon, Field, PrimeField, RationalField, SparseVec};
use crate::partition::partitions_of;
use crate::perm::{block_subgroup, GroupAlgebraElement, Perm};
use crate::symfunc::{ClassFunction, SchurExpansion};
use crate::{Caps, Error, Result};

/// Positions grouped by row; only groups of two or more positions
/// contribute to the stabilizer.
fn row_blocks(boxes: &[(u32, u32)]) -> Vec<Vec<usize>> {
    let mut by_row: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &(r, _)) in boxes.iter().enumerate() {
        by_row.entry(r).or_default().push(i);
    }
    by_row.into_values().filter(|b| b.len() >= 2).collect()
}

fn col_blocks(boxes: &[(u32, u32)]) -> Vec<Vec<usize>> {
    let mut by_col: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &(_, c)) in boxes.iter().enumerate() {
        by_col.entry(c).or_default().push(i);
    }
    by_col.into_values().filter(|b| b.len() >= 2).collect()
}

fn subgroup_order(blocks: &[Vec<usize>]) -> u128 {
    blocks
        .iter()
        .map(|b| (1..=b.len() as u128).product::<u128>())
        .product()
}

/// The expanded product `C(D) R(D)`: signed column stabilizer sum times
/// row stabilizer sum. Boxes are indexed by their row-major position.
pub fn symmetrizer(d: &Diagram) -> Result<GroupAlgebraElement> {
    symmetrizer_with(d, &Caps::default())
}

pub fn symmetrizer_with(d: &Diagram, caps: &Caps) -> Result<GroupAlgebraElement> {
    let boxes = d.box_list();
    let n = boxes.len();
    let cols = col_blocks(&boxes);
    let rows = row_blocks(&boxes);
    let terms_needed = subgroup_order(&cols) * subgroup_order(&rows);
    if terms_needed > caps.symmetrizer_term_cap {
        return Err(Error::CapExceeded {
            name: "symmetrizer_term_cap",
            needed: terms_needed,
            limit: caps.symmetrizer_term_cap,
        });
    }
    let col_group = block_subgroup(n, &cols);
    let row_group = block_subgroup(n, &rows);
    let mut terms: HashMap<Perm, i64> = HashMap::with_capacity(col_group.len() * row_group.len());
    for c in &col_group {
        let sign = c.sign();
        for r in &row_group {
            *terms.entry(c.compose(r)).or_insert(0) += sign;
        }
    }
    terms.retain(|_, v| *v != 0);
    Ok(GroupAlgebraElement { n, terms })
}

/// Canonical representative of the right coset `p R`: images within each
/// row block are sorted into position order.
fn coset_rep(p: &Perm, rows: &[Vec<usize>]) -> Perm {
    let mut map = p.one_line().to_vec();
    for block in rows {
        let mut vals: Vec<u8> = block.iter().map(|&i| map[i]).collect();
        vals.sort_unstable();
        for (k, &i) in block.iter().enumerate() {
            map[i] = vals[k];
        }
    }
    Perm::from_one_line(map)
}

/// The ideal basis over a fixed field, with the coordinate bookkeeping
/// needed for traces.
struct IdealSpan<'f, F: Field> {
    ech: Echelon<'f, F>,
    coord_of: HashMap<Perm, usize>,
    rep_of: Vec<Perm>,
    rows: Vec<Vec<usize>>,
}

impl<'f, F: Field> IdealSpan<'f, F> {
    fn coord(&mut self, rep: Perm) -> usize {
        if let Some(&i) = self.coord_of.get(&rep) {
            return i;
        }
        let i = self.rep_of.len();
        self.coord_of.insert(rep.clone(), i);
        self.rep_of.push(rep);
        i
    }

    fn left_translate(&mut self, field: &F, v: &SparseVec<F::Elem>, g: &Perm) -> SparseVec<F::Elem> {
        let entries: Vec<(usize, F::Elem)> = v
            .entries
            .iter()
            .map(|(&i, c)| {
                let moved = coset_rep(&g.compose(&self.rep_of[i]), &self.rows);
                (self.coord(moved), c.clone())
            })
            .collect();
        SparseVec::from_entries(field, entries)
    }

    fn build(field: &'f F, d: &Diagram, caps: &Caps) -> Result<Self> {
        let boxes = d.box_list();
        let n = boxes.len();
        if n > caps.specht_n_max {
            return Err(Error::CapExceeded {
                name: "specht_n_max",
                needed: n as u128,
                limit: caps.specht_n_max as u128,
            });
        }
        let rows = row_blocks(&boxes);
        let cols = col_blocks(&boxes);
        let mut span = IdealSpan {
            ech: Echelon::new(field),
            coord_of: HashMap::new(),
            rep_of: Vec::new(),
            rows,
        };
        // The generator, already collapsed onto coset representatives:
        // C R is supported on the cosets c R with value sgn(c).
        let col_group = block_subgroup(n, &cols);
        let gen_entries: Vec<(usize, F::Elem)> = col_group
            .iter()
            .map(|c| {
                let rep = coset_rep(c, &span.rows.clone());
                (span.coord(rep), field.from_i64(c.sign()))
            })
            .collect();
        let generator = SparseVec::from_entries(field, gen_entries);

        // Close under left multiplication by adjacent transpositions.
        let transpositions: Vec<Perm> = (0..n.saturating_sub(1))
            .map(|i| Perm::transposition(n, i, i + 1))
            .collect();
        let mut queue: VecDeque<SparseVec<F::Elem>> = VecDeque::new();
        if span.ech.insert(generator.clone()) {
            queue.push_back(generator);
        }
        while let Some(v) = queue.pop_front() {
            for t in &transpositions {
                let moved = span.left_translate(field, &v, t);
                if span.ech.insert(moved.clone()) {
                    queue.push_back(moved);
                }
            }
        }
        Ok(span)
    }

    /// Trace of left multiplication by `g` on the ideal.
    fn trace(&mut self, field: &F, g: &Perm) -> F::Elem {
        let mut acc = field.zero();
        let basis: Vec<SparseVec<F::Elem>> = self.ech.basis().to_vec();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.pivot().expect("basis vectors are nonzero"))
            .collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            let moved = self.left_translate(field, b, g);
            acc = field.add(&acc, &moved.get(field, p));
        }
        acc
    }
}

/// Dimension of the Specht module of `d` over the default prime.
pub fn specht_dim(d: &Diagram) -> Result<BigInt> {
    specht_dim_with(d, &Caps::default())
}

pub fn specht_dim_with(d: &Diagram, caps: &Caps) -> Result<BigInt> {
    let field = PrimeField::new(caps.prime);
    let span = IdealSpan::build(&field, d, caps)?;
    Ok(BigInt::from(span.ech.rank()))
}

/// Dimension over an explicit prime, for agreement checks.
pub fn specht_dim_mod(d: &Diagram, prime: u64, caps: &Caps) -> Result<BigInt> {
    let field = PrimeField::new(prime);
    let span = IdealSpan::build(&field, d, caps)?;
    Ok(BigInt::from(span.ech.rank()))
}

/// Dimension over the rationals; exact but only sensible for small `n`.
pub fn specht_dim_rational(d: &Diagram, caps: &Caps) -> Result<BigInt> {
    let field = RationalField;
    let span = IdealSpan::build(&field, d, caps)?;
    Ok(BigInt::from(span.ech.rank()))
}

/// Character of the Specht module: the trace of one representative per
/// cycle type on the retained echelon basis, lifted from the prime field
/// to signed integers.
pub fn specht_character(d: &Diagram) -> Result<ClassFunction> {
    specht_character_with(d, &Caps::default())
}

pub fn specht_character_with(d: &Diagram, caps: &Caps) -> Result<ClassFunction> {
    let field = PrimeField::new(caps.prime);
    let mut span = IdealSpan::build(&field, d, caps)?;
    let n = d.len() as u32;
    let mut values = BTreeMap::new();
    for rho in partitions_of(n) {
        let g = Perm::with_cycle_type(&rho);
        let t = span.trace(&field, &g);
        values.insert(rho, lift_signed(t, caps.prime));
    }
    Ok(ClassFunction::new(n, values))
}

fn lift_signed(v: u64, p: u64) -> BigInt {
    if v > p / 2 {
        BigInt::from(v) - BigInt::from(p)
    } else {
        BigInt::from(v)
    }
}

/// Multiplicities of the irreducibles inside the Specht module, via the
/// character inner product. Non-integer or negative multiplicities are
/// hard failures.
pub fn specht_decompose(d: &Diagram) -> Result<SchurExpansion> {
    specht_decompose_with(d, &Caps::default())
}

pub fn specht_decompose_with(d: &Diagram, caps: &Caps) -> Result<SchurExpansion> {
    specht_character_with(d, caps)?.decompose()
}

/// Everything the symmetric-group side knows about a diagram.
#[derive(Debug, Clone)]
pub struct SpechtReport {
    pub dimension: BigInt,
    pub character: ClassFunction,
    pub decomposition: SchurExpansion,
}

pub fn specht_report(d: &Diagram, caps: &Caps) -> Result<SpechtReport> {
    let character = specht_character_with(d, caps)?;
    let decomposition = character.decompose()?;
    let dimension = decomposition.dimension();
    // The rank engine and the character route must agree on dimension.
    let rank = specht_dim_with(d, caps)?;
    if rank != dimension {
        return Err(Error::Internal("rank and character dimension disagree"));
    }
    Ok(SpechtReport {
        dimension,
        character,
        decomposition,
    })
}

/// The tensor-space Schur module side: dimension and monomial character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorReport {
    pub n_vars: u32,
    pub dimension: BigInt,
    /// Content vector (length `n_vars`) to multiplicity; zero
    /// multiplicities are omitted.
    pub character: BTreeMap<Vec<u32>, BigInt>,
}

/// Spans `T C(D) R(D)` over all tableaux `T` with entries up to `N`,
/// content class by content class; the per-content ranks are the monomial
/// character and their sum is the dimension.
pub fn schur_tensor_span(d: &Diagram, n_vars: u32) -> Result<TensorReport> {
    schur_tensor_span_with(d, n_vars, &Caps::default())
}

pub fn schur_tensor_span_with(d: &Diagram, n_vars: u32, caps: &Caps) -> Result<TensorReport> {
    if n_vars < 1 {
        return Err(Error::InvalidParam("N must be at least 1".into()));
    }
    let boxes = d.box_list();
    let n = boxes.len();
    let points = (n_vars as u128).saturating_pow(n as u32);
    if points > caps.tensor_point_cap {
        return Err(Error::CapExceeded {
            name: "tensor_point_cap",
            needed: points,
            limit: caps.tensor_point_cap,
        });
    }
    let rows = row_blocks(&boxes);
    let cols = col_blocks(&boxes);
    let col_group = block_subgroup(n, &cols);
    let row_group = block_subgroup(n, &rows);
    let col_signs: Vec<i64> = col_group.iter().map(|c| c.sign()).collect();
    let field = PrimeField::new(caps.prime);

    // Per content class: coordinate table over row-sorted representative
    // tableaux and an echelon basis.
    struct ContentSpace<'f> {
        coord_of: HashMap<Vec<u8>, usize>,
        ech: Echelon<'f, PrimeField>,
    }
    let mut spaces: BTreeMap<Vec<u32>, ContentSpace<'_>> = BTreeMap::new();

    let mut tableau = vec![1u8; n];
    loop {
        // Generators: one representative per column-orbit, none with a
        // repeated entry inside a column block (those are killed by the
        // antisymmetrizer).
        let col_sorted = cols.iter().all(|b| {
            b.windows(2).all(|w| tableau[w[0]] <= tableau[w[1]])
        });
        let col_distinct = cols.iter().all(|b| {
            b.windows(2).all(|w| tableau[w[0]] != tableau[w[1]])
        });
        if col_sorted && (col_distinct || cols.is_empty()) {
            let mut content = vec![0u32; n_vars as usize];
            for &v in &tableau {
                content[v as usize - 1] += 1;
            }
            let space = spaces.entry(content).or_insert_with(|| ContentSpace {
                coord_of: HashMap::new(),
                ech: Echelon::new(&field),
            });
            // T C R, restricted to row-sorted representatives.
            let mut entries: Vec<(usize, u64)> = Vec::new();
            for (c, &sign) in col_group.iter().zip(&col_signs) {
                for r in &row_group {
                    let cr = c.compose(r);
                    let image: Vec<u8> = (0..n).map(|i| tableau[cr.apply(i)]).collect();
                    let is_rep = rows
                        .iter()
                        .all(|b| b.windows(2).all(|w| image[w[0]] <= image[w[1]]));
                    if !is_rep {
                        continue;
                    }
                    let next = space.coord_of.len();
                    let idx = *space.coord_of.entry(image).or_insert(next);
                    entries.push((idx, field.from_i64(sign)));
                }
            }
            let v = SparseVec::from_entries(&field, entries);
            space.ech.insert(v);
        }
        // Next tableau in odometer order.
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            if tableau[pos] < n_vars as u8 {
                tableau[pos] += 1;
                break;
            }
            tableau[pos] = 1;
            pos += 1;
        }
        if pos == n {
            break;
        }
        if n == 0 {
            break;
        }
    }

    let mut character = BTreeMap::new();
    let mut dimension = BigInt::zero();
    for (content, space) in &spaces {
        let rank = space.ech.rank();
        if rank > 0 {
            character.insert(content.clone(), BigInt::from(rank));
            dimension += BigInt::from(rank);
        }
    }
    Ok(TensorReport {
        n_vars,
        dimension,
        character,
    })
}
