//! The forest Schur function in the complete homogeneous basis, its
//! Schur expansion, specializations, and the universal evaluation of the
//! star/product/leaf rules in an arbitrary commutative ring.
//!
//! The internal basis is the h basis because both defining recurrences
//! are native there; conversion to the Schur basis happens only at the
//! boundary, through Kostka numbers.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::canon::{self, CanonKey};
use crate::graph::{leaf_step, BipartiteGraph};
use crate::partition::{
    class_size, factorial, hook_dim, kostka, mn_char, partitions_of, Partition,
};
use crate::{Error, Result};

/// An integer combination of products `h_mu` of complete homogeneous
/// symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HPoly {
    terms: BTreeMap<Partition, BigInt>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly::default()
    }

    pub fn one() -> Self {
        HPoly {
            terms: BTreeMap::from([(Partition::empty(), BigInt::one())]),
        }
    }

    /// The generator `h_k`; `h_0 = 1`.
    pub fn h(k: u32) -> Self {
        if k == 0 {
            return HPoly::one();
        }
        HPoly {
            terms: BTreeMap::from([(Partition::new(vec![k]), BigInt::one())]),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn add(&self, other: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (mu, c) in other.terms() {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (mu, c) in other.terms() {
            out.add_term(mu.clone(), -c.clone());
        }
        out
    }

    /// Bilinear product with `h_mu * h_nu = h_{sorted merge}`.
    pub fn mul(&self, other: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (mu, a) in self.terms() {
            for (nu, b) in other.terms() {
                out.add_term(mu.merge(nu), a * b);
            }
        }
        out
    }

    /// Degree if all terms are homogeneous of one degree. The zero
    /// polynomial counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for mu in self.terms.keys() {
            match deg {
                None => deg = Some(mu.size()),
                Some(d) if d != mu.size() => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }
}

/// Free multiplication in the h basis.
pub fn hpoly_mul(a: &HPoly, b: &HPoly) -> HPoly {
    a.mul(b)
}

/// An integer combination of Schur functions, indexed by partitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum c_lambda * f^lambda`, the dimension of the module it encodes.
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(l, c)| c * hook_dim(l))
            .sum()
    }

    /// The class function `sum c_lambda * chi^lambda`.
    pub fn character(&self, n: u32) -> ClassFunction {
        let mut values = BTreeMap::new();
        for rho in partitions_of(n) {
            let mut acc = BigInt::zero();
            for (l, c) in self.terms() {
                acc += c * BigInt::from(mn_char(l, &rho).expect("sizes match"));
            }
            values.insert(rho, acc);
        }
        ClassFunction { n, values }
    }

    /// Multiset of partitions obtained by removing one corner from each
    /// constituent, with multiplicity; the branching of the restriction
    /// to the next smaller symmetric group.
    pub fn restriction_multiset(&self) -> BTreeMap<Partition, BigInt> {
        let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (l, c) in self.terms() {
            for smaller in l.corners_removed() {
                *out.entry(smaller).or_insert_with(BigInt::zero) += c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// An integer-valued function on the cycle types of `Sigma_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: u32,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    pub fn new(n: u32, values: BTreeMap<Partition, BigInt>) -> Self {
        ClassFunction { n, values }
    }

    pub fn get(&self, rho: &Partition) -> BigInt {
        self.values.get(rho).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    /// Multiplicity of each irreducible via the character inner product;
    /// errors if any multiplicity fails to be a nonnegative integer.
    pub fn decompose(&self) -> Result<SchurExpansion> {
        let n = self.n;
        let nf = factorial(n);
        let mut out = SchurExpansion::zero();
        for lambda in partitions_of(n) {
            let mut acc = BigInt::zero();
            for rho in partitions_of(n) {
                acc += class_size(&rho)
                    * self.get(&rho)
                    * BigInt::from(mn_char(&lambda, &rho).expect("sizes match"));
            }
            let (q, r) = num_integer::Integer::div_rem(&acc, &nf);
            if !r.is_zero() {
                return Err(Error::NonIntegerResult);
            }
            if q.is_negative() {
                return Err(Error::NegativeCoefficient(lambda.to_string(), q.to_string()));
            }
            out.add_term(lambda, q);
        }
        Ok(out)
    }
}

fn s_memo() -> &'static Mutex<HashMap<CanonKey, HPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<CanonKey, HPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

const MEMO_CAP: usize = 1 << 20;

fn memo_insert<V: Clone>(table: &Mutex<HashMap<CanonKey, V>>, key: CanonKey, value: &V) {
    let mut t = table.lock().unwrap();
    if t.len() < MEMO_CAP {
        t.insert(key, value.clone());
    }
}

/// The symmetric function of a forest: white stars map to `h_n`, disjoint
/// unions multiply, and the pendant-edge rewrite resolves everything else.
pub fn s_forest(g: &BipartiteGraph) -> Result<HPoly> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(s_rec(g))
}

fn s_rec(g: &BipartiteGraph) -> HPoly {
    if g.is_empty() {
        return HPoly::one();
    }
    let key = canon::key(g);
    if let Some(hit) = s_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let comps = g.components();
    let value = if comps.len() > 1 {
        comps
            .iter()
            .map(|c| s_rec(&g.edge_subgraph(c)))
            .fold(HPoly::one(), |acc, x| acc.mul(&x))
    } else {
        let root = g.canonical_root().expect("nonempty graph has a white vertex");
        s_rooted(g, root)
    };
    memo_insert(s_memo(), key, &value);
    value
}

fn s_rooted(g: &BipartiteGraph, root: u32) -> HPoly {
    if g.is_star_centered_at(root) {
        return HPoly::h(g.n_edges() as u32);
    }
    let key = canon::key(g);
    if let Some(hit) = s_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let step = leaf_step(g, root).expect("connected non-star tree");
    let value = s_rec(&step.h).sub(&s_rooted(&step.gp, root));
    memo_insert(s_memo(), key, &value);
    value
}

/// Expands `sum a_mu h_mu` in the Schur basis via `h_mu = sum K_{lambda
/// mu} s_lambda`. Requires a homogeneous input.
pub fn h_to_schur(p: &HPoly) -> Result<SchurExpansion> {
    let Some(n) = p.homogeneous_degree() else {
        return Err(Error::NotHomogeneous);
    };
    let mut out = SchurExpansion::zero();
    for lambda in partitions_of(n) {
        let mut acc = BigInt::zero();
        for (mu, a) in p.terms() {
            if lambda.dominates(mu) {
                acc += a * BigInt::from(kostka(&lambda, mu)?);
            }
        }
        out.add_term(lambda, acc);
    }
    Ok(out)
}

/// Inverse change of basis by dominance-order back-substitution:
/// `s_mu = h_mu - sum_{lambda > mu} K_{lambda mu} (s_lambda in h)`.
pub fn schur_to_h(se: &SchurExpansion) -> HPoly {
    fn schur_in_h(mu: &Partition, cache: &mut BTreeMap<Partition, HPoly>) -> HPoly {
        if let Some(hit) = cache.get(mu) {
            return hit.clone();
        }
        let mut out = HPoly::zero();
        out.add_term(mu.clone(), BigInt::one());
        for lambda in partitions_of(mu.size()) {
            if &lambda != mu && lambda.dominates(mu) {
                let k = kostka(&lambda, mu).expect("sizes match");
                if k != 0 {
                    let inner = schur_in_h(&lambda, cache);
                    let mut scaled = HPoly::zero();
                    for (nu, c) in inner.terms() {
                        scaled.add_term(nu.clone(), c * BigInt::from(k));
                    }
                    out = out.sub(&scaled);
                }
            }
        }
        cache.insert(mu.clone(), out.clone());
        out
    }
    let mut cache = BTreeMap::new();
    let mut out = HPoly::zero();
    for (lambda, c) in se.terms() {
        let base = schur_in_h(lambda, &mut cache);
        for (nu, b) in base.terms() {
            out.add_term(nu.clone(), c * b);
        }
    }
    out
}

/// Schur-basis coefficients of a forest. These are multiplicities of
/// irreducibles, so a negative coefficient is reported as a hard error.
pub fn schur_coeffs(g: &BipartiteGraph) -> Result<SchurExpansion> {
    let se = h_to_schur(&s_forest(g)?)?;
    for (lambda, c) in se.terms() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(lambda.to_string(), c.to_string()));
        }
    }
    Ok(se)
}

/// Exponential specialization: the ring map `h_k -> 1/k!`.
pub fn exp_specialize(p: &HPoly) -> BigRational {
    let mut acc = BigRational::zero();
    for (mu, a) in p.terms() {
        let mut term = BigRational::from_integer(a.clone());
        for &part in mu.parts() {
            term /= BigRational::from_integer(factorial(part));
        }
        acc += term;
    }
    acc
}

/// Principal specialization at `N` ones: the ring map
/// `h_k -> binomial(k + N - 1, k)`.
pub fn principal_specialize(p: &HPoly, n_vars: u32) -> Result<BigInt> {
    if n_vars < 1 {
        return Err(Error::InvalidParam("N must be at least 1".into()));
    }
    let mut acc = BigInt::zero();
    for (mu, a) in p.terms() {
        let mut term = a.clone();
        for &part in mu.parts() {
            term *= crate::partition::binomial(part + n_vars - 1, part);
        }
        acc += term;
    }
    Ok(acc)
}

/// Monomial expansion of `sum c_lambda s_lambda` in `n_vars` variables:
/// content vector -> coefficient, via Kostka numbers.
pub fn schur_monomial_expansion(
    se: &SchurExpansion,
    n_vars: u32,
) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    let mut degree = None;
    for (l, _) in se.terms() {
        degree = Some(l.size());
    }
    let Some(n) = degree else {
        return Ok(BTreeMap::new());
    };
    let mut out = BTreeMap::new();
    for alpha in compositions(n, n_vars) {
        let mu = Partition::new(alpha.clone());
        let mut acc = BigInt::zero();
        for (lambda, c) in se.terms() {
            acc += c * BigInt::from(kostka(lambda, &mu)?);
        }
        if !acc.is_zero() {
            out.insert(alpha, acc);
        }
    }
    Ok(out)
}

/// All compositions of `n` into exactly `k` nonnegative parts.
pub fn compositions(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(rem: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=rem {
            cur.push(v);
            rec(rem - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

/// A commutative ring given as a context object, for evaluating the
/// universal property of `s`.
#[allow(clippy::wrong_self_convention)]
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
}

/// Integers modulo an arbitrary (not necessarily prime) modulus.
#[derive(Debug, Clone, Copy)]
pub struct IntegersMod(pub u64);

impl Ring for IntegersMod {
    type Elem = u64;
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b % self.0) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        use num_traits::ToPrimitive;
        let m = BigInt::from(self.0);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits")
    }
}

/// Exact rational arithmetic as a [`Ring`].
#[derive(Debug, Clone, Copy)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
}

/// Extends an assignment on white stars to all forests by the product
/// rule and the leaf recurrence, evaluated directly in `ring`.
pub fn leaf_eval<R: Ring>(
    ring: &R,
    g: &BipartiteGraph,
    star_value: &dyn Fn(&R, u32) -> R::Elem,
) -> Result<R::Elem> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    fn rec<R: Ring>(
        ring: &R,
        g: &BipartiteGraph,
        star_value: &dyn Fn(&R, u32) -> R::Elem,
    ) -> R::Elem {
        if g.is_empty() {
            return ring.one();
        }
        let comps = g.components();
        if comps.len() > 1 {
            return comps
                .iter()
                .map(|c| rec(ring, &g.edge_subgraph(c), star_value))
                .fold(ring.one(), |acc, x| ring.mul(&acc, &x));
        }
        let root = g.canonical_root().expect("white vertex exists");
        rooted(ring, g, root, star_value)
    }
    fn rooted<R: Ring>(
        ring: &R,
        g: &BipartiteGraph,
        root: u32,
        star_value: &dyn Fn(&R, u32) -> R::Elem,
    ) -> R::Elem {
        if g.is_star_centered_at(root) {
            return star_value(ring, g.n_edges() as u32);
        }
        let step = leaf_step(g, root).expect("connected non-star tree");
        let h = rec(ring, &step.h, star_value);
        let gp = rooted(ring, &step.gp, root, star_value);
        ring.sub(&h, &gp)
    }
    Ok(rec(ring, g, star_value))
}

/// Applies the ring map `h_k -> values(k)` to an h-basis polynomial.
pub fn hpoly_specialize<R: Ring>(
    ring: &R,
    p: &HPoly,
    values: &dyn Fn(&R, u32) -> R::Elem,
) -> R::Elem {
    let mut acc = ring.from_bigint(&BigInt::zero());
    for (mu, a) in p.terms() {
        let mut term = ring.from_bigint(a);
        for &part in mu.parts() {
            term = ring.mul(&term, &values(ring, part));
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Color;

    fn hp(pairs: &[(&[u32], i64)]) -> HPoly {
        let mut p = HPoly::zero();
        for &(mu, c) in pairs {
            p.add_term(Partition::new(mu.to_vec()), BigInt::from(c));
        }
        p
    }

    #[test]
    fn hpoly_products() {
        let h2h1 = hpoly_mul(&HPoly::h(2), &HPoly::h(1));
        assert_eq!(h2h1, hp(&[(&[2, 1], 1)]));
        let e2 = hp(&[(&[1, 1], 1), (&[2], -1)]);
        assert_eq!(hpoly_mul(&e2, &HPoly::one()), e2);
        assert_eq!(hpoly_mul(&HPoly::h(1), &HPoly::h(1)), hp(&[(&[1, 1], 1)]));
    }

    #[test]
    fn s_of_stars_and_paths() {
        for n in 1..=6 {
            let s = s_forest(&generate::star(n, Color::White)).unwrap();
            assert_eq!(s, HPoly::h(n));
        }
        let s = s_forest(&generate::star(2, Color::Black)).unwrap();
        assert_eq!(s, hp(&[(&[1, 1], 1), (&[2], -1)]));
        let s = s_forest(&generate::path(3)).unwrap();
        assert_eq!(s, hp(&[(&[2, 1], 1), (&[3], -1)]));
    }

    #[test]
    fn schur_conversion() {
        assert_eq!(
            h_to_schur(&HPoly::h(3)).unwrap().terms().collect::<Vec<_>>(),
            vec![(&Partition::new(vec![3]), &BigInt::one())]
        );
        let h111 = hp(&[(&[1, 1, 1], 1)]);
        let se = h_to_schur(&h111).unwrap();
        assert_eq!(se.coeff(&Partition::new(vec![3])), BigInt::from(1));
        assert_eq!(se.coeff(&Partition::new(vec![2, 1])), BigInt::from(2));
        assert_eq!(se.coeff(&Partition::new(vec![1, 1, 1])), BigInt::from(1));
        let e2 = hp(&[(&[1, 1], 1), (&[2], -1)]);
        let se = h_to_schur(&e2).unwrap();
        assert_eq!(se.coeff(&Partition::new(vec![1, 1])), BigInt::from(1));
        assert_eq!(se.coeff(&Partition::new(vec![2])), BigInt::from(0));
    }

    #[test]
    fn schur_h_round_trip() {
        for p in [
            HPoly::h(4),
            hp(&[(&[2, 1], 1), (&[3], -1)]),
            hp(&[(&[1, 1, 1, 1], 2), (&[2, 2], -3), (&[4], 5)]),
        ] {
            let se = h_to_schur(&p).unwrap();
            assert_eq!(schur_to_h(&se), p);
        }
    }

    #[test]
    fn schur_coeffs_of_forests() {
        let se = schur_coeffs(&generate::star(4, Color::White)).unwrap();
        assert_eq!(se.coeff(&Partition::new(vec![4])), BigInt::one());
        assert_eq!(se.terms().count(), 1);
        let se = schur_coeffs(&generate::path(3)).unwrap();
        assert_eq!(se.coeff(&Partition::new(vec![2, 1])), BigInt::one());
        assert_eq!(se.terms().count(), 1);
    }

    #[test]
    fn specializations() {
        // h_n -> 1/n!
        assert_eq!(
            exp_specialize(&HPoly::h(4)),
            BigRational::new(BigInt::one(), factorial(4))
        );
        assert_eq!(exp_specialize(&hp(&[(&[1, 1], 1)])), BigRational::one());
        // s(P3) = h_{21} - h_3 has exponential specialization 2/3!.
        let s = s_forest(&generate::path(3)).unwrap();
        assert_eq!(
            exp_specialize(&s),
            BigRational::new(BigInt::from(2), BigInt::from(6))
        );
        // Principal specialization of h_n at N is binomial(n+N-1, n).
        for n in 1..=5u32 {
            for nv in 1..=4u32 {
                assert_eq!(
                    principal_specialize(&HPoly::h(n), nv).unwrap(),
                    crate::partition::binomial(n + nv - 1, n)
                );
            }
        }
        assert_eq!(principal_specialize(&s, 2).unwrap(), BigInt::from(2));
        // At N = 1 every h_k goes to 1.
        let p = hp(&[(&[3, 2], 4), (&[1], -7)]);
        assert_eq!(principal_specialize(&p, 1).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn monomial_expansion_examples() {
        let mut se = SchurExpansion::zero();
        se.add_term(Partition::new(vec![2, 1]), BigInt::one());
        let m = schur_monomial_expansion(&se, 2).unwrap();
        assert_eq!(m.get(&vec![2, 1]), Some(&BigInt::one()));
        assert_eq!(m.get(&vec![1, 2]), Some(&BigInt::one()));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn universal_evaluation_matches_specialized_s() {
        let ring = IntegersMod(97);
        let star = |r: &IntegersMod, n: u32| r.from_bigint(&BigInt::from(n * n + 1));
        for seed in 0..30u64 {
            let g = generate::random_forest(5, seed);
            let direct = leaf_eval(&ring, &g, &star).unwrap();
            let via_s = hpoly_specialize(&ring, &s_forest(&g).unwrap(), &star);
            assert_eq!(direct, via_s, "seed {seed}");
        }
    }
}
