//! Exact linear algebra: word-sized prime fields, sparse reduced echelon
//! bases, and rational polynomial interpolation.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A field given as a context object, so prime moduli stay runtime data.
#[allow(clippy::wrong_self_convention)]
pub trait Field {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
}

/// Integers modulo a word-sized prime.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// Exact rationals, for confirming modular ranks on small instances.
#[derive(Debug, Clone, Copy)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Sparse vector over coordinates `0..dim`; entries are kept sorted and
/// nonzero.
#[derive(Debug, Clone)]
pub struct SparseVec<E> {
    pub entries: BTreeMap<usize, E>,
}

impl<E: Clone + PartialEq + Debug> SparseVec<E> {
    pub fn new() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<F: Field<Elem = E>>(
        field: &F,
        it: impl IntoIterator<Item = (usize, E)>,
    ) -> Self {
        let mut entries: BTreeMap<usize, E> = BTreeMap::new();
        for (k, v) in it {
            let cur = entries.remove(&k);
            let next = match cur {
                Some(c) => field.add(&c, &v),
                None => v,
            };
            if !field.is_zero(&next) {
                entries.insert(k, next);
            }
        }
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get<F: Field<Elem = E>>(&self, field: &F, k: usize) -> E {
        self.entries.get(&k).cloned().unwrap_or_else(|| field.zero())
    }

    /// Leading coordinate.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn scale<F: Field<Elem = E>>(&mut self, field: &F, c: &E) {
        for v in self.entries.values_mut() {
            *v = field.mul(v, c);
        }
    }

    /// `self += c * other`.
    pub fn axpy<F: Field<Elem = E>>(&mut self, field: &F, c: &E, other: &SparseVec<E>) {
        if field.is_zero(c) {
            return;
        }
        for (&k, v) in &other.entries {
            let add = field.mul(c, v);
            let cur = self.entries.remove(&k);
            let next = match cur {
                Some(cv) => field.add(&cv, &add),
                None => add,
            };
            if !field.is_zero(&next) {
                self.entries.insert(k, next);
            }
        }
    }
}

impl<E: Clone + PartialEq + Debug> Default for SparseVec<E> {
    fn default() -> Self {
        SparseVec::new()
    }
}

/// A reduced echelon basis maintained incrementally.
///
/// Every basis vector has coefficient one on its pivot coordinate and
/// zeros on all other pivots, so expressing a member of the span requires
/// only pivot lookups.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    basis: Vec<SparseVec<F::Elem>>,
    pivot_to_basis: BTreeMap<usize, usize>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F) -> Self {
        Echelon {
            field,
            basis: Vec::new(),
            pivot_to_basis: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pivot_to_basis.iter().map(|(&p, &i)| (p, i))
    }

    /// Reduces `v` against the basis, leaving the residual.
    pub fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        loop {
            let hit = v
                .entries
                .iter()
                .find_map(|(&k, c)| self.pivot_to_basis.get(&k).map(|&b| (k, c.clone(), b)));
            let Some((k, c, b)) = hit else { break };
            let _ = k;
            let neg = self.field.neg(&c);
            v.axpy(self.field, &neg, &self.basis[b]);
        }
        v
    }

    /// Inserts `v` if it is independent of the basis; returns whether the
    /// rank grew.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.pivot() else { return false };
        let lead = v.entries.get(&p).cloned().expect("pivot entry exists");
        let inv = self.field.inv(&lead);
        v.scale(self.field, &inv);
        // Back-substitute to keep the basis fully reduced.
        for b in &mut self.basis {
            if let Some(c) = b.entries.get(&p).cloned() {
                let neg = self.field.neg(&c);
                b.axpy(self.field, &neg, &v);
            }
        }
        self.pivot_to_basis.insert(p, self.basis.len());
        self.basis.push(v);
        true
    }

    /// Coefficients of `v` on the basis, assuming `v` lies in the span.
    /// With a reduced basis these are plain pivot lookups.
    pub fn coords_in_span(&self, v: &SparseVec<F::Elem>) -> Vec<F::Elem> {
        self.basis
            .iter()
            .map(|b| {
                let p = b.pivot().expect("basis vectors are nonzero");
                v.get(self.field, p)
            })
            .collect()
    }
}

/// Exact Lagrange interpolation through the given points; returns the
/// coefficients from constant term upward.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
        let mut poly = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= xj * c;
            }
            poly = next;
            denom *= xi - xj;
        }
        let scale = yi / &denom;
        for (k, c) in poly.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    coeffs
}

pub fn poly_eval(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Extracts an integer from a rational, failing loudly otherwise.
pub fn rational_to_integer(r: &BigRational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegerResult)
    }
}

/// Converts a nonnegative rational that must be integral.
pub fn rational_to_nonneg_integer(r: &BigRational) -> Result<BigInt> {
    let i = rational_to_integer(r)?;
    if i.is_negative() {
        return Err(Error::NonIntegerResult);
    }
    Ok(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(2_147_483_647);
        for v in [1u64, 2, 17, 2_000_000_000] {
            assert_eq!(f.mul(&v, &f.inv(&v)), 1);
        }
    }

    #[test]
    fn echelon_rank_over_prime_field() {
        let f = PrimeField::new(2_147_483_647);
        let mut e = Echelon::new(&f);
        let v1 = SparseVec::from_entries(&f, [(0, 1u64), (1, 2)]);
        let v2 = SparseVec::from_entries(&f, [(1, 1u64)]);
        let v3 = SparseVec::from_entries(&f, [(0, 1u64), (1, 3)]); // = v1 + v2
        assert!(e.insert(v1));
        assert!(e.insert(v2));
        assert!(!e.insert(v3));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn coords_in_reduced_basis() {
        let f = RationalField;
        let mut e = Echelon::new(&f);
        let two = f.from_i64(2);
        let five = f.from_i64(5);
        e.insert(SparseVec::from_entries(&f, [(0, two.clone()), (2, five)]));
        e.insert(SparseVec::from_entries(&f, [(1, two)]));
        let v = SparseVec::from_entries(
            &f,
            [(0, f.from_i64(4)), (1, f.from_i64(6)), (2, f.from_i64(10))],
        );
        let coords = e.coords_in_span(&v);
        assert_eq!(coords, vec![f.from_i64(4), f.from_i64(6)]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // f(x) = x^2 + 3x + 1
        let pts: Vec<(BigRational, BigRational)> = (0..3)
            .map(|t| {
                let x = BigRational::from_integer(BigInt::from(t));
                let y = &x * &x + BigRational::from_integer(BigInt::from(3)) * &x
                    + BigRational::from_integer(BigInt::from(1));
                (x, y)
            })
            .collect();
        let coeffs = interpolate(&pts);
        let expect: Vec<BigRational> = [1, 3, 1]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        assert_eq!(coeffs, expect);
    }
}
