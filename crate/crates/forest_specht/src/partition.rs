//! Integer partitions and the standard combinatorics attached to them:
//! dominance, Kostka numbers, hook lengths, and irreducible symmetric
//! group characters via border-strip recursion.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts. Zero parts are dropped
/// on construction, so the empty partition is the partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition::new(parts)
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    /// Only meaningful for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Partitions obtained by removing one corner box.
    pub fn corners_removed(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts));
            }
        }
        out
    }

    /// Concatenation, used for the product of complete homogeneous terms.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

/// Ordered by size, then reverse-lexicographically, so `(n)` comes first
/// among partitions of `n` and `(1, .., 1)` last.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in the order of the `Ord` impl.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=u64::from(n) {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..u64::from(k) {
        acc = acc * (u64::from(n) - i) / (i + 1);
    }
    acc
}

/// `n! / (n_1! n_2! ...)` for a composition of `n`.
pub fn multinomial(sizes: &[u32]) -> BigInt {
    let n: u32 = sizes.iter().sum();
    let mut acc = factorial(n);
    for &s in sizes {
        acc /= factorial(s);
    }
    acc
}

/// Centralizer size `z_rho = prod_i i^{m_i} m_i!` of a cycle type.
pub fn centralizer_size(rho: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = 0;
    while i < rho.len() {
        let part = rho.part(i);
        let mut mult = 0u32;
        while i < rho.len() && rho.part(i) == part {
            mult += 1;
            i += 1;
        }
        acc *= BigInt::from(part).pow(mult) * factorial(mult);
    }
    acc
}

/// Conjugacy class size of cycle type `rho` in the symmetric group.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_size(rho)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook
/// length formula.
pub fn hook_dim(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut denom = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.part(j as usize) - i as u32 - 1);
            denom *= BigInt::from(hook);
        }
    }
    factorial(n) / denom
}

/// Standard tableau count by direct recursion on corner removal; the
/// independent oracle for [`hook_dim`].
pub fn syt_count_by_recursion(lambda: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    lambda
        .corners_removed()
        .iter()
        .map(syt_count_by_recursion)
        .sum()
}

/// Kostka number: semistandard Young tableaux of shape `lambda` and
/// content `mu`, by peeling horizontal strips for the largest entry.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
    }
    Ok(kostka_rec(lambda.parts(), mu.parts()))
}

fn kostka_rec(shape: &[u32], content: &[u32]) -> u64 {
    if content.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let strip = content[content.len() - 1];
    let rest = &content[..content.len() - 1];
    let mut total = 0u64;
    // Enumerate sub-partitions nu with shape/nu a horizontal strip of the
    // right size: lambda_{i+1} <= nu_i <= lambda_i.
    let k = shape.len();
    let mut nu: Vec<u32> = Vec::with_capacity(k);
    fn rec(
        shape: &[u32],
        i: usize,
        removed: u32,
        strip: u32,
        nu: &mut Vec<u32>,
        rest: &[u32],
        total: &mut u64,
    ) {
        if removed > strip {
            return;
        }
        if i == shape.len() {
            if removed == strip {
                let trimmed: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka_rec(&trimmed, rest);
            }
            return;
        }
        let lo = if i + 1 < shape.len() { shape[i + 1] } else { 0 };
        let hi = shape[i];
        for v in lo..=hi {
            nu.push(v);
            rec(shape, i + 1, removed + (hi - v), strip, nu, rest, total);
            nu.pop();
        }
    }
    rec(shape, 0, 0, strip, &mut nu, rest, &mut total);
    let _ = k;
    total
}

/// Irreducible character of the symmetric group: `chi^lambda` evaluated
/// on cycle type `rho`, by border-strip removal on beta numbers.
pub fn mn_char(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), rho.to_string()));
    }
    Ok(mn_rec(lambda.parts(), rho.parts()))
}

fn mn_rec(lambda: &[u32], rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let r = rho[0] as i64;
    let rest = &rho[1..];
    let k = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let beta_set: BTreeSet<i64> = beta.iter().copied().collect();
    let mut total = 0i64;
    for &b in &beta {
        let target = b - r;
        if target < 0 || beta_set.contains(&target) {
            continue;
        }
        let crossings = beta
            .iter()
            .filter(|&&x| x > target && x < b)
            .count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut new_beta: Vec<i64> = beta
            .iter()
            .map(|&x| if x == b { target } else { x })
            .collect();
        new_beta.sort_unstable_by(|a, c| c.cmp(a));
        let new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (k - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_rec(&new_lambda, rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_normalization_and_order() {
        let p = Partition::new(vec![1, 3, 0, 2]);
        assert_eq!(p.parts(), &[3, 2, 1]);
        let all = partitions_of(4);
        let names: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn dominance_examples() {
        let a = Partition::new(vec![2]);
        let b = Partition::new(vec![1, 1]);
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dim(&Partition::new(vec![5])), BigInt::from(1));
        assert_eq!(hook_dim(&Partition::new(vec![2, 2])), BigInt::from(2));
        assert_eq!(hook_dim(&Partition::new(vec![2, 1])), BigInt::from(2));
        for n in 1..=6 {
            for lam in partitions_of(n) {
                assert_eq!(hook_dim(&lam), syt_count_by_recursion(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn kostka_values() {
        let l21 = Partition::new(vec![2, 1]);
        let l111 = Partition::new(vec![1, 1, 1]);
        let l2 = Partition::new(vec![2]);
        let l11 = Partition::new(vec![1, 1]);
        assert_eq!(kostka(&l21, &l111).unwrap(), 2);
        assert_eq!(kostka(&l21, &l21).unwrap(), 1);
        assert_eq!(kostka(&l11, &l2).unwrap(), 0);
        assert!(kostka(&l2, &l111).is_err());
    }

    #[test]
    fn mn_char_small_table() {
        let l21 = Partition::new(vec![2, 1]);
        assert_eq!(mn_char(&l21, &Partition::new(vec![1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_char(&l21, &Partition::new(vec![2, 1])).unwrap(), 0);
        assert_eq!(mn_char(&l21, &Partition::new(vec![3])).unwrap(), -1);
        // chi^{(n)} is the trivial character.
        for rho in partitions_of(5) {
            assert_eq!(mn_char(&Partition::new(vec![5]), &rho).unwrap(), 1);
        }
        // chi^{(2,2)} on the five classes of size four.
        let l22 = Partition::new(vec![2, 2]);
        let values: Vec<i64> = partitions_of(4)
            .iter()
            .map(|rho| mn_char(&l22, rho).unwrap())
            .collect();
        // Classes in order (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
        assert_eq!(values, vec![0, -1, 2, 0, 2]);
    }

    #[test]
    fn mn_char_orthogonality() {
        for n in 1..=6u32 {
            let parts = partitions_of(n);
            let nf = factorial(n);
            for a in &parts {
                for b in &parts {
                    let mut acc = BigInt::from(0);
                    for rho in &parts {
                        let cs = class_size(rho);
                        let xa = mn_char(a, rho).unwrap();
                        let xb = mn_char(b, rho).unwrap();
                        acc += cs * BigInt::from(xa) * BigInt::from(xb);
                    }
                    let expect = if a == b { nf.clone() } else { BigInt::from(0) };
                    assert_eq!(acc, expect, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=7u32 {
            let total: BigInt = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn first_column_char_is_dimension() {
        for n in 1..=6u32 {
            let ones = Partition::new(vec![1; n as usize]);
            for lam in partitions_of(n) {
                let chi = mn_char(&lam, &ones).unwrap();
                assert_eq!(BigInt::from(chi), hook_dim(&lam), "{lam}");
            }
        }
    }
}
