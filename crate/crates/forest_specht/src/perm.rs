//! Permutations of `{0, .., n-1}` in one-line form, plus the block
//! (Young) subgroups spanned by row and column stabilizers.

use std::collections::HashMap;

use crate::partition::Partition;

/// A permutation in one-line form: `p[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n as u8).collect(),
        }
    }

    pub fn from_one_line(map: Vec<u8>) -> Self {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&v| {
                let ok = (v as usize) < map.len() && !seen[v as usize];
                if ok {
                    seen[v as usize] = true;
                }
                ok
            })
        });
        Perm { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn one_line(&self) -> &[u8] {
        &self.map
    }

    /// Composition `self . other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            map: other.map.iter().map(|&i| self.map[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm { map: inv }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut map: Vec<u8> = (0..n as u8).collect();
        map.swap(i, j);
        Perm { map }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.n()];
        let mut sign = 1i64;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.apply(v);
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.apply(v);
                len += 1;
            }
            lens.push(len);
        }
        Partition::new(lens)
    }

    /// A representative with the given cycle type, built from consecutive
    /// blocks.
    pub fn with_cycle_type(rho: &Partition) -> Perm {
        let n: u32 = rho.size();
        let mut map: Vec<u8> = (0..n as u8).collect();
        let mut start = 0usize;
        for &part in rho.parts() {
            let part = part as usize;
            for k in 0..part {
                map[start + k] = (start + (k + 1) % part) as u8;
            }
            start += part;
        }
        Perm { map }
    }
}

/// All permutations that permute positions within each block and fix
/// everything else. Blocks must be disjoint.
pub fn block_subgroup(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut result = vec![Perm::identity(n)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let mut next = Vec::with_capacity(result.len() * factorial_usize(block.len()));
        permute_block(block, &mut |images| {
            for base in &result {
                let mut map = base.map.clone();
                for (k, &pos) in block.iter().enumerate() {
                    map[pos] = base.map[images[k]];
                }
                next.push(Perm { map });
            }
        });
        result = next;
    }
    result
}

fn factorial_usize(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

fn permute_block(block: &[usize], f: &mut impl FnMut(&[usize])) {
    let mut items = block.to_vec();
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, f);
}

/// Sparse group-algebra element over the integers: a finite sum of
/// permutations with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub n: usize,
    pub terms: HashMap<Perm, i64>,
}

impl GroupAlgebraElement {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Perm) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_sign() {
        let s01 = Perm::transposition(3, 0, 1);
        let s12 = Perm::transposition(3, 1, 2);
        let c = s01.compose(&s12); // first swap 1,2 then 0,1
        assert_eq!(c.one_line(), &[1, 2, 0]);
        assert_eq!(c.sign(), 1);
        assert_eq!(s01.sign(), -1);
        assert_eq!(c.compose(&c.inverse()), Perm::identity(3));
    }

    #[test]
    fn cycle_types() {
        let p = Perm::with_cycle_type(&Partition::new(vec![3, 1]));
        assert_eq!(p.cycle_type(), Partition::new(vec![3, 1]));
        assert_eq!(Perm::identity(4).cycle_type(), Partition::new(vec![1; 4]));
    }

    #[test]
    fn block_subgroup_sizes() {
        let g = block_subgroup(4, &[vec![0, 1], vec![2, 3]]);
        assert_eq!(g.len(), 4);
        let g = block_subgroup(4, &[vec![0, 1, 2, 3]]);
        assert_eq!(g.len(), 24);
        let g = block_subgroup(4, &[vec![1]]);
        assert_eq!(g.len(), 1);
    }
}
