//! Materialized element set of a small group, with O(1) arithmetic through
//! a Cayley table. Elements are indexed in lexicographic order of their
//! image arrays, so index 0 is always the identity and sorted index lists
//! compare the same way as sorted lists of image arrays.

use std::collections::HashMap;

use crate::perm::Permutation;

/// Cayley tables are built only up to this many elements; beyond it,
/// products fall back to permutation composition plus a hash lookup.
const CAYLEY_MAX: usize = 2_600;

pub(crate) struct ElementTable {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inv: Vec<u32>,
    cayley: Option<Vec<u32>>,
    n: usize,
}

impl ElementTable {
    /// Enumerates the closure of `generators` (breadth-first), then indexes
    /// it lexicographically. `limit` aborts enumeration when exceeded.
    pub fn build(generators: &[Permutation], degree: u32, limit: u64) -> Option<ElementTable> {
        let mut elems: Vec<Permutation> = vec![Permutation::identity(degree)];
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(elems[0].clone(), ());
        let mut frontier = 0usize;
        while frontier < elems.len() {
            let cur = elems[frontier].clone();
            frontier += 1;
            for g in generators {
                let next = cur.compose(g);
                if !seen.contains_key(&next) {
                    if elems.len() as u64 >= limit {
                        return None;
                    }
                    seen.insert(next.clone(), ());
                    elems.push(next);
                }
            }
        }
        elems.sort_unstable();
        let n = elems.len();
        let index: HashMap<Permutation, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inv: Vec<u32> = elems.iter().map(|p| index[&p.inverse()]).collect();
        let cayley = if n <= CAYLEY_MAX {
            let mut t = vec![0u32; n * n];
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    t[i * n + j] = index[&a.compose(b)];
                }
            }
            Some(t)
        } else {
            None
        };
        Some(ElementTable {
            perms: elems,
            index,
            inv,
            cayley,
            n,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn perm(&self, i: u32) -> &Permutation {
        &self.perms[i as usize]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// `a` followed by `b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.cayley {
            Some(t) => t[a as usize * self.n + b as usize],
            None => self.index[&self.perms[a as usize].compose(&self.perms[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g⁻¹ · x · g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn order_of(&self, a: u32) -> u64 {
        self.perms[a as usize].order()
    }

    /// Full conjugation map `x ↦ g⁻¹xg` as a table over element ids.
    pub fn conj_map(&self, g: u32) -> Vec<u32> {
        let gi = self.inv(g);
        (0..self.n as u32)
            .map(|x| self.mul(self.mul(gi, x), g))
            .collect()
    }

    /// Closure of `seed` ids under multiplication; returns sorted ids.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut bits = Bits::new(self.n);
        let mut out = vec![0u32];
        bits.set(0);
        for &s in seed {
            if !bits.get(s) {
                bits.set(s);
                out.push(s);
            }
        }
        // multiply every known element by every generator until stable
        let mut frontier = 0usize;
        while frontier < out.len() {
            let x = out[frontier];
            frontier += 1;
            for &g in seed {
                let y = self.mul(x, g);
                if !bits.get(y) {
                    bits.set(y);
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A small generating sequence for the subgroup with the given sorted
    /// element ids (greedy: add elements not yet generated).
    pub fn small_generating_set(&self, elems: &[u32]) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut have = vec![0u32];
        for &e in elems {
            if e == 0 {
                continue;
            }
            if have.binary_search(&e).is_err() {
                gens.push(e);
                have = self.closure(&gens);
                if have.len() == elems.len() {
                    break;
                }
            }
        }
        gens
    }
}

/// Minimal fixed-size bitset.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_sorted(n: usize, ids: &[u32]) -> Self {
        let mut b = Bits::new(n);
        for &i in ids {
            b.set(i);
        }
        b
    }

    #[inline]
    pub fn set(&mut self, i: u32) {
        self.words[i as usize >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn get(&self, i: u32) -> bool {
        self.words[i as usize >> 6] >> (i & 63) & 1 == 1
    }

    /// True when every bit of `self` is also set in `other`.
    pub fn subset_of(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_ids(&self, other: &Bits) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let mut bits = a & b;
            while bits != 0 {
                let t = bits.trailing_zeros();
                out.push((w as u32) << 6 | t);
                bits &= bits - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: u32) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn builds_sym3() {
        let t = ElementTable::build(&[perm("(0 1)", 3), perm("(0 1 2)", 3)], 3, 100).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.perm(0).is_identity());
        // closure of a 3-cycle has order 3
        let c3 = t.id_of(&perm("(0 1 2)", 3)).unwrap();
        assert_eq!(t.closure(&[c3]).len(), 3);
    }

    #[test]
    fn mul_matches_composition() {
        let t = ElementTable::build(&[perm("(0 1)", 4), perm("(0 1 2 3)", 4)], 4, 100).unwrap();
        for a in 0..t.len() as u32 {
            for b in 0..t.len() as u32 {
                let via_table = t.perm(t.mul(a, b)).clone();
                let direct = t.perm(a).compose(t.perm(b));
                assert_eq!(via_table, direct);
            }
        }
    }

    #[test]
    fn respects_limit() {
        assert!(ElementTable::build(&[perm("(0 1)", 4), perm("(0 1 2 3)", 4)], 4, 10).is_none());
    }

    #[test]
    fn small_generating_set_regenerates() {
        let t = ElementTable::build(&[perm("(0 1)", 4), perm("(0 1 2 3)", 4)], 4, 100).unwrap();
        let all: Vec<u32> = (0..t.len() as u32).collect();
        let gens = t.small_generating_set(&all);
        assert_eq!(t.closure(&gens).len(), 24);
        assert!(gens.len() <= 5);
    }

    #[test]
    fn bits_ops() {
        let a = Bits::from_sorted(100, &[1, 5, 64]);
        let b = Bits::from_sorted(100, &[1, 5, 7, 64, 99]);
        assert!(a.subset_of(&b));
        assert!(!b.subset_of(&a));
        assert_eq!(a.intersection_ids(&b), vec![1, 5, 64]);
    }
}
