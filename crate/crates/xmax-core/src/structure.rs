//! Structural predicates and series computations on subgroups: abelian,
//! nilpotent (all Sylow subgroups normal), solvable (derived series),
//! simple, perfect. Everything works on element ids of the ambient table,
//! so a `Subgroup` can be analyzed without rebuilding a carrier group.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::Subgroup;
use crate::table::{Bits, ElementTable};

/// Record of the five structural predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub simple: bool,
    pub perfect: bool,
}

pub(crate) fn is_abelian_ids(table: &ElementTable, gens: &[u32]) -> bool {
    gens.iter()
        .all(|&a| gens.iter().all(|&b| table.mul(a, b) == table.mul(b, a)))
}

/// Normal closure of `seed` inside the subgroup generated by `ambient_gens`.
pub(crate) fn normal_closure_ids(
    table: &ElementTable,
    seed: &[u32],
    ambient_gens: &[u32],
) -> Vec<u32> {
    let mut current: Vec<u32> = table.closure(seed);
    loop {
        let mut new_elems: Vec<u32> = Vec::new();
        let bits = Bits::from_sorted(table.len(), &current);
        for &x in &current {
            for &g in ambient_gens {
                let c = table.conj(x, g);
                if !bits.get(c) {
                    new_elems.push(c);
                }
            }
        }
        if new_elems.is_empty() {
            return current;
        }
        let mut seed2: Vec<u32> = current.clone();
        seed2.extend(new_elems);
        current = table.closure(&seed2);
    }
}

/// Derived subgroup of `⟨gens⟩`: normal closure of generator commutators.
pub(crate) fn derived_ids(table: &ElementTable, gens: &[u32]) -> Vec<u32> {
    let mut comms: Vec<u32> = Vec::new();
    for &a in gens {
        for &b in gens {
            let c = table.mul(
                table.mul(table.inv(a), table.inv(b)),
                table.mul(a, b),
            );
            if c != 0 {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    comms.dedup();
    if comms.is_empty() {
        return vec![0];
    }
    normal_closure_ids(table, &comms, gens)
}

pub(crate) fn is_solvable_ids(table: &ElementTable, elems: &[u32], gens: &[u32]) -> bool {
    let mut cur_elems = elems.to_vec();
    let mut cur_gens = gens.to_vec();
    loop {
        if cur_elems.len() == 1 {
            return true;
        }
        let next = derived_ids(table, &cur_gens);
        if next.len() == cur_elems.len() {
            return false;
        }
        cur_gens = table.small_generating_set(&next);
        cur_elems = next;
    }
}

pub(crate) fn is_perfect_ids(table: &ElementTable, elems: &[u32], gens: &[u32]) -> bool {
    elems.len() > 1 && derived_ids(table, gens).len() == elems.len()
}

/// A Sylow `p`-subgroup of the subgroup with the given elements, grown by
/// the standard normalizer argument: while `|P|` is short of the full
/// `p`-part, `N_H(P)` contains a `p`-element extending `P` to a larger
/// `p`-subgroup.
pub(crate) fn sylow_ids(table: &ElementTable, elems: &[u32], p: u64) -> Vec<u32> {
    let mut target = 1u64;
    let h_order = elems.len() as u64;
    {
        let mut m = h_order;
        while m.is_multiple_of(p) {
            m /= p;
            target *= p;
        }
    }
    let mut p_elems: Vec<u32> = vec![0];
    let mut p_gens: Vec<u32> = Vec::new();
    while (p_elems.len() as u64) < target {
        let pbits = Bits::from_sorted(table.len(), &p_elems);
        // scan N_H(P) for a p-element extending P to a p-group
        let mut extended = false;
        for &x in elems {
            if pbits.get(x) {
                continue;
            }
            let ord = table.order_of(x);
            if !is_prime_power_of(ord, p) {
                continue;
            }
            let normalizes = p_gens.iter().all(|&t| pbits.get(table.conj(t, x)));
            if !normalizes {
                continue;
            }
            let mut seed = p_gens.clone();
            seed.push(x);
            let candidate = table.closure(&seed);
            if is_power_of(candidate.len() as u64, p) {
                p_gens = seed;
                p_elems = candidate;
                extended = true;
                break;
            }
        }
        assert!(extended, "Sylow growth stalled below the p-part");
    }
    p_elems
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn is_prime_power_of(n: u64, p: u64) -> bool {
    n > 1 && is_power_of(n, p)
}

pub(crate) fn is_nilpotent_ids(table: &ElementTable, elems: &[u32], gens: &[u32]) -> bool {
    let order = elems.len() as u64;
    for p in crate::classes::prime_factors(order) {
        let syl = sylow_ids(table, elems, p);
        let sbits = Bits::from_sorted(table.len(), &syl);
        let sgens = table.small_generating_set(&syl);
        let normal = gens
            .iter()
            .all(|&g| sgens.iter().all(|&x| sbits.get(table.conj(x, g))));
        if !normal {
            return false;
        }
    }
    true
}

/// Simplicity by normal closures: `H` is simple iff `H ≠ 1` and the normal
/// closure of every nontrivial element is all of `H`. One representative
/// per conjugacy class of elements suffices.
pub(crate) fn is_simple_ids(table: &ElementTable, elems: &[u32], gens: &[u32]) -> bool {
    if elems.len() == 1 {
        return false;
    }
    let ebits = Bits::from_sorted(table.len(), elems);
    let mut seen = Bits::new(table.len());
    for &x in elems {
        if x == 0 || seen.get(x) {
            continue;
        }
        // mark the H-conjugacy class of x
        let mut orbit = vec![x];
        seen.set(x);
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            i += 1;
            for &g in gens {
                let c = table.conj(y, g);
                debug_assert!(ebits.get(c));
                if !seen.get(c) {
                    seen.set(c);
                    orbit.push(c);
                }
            }
        }
        if normal_closure_ids(table, &[x], gens).len() != elems.len() {
            return false;
        }
    }
    true
}

/// Structural predicates for a subgroup.
pub fn structure_predicates(h: &Subgroup) -> Result<StructureReport> {
    let table = h.ambient().table()?;
    let elems = h.ids();
    let gens: Vec<u32> = h.ids_of_generators();
    Ok(StructureReport {
        abelian: is_abelian_ids(table, &gens),
        nilpotent: is_nilpotent_ids(table, elems, &gens),
        solvable: is_solvable_ids(table, elems, &gens),
        simple: is_simple_ids(table, elems, &gens),
        perfect: is_perfect_ids(table, elems, &gens),
    })
}

/// Derived subgroup `[H, H]` of a subgroup.
pub fn derived_subgroup_of(h: &Subgroup) -> Result<Subgroup> {
    let table = h.ambient().table()?;
    let gens = h.ids_of_generators();
    let ids = derived_ids(table, &gens);
    let small = table.small_generating_set(&ids);
    Ok(h.ambient().subgroup_from_ids(ids, small))
}

/// A Sylow `p`-subgroup of `h`.
pub fn sylow_subgroup(h: &Subgroup, p: u64) -> Result<Subgroup> {
    let table = h.ambient().table()?;
    let ids = sylow_ids(table, h.ids(), p);
    let gens = table.small_generating_set(&ids);
    Ok(h.ambient().subgroup_from_ids(ids, gens))
}

impl Subgroup {
    pub(crate) fn ids_of_generators(&self) -> Vec<u32> {
        self.gen_ids.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::group::PermutationGroup;
    use crate::perm::Permutation;

    fn perm(s: &str, d: u32) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn group(gens: &[&str], d: u32) -> PermutationGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| perm(s, d)).collect();
        PermutationGroup::from_generators(gens, d, None, &Caps::default()).unwrap()
    }

    #[test]
    fn z6_predicates() {
        let z6 = group(&["(0 1 2 3 4 5)"], 6);
        let r = structure_predicates(&z6.full_subgroup().unwrap()).unwrap();
        assert!(r.abelian && r.nilpotent && r.solvable);
        assert!(!r.simple && !r.perfect);
    }

    #[test]
    fn sym3_solvable_not_nilpotent() {
        let s3 = group(&["(0 1 2)", "(0 1)"], 3);
        let r = structure_predicates(&s3.full_subgroup().unwrap()).unwrap();
        assert!(r.solvable && !r.nilpotent && !r.abelian && !r.simple);
    }

    #[test]
    fn alt5_simple_perfect_not_solvable() {
        let a5 = group(&["(0 1 2 3 4)", "(0 1 2)"], 5);
        let r = structure_predicates(&a5.full_subgroup().unwrap()).unwrap();
        assert!(r.simple && r.perfect && !r.solvable && !r.nilpotent);
    }

    #[test]
    fn derived_series_of_sym4() {
        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4);
        let d1 = s4.derived_subgroup().unwrap();
        assert_eq!(d1.order(), 12); // Alt4
        let d2 = derived_subgroup_of(&d1).unwrap();
        assert_eq!(d2.order(), 4); // Klein four
        let d3 = derived_subgroup_of(&d2).unwrap();
        assert_eq!(d3.order(), 1);
    }

    #[test]
    fn sylow_subgroups_of_sym4() {
        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4);
        let full = s4.full_subgroup().unwrap();
        assert_eq!(sylow_subgroup(&full, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&full, 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&full, 5).unwrap().order(), 1);
    }

    #[test]
    fn quaternion_style_nilpotent() {
        // D8 is nilpotent (it is a 2-group)
        let d8 = group(&["(0 1 2 3)", "(1 3)"], 4);
        assert_eq!(d8.order(), 8);
        let r = structure_predicates(&d8.full_subgroup().unwrap()).unwrap();
        assert!(r.nilpotent && !r.abelian);
    }
}
