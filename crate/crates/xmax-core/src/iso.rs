//! Isomorphism testing for small groups: a fast fingerprint mismatch path,
//! then an exhaustive generator-image backtrack that is sound and complete
//! within the isomorphism cap.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::structure;
use crate::table::ElementTable;

/// Generator images witnessing an isomorphism: `gens[i] ↦ images[i]`.
#[derive(Debug, Clone)]
pub struct IsoWitness {
    pub gens: Vec<Permutation>,
    pub images: Vec<Permutation>,
}

fn fingerprint(g: &PermutationGroup) -> Result<Vec<u64>> {
    let t = g.table()?;
    let n = t.len();
    let mut fp = vec![n as u64];
    // element-order histogram
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for i in 0..n as u32 {
        *hist.entry(t.order_of(i)).or_insert(0) += 1;
    }
    for (o, c) in hist {
        fp.push(o);
        fp.push(c);
    }
    // conjugacy-class size multiset
    let mut sizes = element_class_sizes(t, g);
    sizes.sort_unstable();
    fp.push(u64::MAX);
    fp.extend(sizes);
    // derived-series signature
    let full = g.full_subgroup()?;
    let mut gens = full.ids_of_generators();
    let mut cur = n as u64;
    fp.push(u64::MAX);
    loop {
        let next = structure::derived_ids(t, &gens);
        let next_len = next.len() as u64;
        fp.push(next_len);
        if next_len == cur || next_len == 1 {
            break;
        }
        cur = next_len;
        gens = t.small_generating_set(&next);
    }
    // center order
    let center = (0..n as u32)
        .filter(|&x| {
            g.generators()
                .iter()
                .map(|p| t.id_of(p).unwrap())
                .all(|y| t.mul(x, y) == t.mul(y, x))
        })
        .count() as u64;
    fp.push(u64::MAX);
    fp.push(center);
    Ok(fp)
}

fn element_class_sizes(t: &ElementTable, g: &PermutationGroup) -> Vec<u64> {
    let n = t.len();
    let gen_ids: Vec<u32> = g.generators().iter().map(|p| t.id_of(p).unwrap()).collect();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n as u32 {
        if seen[x as usize] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            i += 1;
            for &gid in &gen_ids {
                let c = t.conj(y, gid);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    orbit.push(c);
                }
            }
        }
        sizes.push(orbit.len() as u64);
    }
    sizes
}

/// Exhaustive isomorphism test with generator-image witness. Sound and
/// complete for groups within the isomorphism cap.
pub fn are_isomorphic(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
) -> Result<Option<IsoWitness>> {
    g1.caps().check_iso(g1.order() as u128)?;
    g2.caps().check_iso(g2.order() as u128)?;
    if g1.order() != g2.order() {
        return Ok(None);
    }
    if fingerprint(g1)? != fingerprint(g2)? {
        return Ok(None);
    }
    let t1 = g1.table()?;
    let t2 = g2.table()?;
    let n = t1.len();

    // small generating sequence for g1
    let full = g1.full_subgroup()?;
    let gen_ids = if full.ids_of_generators().is_empty() {
        Vec::new()
    } else {
        t1.small_generating_set(&(0..n as u32).collect::<Vec<_>>())
    };
    if gen_ids.is_empty() {
        // trivial group
        return Ok(Some(IsoWitness {
            gens: vec![],
            images: vec![],
        }));
    }

    // candidate images, filtered by element order
    let orders1: Vec<u64> = (0..n as u32).map(|i| t1.order_of(i)).collect();
    let orders2: Vec<u64> = (0..n as u32).map(|i| t2.order_of(i)).collect();
    let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(gen_ids.len());
    for &gid in &gen_ids {
        let want = orders1[gid as usize];
        candidates.push(
            (0..n as u32)
                .filter(|&x| orders2[x as usize] == want)
                .collect(),
        );
    }

    let mut assignment: Vec<u32> = vec![0; gen_ids.len()];
    if backtrack(t1, t2, &gen_ids, &candidates, &mut assignment, 0, n) {
        let witness = IsoWitness {
            gens: gen_ids.iter().map(|&i| t1.perm(i).clone()).collect(),
            images: assignment.iter().map(|&i| t2.perm(i).clone()).collect(),
        };
        return Ok(Some(witness));
    }
    Ok(None)
}

fn backtrack(
    t1: &ElementTable,
    t2: &ElementTable,
    gen_ids: &[u32],
    candidates: &[Vec<u32>],
    assignment: &mut Vec<u32>,
    depth: usize,
    n: usize,
) -> bool {
    if depth == gen_ids.len() {
        return check_homomorphism(t1, t2, gen_ids, assignment, n);
    }
    for &cand in &candidates[depth] {
        assignment[depth] = cand;
        // prune: the partial map must already be consistent on the subgroup
        // generated so far
        if partial_consistent(t1, t2, &gen_ids[..=depth], &assignment[..=depth], n)
            && backtrack(t1, t2, gen_ids, candidates, assignment, depth + 1, n)
        {
            return true;
        }
    }
    false
}

/// Extends `gens ↦ images` along a breadth-first closure; fails on any
/// conflicting assignment or when the image subgroup is too small at full
/// depth.
fn partial_consistent(
    t1: &ElementTable,
    t2: &ElementTable,
    gen_ids: &[u32],
    images: &[u32],
    n: usize,
) -> bool {
    let mut map: Vec<u32> = vec![u32::MAX; n];
    map[0] = 0;
    let mut known: Vec<u32> = vec![0];
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        i += 1;
        for (&g, &img) in gen_ids.iter().zip(images) {
            let y = t1.mul(x, g);
            let fy = t2.mul(map[x as usize], img);
            if map[y as usize] == u32::MAX {
                map[y as usize] = fy;
                known.push(y);
            } else if map[y as usize] != fy {
                return false;
            }
        }
    }
    // injectivity on the generated subgroup
    let mut seen = vec![false; n];
    for &x in &known {
        let v = map[x as usize] as usize;
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn check_homomorphism(
    t1: &ElementTable,
    t2: &ElementTable,
    gen_ids: &[u32],
    images: &[u32],
    n: usize,
) -> bool {
    // full closure must reach everything (surjectivity via injectivity + size)
    let mut map: Vec<u32> = vec![u32::MAX; n];
    map[0] = 0;
    let mut known: Vec<u32> = vec![0];
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        i += 1;
        for (&g, &img) in gen_ids.iter().zip(images) {
            let y = t1.mul(x, g);
            let fy = t2.mul(map[x as usize], img);
            if map[y as usize] == u32::MAX {
                map[y as usize] = fy;
                known.push(y);
            } else if map[y as usize] != fy {
                return false;
            }
        }
    }
    if known.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for x in 0..n {
        if seen[map[x] as usize] {
            return false;
        }
        seen[map[x] as usize] = true;
    }
    // multiplicativity against every generator suffices: map(x·g) was
    // defined as map(x)·map(g) along the closure, and every element is a
    // word in the generators; verify the Schreier-style relations fully.
    for x in 0..n as u32 {
        for (&g, &img) in gen_ids.iter().zip(images) {
            if map[t1.mul(x, g) as usize] != t2.mul(map[x as usize], img) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn perm(s: &str, d: u32) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn group(gens: &[&str], d: u32, name: &str) -> PermutationGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| perm(s, d)).collect();
        PermutationGroup::from_generators(gens, d, Some(name.into()), &Caps::default()).unwrap()
    }

    #[test]
    fn group_isomorphic_to_itself() {
        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4, "Sym(4)");
        let w = are_isomorphic(&s4, &s4).unwrap().expect("iso to itself");
        assert_eq!(w.gens.len(), w.images.len());
    }

    #[test]
    fn z4_vs_klein() {
        let z4 = group(&["(0 1 2 3)"], 4, "Z(4)");
        let v4 = group(&["(0 1)", "(2 3)"], 4, "V4");
        assert!(are_isomorphic(&z4, &v4).unwrap().is_none());
    }

    #[test]
    fn d8_vs_q8() {
        let d8 = group(&["(0 1 2 3)", "(1 3)"], 4, "D(8)");
        // quaternion group in its regular representation
        let q8 = group(
            &["(0 1 2 3)(4 7 6 5)", "(0 4 2 6)(1 5 3 7)"],
            8,
            "Q(8)",
        );
        assert_eq!(q8.order(), 8);
        // involution counts differ: 5 vs 1
        let count_inv = |g: &PermutationGroup| {
            g.elements()
                .unwrap()
                .iter()
                .filter(|p| p.order() == 2)
                .count()
        };
        assert_eq!(count_inv(&d8), 5);
        assert_eq!(count_inv(&q8), 1);
        assert!(are_isomorphic(&d8, &q8).unwrap().is_none());
    }

    #[test]
    fn positive_nontrivial_isomorphisms() {
        let z6 = group(&["(0 1 2 3 4 5)"], 6, "Z(6)");
        let z2z3 = group(&["(0 1)", "(2 3 4)"], 5, "Z(2)×Z(3)");
        assert!(are_isomorphic(&z6, &z2z3).unwrap().is_some());

        // D12 ≅ Z2 × Sym3
        let d12 = group(&["(0 1 2 3 4 5)", "(1 5)(2 4)"], 6, "D(12)");
        let z2s3 = group(&["(0 1)", "(2 3 4)", "(2 3)"], 5, "Z(2)×Sym(3)");
        assert!(are_isomorphic(&d12, &z2s3).unwrap().is_some());
    }

    #[test]
    fn witness_is_a_homomorphism() {
        let s3 = group(&["(0 1 2)", "(0 1)"], 3, "Sym(3)");
        let s3b = group(&["(1 2 3)", "(2 3)"], 4, "Sym(3)'");
        let w = are_isomorphic(&s3, &s3b).unwrap().expect("isomorphic");
        // spot-check: images satisfy the same relations as the generators
        for (i, g) in w.gens.iter().enumerate() {
            assert_eq!(g.order(), w.images[i].order());
        }
    }

    #[test]
    fn iso_cap_enforced() {
        let caps = Caps {
            iso_cap: 10,
            ..Caps::default()
        };
        let s4a = PermutationGroup::from_generators(
            vec![perm("(0 1 2 3)", 4), perm("(0 1)", 4)],
            4,
            None,
            &caps,
        )
        .unwrap();
        assert!(are_isomorphic(&s4a, &s4a).is_err());
    }
}
