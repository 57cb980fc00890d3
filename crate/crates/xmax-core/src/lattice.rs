//! Whole-lattice computations: enumeration of all subgroups of a small
//! group, conjugacy classes of subgroups, normal and minimal normal
//! subgroups, and composition factors.
//!
//! Enumeration is a breadth-first join closure: start from all cyclic
//! subgroups and repeatedly join pairs, deduplicating by canonical form,
//! until nothing new appears. Every subgroup is a join of cyclic
//! subgroups, so the fixpoint is the complete lattice.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::classes::GroupClassDescriptor;
use crate::error::Result;
use crate::group::{PermutationGroup, Subgroup};
use crate::table::{Bits, ElementTable};

pub(crate) struct SubRec {
    pub elems: Vec<u32>,
    pub bits: Bits,
    pub gens: Vec<u32>,
    pub order: u64,
}

pub(crate) struct ClassRec {
    pub rep: u32,
    pub members: Vec<u32>,
}

/// Scheme of one class descriptor within one subgroup: conjugacy classes of
/// X-maximal members, plus the X-Hall classes (cached by the reduction
/// layer).
pub(crate) struct SchemeData {
    /// (representative subgroup index, class size), sorted by
    /// (order desc, representative index asc).
    pub max_classes: Vec<(u32, u64)>,
    /// Same shape, restricted to Hall subgroups.
    pub hall_classes: Vec<(u32, u64)>,
}

/// Conjugacy partition of the subgroups contained in one fixed subgroup,
/// under conjugation by that subgroup.
pub(crate) struct WithinInfo {
    pub universe: Vec<u32>,
    pub class_of: HashMap<u32, u32>,
    pub classes: Vec<ClassRec>,
}

pub(crate) struct LatticeData {
    pub table: Arc<ElementTable>,
    pub subs: Vec<SubRec>,
    pub by_key: HashMap<Box<[u32]>, u32>,
    pub classes: Vec<ClassRec>,
    pub class_of: Vec<u32>,
    pub normal: Vec<bool>,
    pub minimal_normal: Vec<bool>,
    pub whole: u32,
    // lazy per-subgroup caches
    pub solvable: Vec<OnceLock<bool>>,
    pub nilpotent: Vec<OnceLock<bool>>,
    pub simple: Vec<OnceLock<bool>>,
    pub abelian: Vec<OnceLock<bool>>,
    pub factors: Mutex<HashMap<u32, Arc<Vec<SimpleFactorDescriptor>>>>,
    pub members: Mutex<HashMap<GroupClassDescriptor, Arc<Vec<bool>>>>,
    pub schemes: Mutex<HashMap<(u32, GroupClassDescriptor), Arc<SchemeData>>>,
    pub within: Mutex<HashMap<u32, Arc<WithinInfo>>>,
    pub standalone: Mutex<HashMap<u32, PermutationGroup>>,
}

impl LatticeData {
    fn build(table: Arc<ElementTable>, group_gen_ids: Vec<u32>) -> Self {
        let n = table.len();
        let mut recs: Vec<SubRec> = Vec::new();
        let mut by_key: HashMap<Box<[u32]>, u32> = HashMap::new();

        let push = |recs: &mut Vec<SubRec>,
                        by_key: &mut HashMap<Box<[u32]>, u32>,
                        elems: Vec<u32>,
                        gens: Vec<u32>|
         -> u32 {
            let key: Box<[u32]> = elems.as_slice().into();
            if let Some(&i) = by_key.get(&key) {
                return i;
            }
            let i = recs.len() as u32;
            let bits = Bits::from_sorted(n, &elems);
            recs.push(SubRec {
                order: elems.len() as u64,
                elems,
                bits,
                gens,
            });
            by_key.insert(key, i);
            i
        };

        // seed: all cyclic subgroups (the trivial one comes from element 0)
        for e in 0..n as u32 {
            let elems = table.closure(&[e]);
            let gens = if e == 0 { vec![] } else { vec![e] };
            push(&mut recs, &mut by_key, elems, gens);
        }

        // join closure
        let mut i = 0usize;
        while i < recs.len() {
            for j in 0..i {
                let (small, large) = if recs[i].order <= recs[j].order {
                    (i, j)
                } else {
                    (j, i)
                };
                if recs[small].bits.subset_of(&recs[large].bits) {
                    continue;
                }
                // |⟨A,B⟩| ≥ |A||B|/|A∩B|; a join bigger than n/2 is the whole group
                let inter = recs[i]
                    .bits
                    .intersection_ids(&recs[j].bits)
                    .len() as u64;
                let lower = recs[i].order * recs[j].order / inter;
                let (elems, gens) = if lower > n as u64 / 2 {
                    (
                        (0..n as u32).collect::<Vec<u32>>(),
                        group_gen_ids.clone(),
                    )
                } else {
                    let mut seed: Vec<u32> = recs[i]
                        .gens
                        .iter()
                        .chain(recs[j].gens.iter())
                        .copied()
                        .collect();
                    seed.sort_unstable();
                    seed.dedup();
                    let elems = table.closure(&seed);
                    let gens = table.small_generating_set(&elems);
                    (elems, gens)
                };
                push(&mut recs, &mut by_key, elems, gens);
            }
            i += 1;
        }
        // make sure the whole group is present even for cyclic groups
        push(
            &mut recs,
            &mut by_key,
            (0..n as u32).collect(),
            group_gen_ids.clone(),
        );

        // canonical ordering: by order, then lexicographically on elements
        let mut order_ix: Vec<u32> = (0..recs.len() as u32).collect();
        order_ix.sort_by(|&a, &b| {
            recs[a as usize]
                .order
                .cmp(&recs[b as usize].order)
                .then_with(|| recs[a as usize].elems.cmp(&recs[b as usize].elems))
        });
        let mut subs: Vec<SubRec> = Vec::with_capacity(recs.len());
        let mut remap = vec![0u32; recs.len()];
        for (new_i, &old_i) in order_ix.iter().enumerate() {
            remap[old_i as usize] = new_i as u32;
            subs.push(SubRec {
                elems: std::mem::take(&mut recs[old_i as usize].elems),
                bits: recs[old_i as usize].bits.clone(),
                gens: std::mem::take(&mut recs[old_i as usize].gens),
                order: recs[old_i as usize].order,
            });
        }
        let by_key: HashMap<Box<[u32]>, u32> = by_key
            .into_iter()
            .map(|(k, v)| (k, remap[v as usize]))
            .collect();
        let whole = (subs.len() - 1) as u32;
        debug_assert_eq!(subs[whole as usize].order, n as u64);

        // conjugacy partition under the ambient group
        let conj_maps: Vec<Vec<u32>> = group_gen_ids.iter().map(|&g| table.conj_map(g)).collect();
        let mut class_of = vec![u32::MAX; subs.len()];
        let mut classes: Vec<ClassRec> = Vec::new();
        for s in 0..subs.len() as u32 {
            if class_of[s as usize] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = vec![s];
            class_of[s as usize] = cid;
            let mut k = 0usize;
            while k < members.len() {
                let cur = members[k];
                k += 1;
                for cm in &conj_maps {
                    let mut imgs: Vec<u32> =
                        subs[cur as usize].elems.iter().map(|&x| cm[x as usize]).collect();
                    imgs.sort_unstable();
                    let key: Box<[u32]> = imgs.as_slice().into();
                    let t = *by_key
                        .get(&key)
                        .expect("conjugate of a subgroup is in the complete lattice");
                    if class_of[t as usize] == u32::MAX {
                        class_of[t as usize] = cid;
                        members.push(t);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ClassRec { rep: s, members });
        }

        let normal: Vec<bool> = (0..subs.len())
            .map(|s| classes[class_of[s] as usize].members.len() == 1)
            .collect();
        let minimal_normal: Vec<bool> = (0..subs.len())
            .map(|s| {
                normal[s]
                    && subs[s].order > 1
                    && !(0..subs.len()).any(|t| {
                        t != s
                            && normal[t]
                            && subs[t].order > 1
                            && subs[t].order < subs[s].order
                            && subs[t].bits.subset_of(&subs[s].bits)
                    })
            })
            .collect();

        let count = subs.len();
        LatticeData {
            table,
            subs,
            by_key,
            classes,
            class_of,
            normal,
            minimal_normal,
            whole,
            solvable: (0..count).map(|_| OnceLock::new()).collect(),
            nilpotent: (0..count).map(|_| OnceLock::new()).collect(),
            simple: (0..count).map(|_| OnceLock::new()).collect(),
            abelian: (0..count).map(|_| OnceLock::new()).collect(),
            factors: Mutex::new(HashMap::new()),
            members: Mutex::new(HashMap::new()),
            schemes: Mutex::new(HashMap::new()),
            within: Mutex::new(HashMap::new()),
            standalone: Mutex::new(HashMap::new()),
        }
    }

    pub fn find_ids(&self, sorted_ids: &[u32]) -> Option<u32> {
        let key: Box<[u32]> = sorted_ids.into();
        self.by_key.get(&key).copied()
    }

    pub fn is_solvable(&self, s: u32) -> bool {
        *self.solvable[s as usize].get_or_init(|| {
            crate::structure::is_solvable_ids(
                &self.table,
                &self.subs[s as usize].elems,
                &self.subs[s as usize].gens,
            )
        })
    }

    pub fn is_nilpotent(&self, s: u32) -> bool {
        *self.nilpotent[s as usize].get_or_init(|| {
            crate::structure::is_nilpotent_ids(
                &self.table,
                &self.subs[s as usize].elems,
                &self.subs[s as usize].gens,
            )
        })
    }

    pub fn is_abelian(&self, s: u32) -> bool {
        *self.abelian[s as usize]
            .get_or_init(|| crate::structure::is_abelian_ids(&self.table, &self.subs[s as usize].gens))
    }

    pub fn is_simple(&self, s: u32) -> bool {
        *self.simple[s as usize].get_or_init(|| {
            crate::structure::is_simple_ids(
                &self.table,
                &self.subs[s as usize].elems,
                &self.subs[s as usize].gens,
            )
        })
    }

    /// Subgroups normal inside the subgroup `parent` (invariant under
    /// conjugation by its generators and contained in it).
    pub fn normal_within(&self, parent: u32) -> Vec<u32> {
        let pb = &self.subs[parent as usize].bits;
        let pgens = &self.subs[parent as usize].gens;
        let maps: Vec<Vec<u32>> = pgens.iter().map(|&g| self.table.conj_map(g)).collect();
        (0..self.subs.len() as u32)
            .filter(|&s| {
                if !self.subs[s as usize].bits.subset_of(pb) {
                    return false;
                }
                maps.iter().all(|cm| {
                    self.subs[s as usize]
                        .gens
                        .iter()
                        .all(|&x| self.subs[s as usize].bits.get(cm[x as usize]))
                })
            })
            .collect()
    }

    /// Standalone carrier group for a subgroup (used for recursive
    /// computations on the subgroup as its own ambient group).
    pub fn standalone_group(
        &self,
        ambient: &PermutationGroup,
        s: u32,
    ) -> Result<PermutationGroup> {
        {
            let cache = self.standalone.lock().unwrap();
            if let Some(g) = cache.get(&s) {
                return Ok(g.clone());
            }
        }
        let gens: Vec<crate::perm::Permutation> = self.subs[s as usize]
            .gens
            .iter()
            .map(|&i| self.table.perm(i).clone())
            .collect();
        let g = PermutationGroup::from_generators(
            gens,
            ambient.degree(),
            Some(format!("{}[sub{}]", ambient.display_name(), s)),
            ambient.caps(),
        )?;
        let mut cache = self.standalone.lock().unwrap();
        Ok(cache.entry(s).or_insert(g).clone())
    }

    /// Conjugacy partition of the subgroups of `w` under conjugation by `w`.
    pub fn within_info(&self, w: u32) -> Arc<WithinInfo> {
        {
            let cache = self.within.lock().unwrap();
            if let Some(info) = cache.get(&w) {
                return info.clone();
            }
        }
        let wb = &self.subs[w as usize].bits;
        let universe: Vec<u32> = (0..self.subs.len() as u32)
            .filter(|&s| self.subs[s as usize].bits.subset_of(wb))
            .collect();
        let maps: Vec<Vec<u32>> = self.subs[w as usize]
            .gens
            .iter()
            .map(|&g| self.table.conj_map(g))
            .collect();
        let mut class_of: HashMap<u32, u32> = HashMap::new();
        let mut classes: Vec<ClassRec> = Vec::new();
        for &s in &universe {
            if class_of.contains_key(&s) {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = vec![s];
            class_of.insert(s, cid);
            let mut k = 0;
            while k < members.len() {
                let cur = members[k];
                k += 1;
                for cm in &maps {
                    let mut imgs: Vec<u32> = self.subs[cur as usize]
                        .elems
                        .iter()
                        .map(|&x| cm[x as usize])
                        .collect();
                    imgs.sort_unstable();
                    let t = self
                        .find_ids(&imgs)
                        .expect("conjugate inside subgroup stays in the lattice");
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(t) {
                        e.insert(cid);
                        members.push(t);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ClassRec { rep: s, members });
        }
        let info = Arc::new(WithinInfo {
            universe,
            class_of,
            classes,
        });
        let mut cache = self.within.lock().unwrap();
        cache.entry(w).or_insert_with(|| info.clone());
        cache.get(&w).unwrap().clone()
    }
}

impl PermutationGroup {
    pub(crate) fn lattice_data(&self) -> Result<Arc<LatticeData>> {
        if let Some(l) = self.inner.lattice.get() {
            return Ok(l.clone());
        }
        self.caps().check_lattice(self.inner.order)?;
        let table = self.table()?.clone();
        let gen_ids: Vec<u32> = self
            .generators()
            .iter()
            .map(|g| table.id_of(g).expect("generator id"))
            .collect();
        let data = LatticeData::build(table, gen_ids);
        Ok(self.inner.lattice.get_or_init(|| Arc::new(data)).clone())
    }

    /// The complete subgroup lattice (computed once, then cached).
    pub fn lattice(&self) -> Result<SubgroupLattice> {
        Ok(SubgroupLattice {
            group: self.clone(),
            data: self.lattice_data()?,
        })
    }
}

/// All subgroups of `g`, with conjugacy classes and normality flags.
pub fn all_subgroups(g: &PermutationGroup) -> Result<SubgroupLattice> {
    g.lattice()
}

/// Normal subgroups of `g`, each flagged as minimal normal or not.
pub fn normal_subgroups(g: &PermutationGroup) -> Result<Vec<(Subgroup, bool)>> {
    let lat = g.lattice()?;
    Ok(lat
        .normal_indices()
        .into_iter()
        .map(|i| (lat.subgroup(i), lat.data.minimal_normal[i as usize]))
        .collect())
}

/// A complete, deduplicated subgroup lattice of one group.
#[derive(Clone)]
pub struct SubgroupLattice {
    group: PermutationGroup,
    pub(crate) data: Arc<LatticeData>,
}

impl SubgroupLattice {
    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn subgroup_count(&self) -> usize {
        self.data.subs.len()
    }

    pub fn subgroup(&self, i: u32) -> Subgroup {
        let rec = &self.data.subs[i as usize];
        self.group
            .subgroup_from_ids(rec.elems.clone(), rec.gens.clone())
    }

    pub fn order_of(&self, i: u32) -> u64 {
        self.data.subs[i as usize].order
    }

    pub fn class_count(&self) -> usize {
        self.data.classes.len()
    }

    /// (representative, class size) for every conjugacy class of subgroups.
    pub fn conjugacy_classes(&self) -> Vec<(Subgroup, usize)> {
        self.data
            .classes
            .iter()
            .map(|c| (self.subgroup(c.rep), c.members.len()))
            .collect()
    }

    pub fn class_of(&self, i: u32) -> u32 {
        self.data.class_of[i as usize]
    }

    pub fn is_normal_index(&self, i: u32) -> bool {
        self.data.normal[i as usize]
    }

    pub fn normal_indices(&self) -> Vec<u32> {
        (0..self.data.subs.len() as u32)
            .filter(|&i| self.data.normal[i as usize])
            .collect()
    }

    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.normal_indices()
            .into_iter()
            .map(|i| self.subgroup(i))
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        (0..self.data.subs.len() as u32)
            .filter(|&i| self.data.minimal_normal[i as usize])
            .map(|i| self.subgroup(i))
            .collect()
    }

    /// Inclusion test between subgroup indices.
    pub fn includes(&self, smaller: u32, larger: u32) -> bool {
        self.data.subs[smaller as usize]
            .bits
            .subset_of(&self.data.subs[larger as usize].bits)
    }

    pub fn find(&self, s: &Subgroup) -> Option<u32> {
        self.data.find_ids(s.ids())
    }

    pub fn whole_index(&self) -> u32 {
        self.data.whole
    }

    /// Text dump: one subgroup per line as sorted generator list, class id,
    /// normal flag.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.data.subs.len() as u32 {
            let s = self.subgroup(i);
            let mut gens: Vec<String> = s.generators().iter().map(|p| p.to_string()).collect();
            gens.sort();
            out.push_str(&format!(
                "order={} class={} normal={} gens={}\n",
                s.order(),
                self.data.class_of[i as usize],
                if self.data.normal[i as usize] { 1 } else { 0 },
                gens.join(";")
            ));
        }
        out
    }
}

/// Identification of a simple group by its order, used for composition
/// factors. Identification by order alone is asserted only below
/// [`SIMPLE_ID_BOUND`]; the first nonabelian order collision (20160) lies
/// far above it.
pub const SIMPLE_ID_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleKind {
    CyclicPrime,
    Alternating(u32),
    LinearPsl(u32, u64),
    OtherNamed(String),
    Unidentified,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleFactorDescriptor {
    pub order: u64,
    pub kind: SimpleKind,
}

impl SimpleFactorDescriptor {
    pub fn from_simple_order(order: u64) -> Self {
        if crate::classes::is_prime(order) {
            return SimpleFactorDescriptor {
                order,
                kind: SimpleKind::CyclicPrime,
            };
        }
        let kind = if order >= SIMPLE_ID_BOUND {
            SimpleKind::Unidentified
        } else {
            match order {
                60 => SimpleKind::Alternating(5),
                360 => SimpleKind::Alternating(6),
                2_520 => SimpleKind::Alternating(7),
                168 => SimpleKind::LinearPsl(2, 7),
                504 => SimpleKind::LinearPsl(2, 8),
                660 => SimpleKind::LinearPsl(2, 11),
                1_092 => SimpleKind::LinearPsl(2, 13),
                2_448 => SimpleKind::LinearPsl(2, 17),
                3_420 => SimpleKind::LinearPsl(2, 19),
                4_080 => SimpleKind::LinearPsl(2, 16),
                5_616 => SimpleKind::LinearPsl(3, 3),
                6_072 => SimpleKind::LinearPsl(2, 23),
                7_800 => SimpleKind::LinearPsl(2, 25),
                9_828 => SimpleKind::LinearPsl(2, 27),
                6_048 => SimpleKind::OtherNamed("PSU(3,3)".into()),
                7_920 => SimpleKind::OtherNamed("M(11)".into()),
                _ => SimpleKind::Unidentified,
            }
        };
        SimpleFactorDescriptor { order, kind }
    }
}

impl fmt::Display for SimpleFactorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SimpleKind::CyclicPrime => write!(f, "Z{}", self.order),
            SimpleKind::Alternating(n) => write!(f, "Alt({n})"),
            SimpleKind::LinearPsl(n, q) => write!(f, "PSL({n},{q})"),
            SimpleKind::OtherNamed(s) => f.write_str(s),
            SimpleKind::Unidentified => write!(f, "?{}", self.order),
        }
    }
}

/// Which maximal normal subgroup a composition descent picks when several
/// are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestCanonical,
    LargestCanonical,
}

/// Composition factors as a sorted multiset, by recursive descent: pick a
/// maximal proper normal subgroup `M`, emit the factors of `M` plus the
/// descriptor of the simple quotient `G/M`. The multiset is independent of
/// the choices (Jordan–Hölder); tests recompute with reversed tie-breaking.
pub fn composition_factors(g: &PermutationGroup) -> Result<Vec<SimpleFactorDescriptor>> {
    composition_factors_with(g, TieBreak::SmallestCanonical)
}

pub fn composition_factors_with(
    g: &PermutationGroup,
    tie: TieBreak,
) -> Result<Vec<SimpleFactorDescriptor>> {
    let mut factors = Vec::new();
    descend(g, tie, &mut factors)?;
    factors.sort();
    Ok(factors)
}

fn descend(
    g: &PermutationGroup,
    tie: TieBreak,
    out: &mut Vec<SimpleFactorDescriptor>,
) -> Result<()> {
    if g.order() == 1 {
        return Ok(());
    }
    let lat = g.lattice_data()?;
    let whole = lat.whole;
    let normals: Vec<u32> = (0..lat.subs.len() as u32)
        .filter(|&i| lat.normal[i as usize] && i != whole)
        .collect();
    // maximal proper normal: nothing normal strictly between it and G
    let maximal: Vec<u32> = normals
        .iter()
        .copied()
        .filter(|&m| {
            !normals.iter().any(|&t| {
                t != m
                    && lat.subs[t as usize].order > lat.subs[m as usize].order
                    && lat.subs[m as usize].bits.subset_of(&lat.subs[t as usize].bits)
            })
        })
        .collect();
    let pick = match tie {
        TieBreak::SmallestCanonical => maximal.iter().copied().min(),
        TieBreak::LargestCanonical => maximal.iter().copied().max(),
    }
    .expect("nontrivial group has a maximal proper normal subgroup");
    let m_order = lat.subs[pick as usize].order;
    let quotient_order = g.order() / m_order;
    out.push(SimpleFactorDescriptor::from_simple_order(quotient_order));
    if m_order > 1 {
        let m_group = lat.standalone_group(g, pick)?;
        descend(&m_group, tie, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::perm::Permutation;

    fn perm(s: &str, d: u32) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn group(gens: &[&str], d: u32, name: &str) -> PermutationGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| perm(s, d)).collect();
        PermutationGroup::from_generators(gens, d, Some(name.into()), &Caps::default()).unwrap()
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let t = PermutationGroup::trivial(1, &Caps::default()).unwrap();
        assert_eq!(t.lattice().unwrap().subgroup_count(), 1);
    }

    #[test]
    fn sym3_has_six_subgroups() {
        let s3 = group(&["(0 1 2)", "(0 1)"], 3, "Sym(3)");
        let lat = s3.lattice().unwrap();
        assert_eq!(lat.subgroup_count(), 6);
        // orders: 1, 2, 2, 2, 3, 6
        let mut orders: Vec<u64> = (0..6).map(|i| lat.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(lat.class_count(), 4);
    }

    #[test]
    fn sym4_has_thirty_subgroups() {
        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4, "Sym(4)");
        let lat = s4.lattice().unwrap();
        assert_eq!(lat.subgroup_count(), 30);
        assert_eq!(lat.class_count(), 11);
        // normal subgroups: 1, V4, A4, S4
        let normals: Vec<u64> = lat.normal_subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(normals, vec![1, 4, 12, 24]);
    }

    #[test]
    fn alt3_squared_all_normal() {
        let a3a3 = group(&["(0 1 2)", "(3 4 5)"], 6, "Alt(3)×Alt(3)");
        assert_eq!(a3a3.order(), 9);
        let lat = a3a3.lattice().unwrap();
        // 1, four Z3 subgroups, whole: all normal (abelian)
        assert_eq!(lat.subgroup_count(), 6);
        assert_eq!(lat.normal_subgroups().len(), 6);
    }

    #[test]
    fn simple_group_normals() {
        let a5 = group(&["(0 1 2 3 4)", "(0 1 2)"], 5, "Alt(5)");
        let lat = a5.lattice().unwrap();
        let normals = lat.normal_subgroups();
        assert_eq!(normals.len(), 2);
        let minimal = lat.minimal_normal_subgroups();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 60);
    }

    #[test]
    fn class_sizes_match_normalizer_index() {
        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4, "Sym(4)");
        let lat = s4.lattice().unwrap();
        for (rep, size) in lat.conjugacy_classes() {
            let n = s4.normalizer(&rep).unwrap();
            assert_eq!(size as u64 * n.order(), s4.order());
        }
    }

    #[test]
    fn composition_factors_examples() {
        let a5 = group(&["(0 1 2 3 4)", "(0 1 2)"], 5, "Alt(5)");
        let f = composition_factors(&a5).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].kind, SimpleKind::Alternating(5));

        let s4 = group(&["(0 1 2 3)", "(0 1)"], 4, "Sym(4)");
        let f = composition_factors(&s4).unwrap();
        let orders: Vec<u64> = f.iter().map(|d| d.order).collect();
        assert_eq!(orders, vec![2, 2, 2, 3]);
        assert!(f.iter().take(3).all(|d| d.kind == SimpleKind::CyclicPrime));

        let s5 = group(&["(0 1 2 3 4)", "(0 1)"], 5, "Sym(5)");
        let f = composition_factors(&s5).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].order, 2);
        assert_eq!(f[1].kind, SimpleKind::Alternating(5));
    }

    #[test]
    fn jordan_holder_invariance() {
        for (gens, d, name) in [
            (vec!["(0 1 2 3)", "(0 1)"], 4, "Sym(4)"),
            (vec!["(0 1 2 3 4 5)"], 6, "Z(6)"),
            (vec!["(0 1 2)", "(3 4 5 6 7)", "(3 4 5)"], 8, "A3xA5"),
        ] {
            let g = group(&gens, d, name);
            let a = composition_factors_with(&g, TieBreak::SmallestCanonical).unwrap();
            let b = composition_factors_with(&g, TieBreak::LargestCanonical).unwrap();
            assert_eq!(a, b, "JH multiset differs for {name}");
        }
    }

    #[test]
    fn dump_format() {
        let s3 = group(&["(0 1 2)", "(0 1)"], 3, "Sym(3)");
        let dump = s3.lattice().unwrap().dump();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("order=1 class=0 normal=1"));
        assert!(lines.iter().all(|l| l.contains("gens=")));
        // one line per subgroup: 1, three Z2, A3, S3
        assert_eq!(dump.matches("order=2 ").count(), 3);
        assert_eq!(dump.matches("normal=0").count(), 3);
    }

    #[test]
    fn lattice_cap_enforced() {
        let caps = Caps {
            lattice_cap: 20,
            ..Caps::default()
        };
        let s4 = PermutationGroup::from_generators(
            vec![perm("(0 1 2 3)", 4), perm("(0 1)", 4)],
            4,
            None,
            &caps,
        )
        .unwrap();
        assert!(s4.lattice().is_err());
    }
}
