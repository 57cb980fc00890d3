//! Permutation groups, subgroups and epimorphisms.
//!
//! A [`PermutationGroup`] is an immutable handle (cheap to clone) around a
//! generating set, an exact order computed at construction via a stabilizer
//! chain, and lazily materialized caches: the element table, the subgroup
//! lattice and quotients. All caches are write-once or mutex-guarded, so
//! shared handles are safe to use from several threads.
//!
//! A [`Subgroup`] stores its sorted element-id list relative to the ambient
//! group's element table; since table ids are assigned in lexicographic
//! order of image arrays, the id list is a canonical form usable for
//! deduplication and deterministic tie-breaking.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bsgs::Bsgs;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::LatticeData;
use crate::perm::Permutation;
use crate::table::{Bits, ElementTable};

/// Cached quotient: the codomain group and the element map.
type QuotientEntry = (PermutationGroup, Arc<Vec<u32>>);

pub(crate) struct GroupInner {
    pub degree: u32,
    pub generators: Vec<Permutation>,
    pub name: Option<String>,
    pub caps: Caps,
    pub order: u128,
    pub bsgs: Bsgs,
    pub table: OnceLock<Arc<ElementTable>>,
    pub lattice: OnceLock<Arc<LatticeData>>,
    /// Quotient cache keyed by the kernel's sorted element ids.
    pub quotients: Mutex<HashMap<Box<[u32]>, QuotientEntry>>,
}

/// A finite permutation group on `{0, …, degree−1}`.
#[derive(Clone)]
pub struct PermutationGroup {
    pub(crate) inner: Arc<GroupInner>,
}

impl std::fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermutationGroup(name={:?}, degree={}, order={})",
            self.inner.name, self.inner.degree, self.inner.order
        )
    }
}

impl PermutationGroup {
    /// Builds the group generated by `generators` on `degree` points.
    /// The order is computed exactly; construction fails if it exceeds
    /// the order cap or if a generator has the wrong degree.
    pub fn from_generators(
        generators: Vec<Permutation>,
        degree: u32,
        name: Option<String>,
        caps: &Caps,
    ) -> Result<Self> {
        caps.check_degree(degree as u64)?;
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        let bsgs = Bsgs::new(&generators, degree);
        let order = bsgs.order();
        caps.check_order(order)?;
        Ok(PermutationGroup {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                name,
                caps: *caps,
                order,
                bsgs,
                table: OnceLock::new(),
                lattice: OnceLock::new(),
                quotients: Mutex::new(HashMap::new()),
            }),
        })
    }

    pub fn trivial(degree: u32, caps: &Caps) -> Result<Self> {
        Self::from_generators(Vec::new(), degree, None, caps)
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn order(&self) -> u64 {
        u64::try_from(self.inner.order).expect("group order exceeds u64")
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        match &self.inner.name {
            Some(n) => n.clone(),
            None => format!("<order-{} group on {} points>", self.order(), self.degree()),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.inner.caps
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.inner.degree {
            return false;
        }
        if let Some(t) = self.inner.table.get() {
            return t.id_of(p).is_some();
        }
        self.inner.bsgs.contains(p)
    }

    /// The materialized element table; errors when the order exceeds the
    /// element cap.
    pub(crate) fn table(&self) -> Result<&Arc<ElementTable>> {
        if let Some(t) = self.inner.table.get() {
            return Ok(t);
        }
        self.inner.caps.check_elements(self.inner.order)?;
        let t = ElementTable::build(
            &self.inner.generators,
            self.inner.degree,
            self.inner.caps.element_cap,
        )
        .expect("closure within checked cap");
        debug_assert_eq!(t.len() as u128, self.inner.order);
        Ok(self.inner.table.get_or_init(|| Arc::new(t)))
    }

    /// All elements, materialized under the element cap.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(self.table()?.perms())
    }

    pub(crate) fn same_group(&self, other: &PermutationGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    fn sorted_gen_ids(&self, ids: &[u32]) -> Vec<u32> {
        let mut v = ids.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub(crate) fn subgroup_from_ids(&self, mut elem_ids: Vec<u32>, gen_ids: Vec<u32>) -> Subgroup {
        elem_ids.sort_unstable();
        elem_ids.dedup();
        Subgroup {
            ambient: self.clone(),
            elem_ids: Arc::new(elem_ids),
            gen_ids: Arc::new(self.sorted_gen_ids(&gen_ids)),
        }
    }

    /// Smallest subgroup containing `seed`; errors if a seed element lies
    /// outside the group.
    pub fn subgroup_generated(&self, seed: &[Permutation]) -> Result<Subgroup> {
        let table = self.table()?;
        let mut ids = Vec::with_capacity(seed.len());
        for p in seed {
            match table.id_of(p) {
                Some(i) => ids.push(i),
                None => return Err(Error::NotAMember(p.to_string())),
            }
        }
        ids.retain(|&i| i != 0);
        let elems = table.closure(&ids);
        let gens = table.small_generating_set(&elems);
        Ok(self.subgroup_from_ids(elems, gens))
    }

    /// Subgroup from an explicit element list; verifies closure.
    pub fn subgroup_from_elements(&self, elems: &[Permutation]) -> Result<Subgroup> {
        let table = self.table()?;
        let mut ids = Vec::with_capacity(elems.len());
        for p in elems {
            match table.id_of(p) {
                Some(i) => ids.push(i),
                None => return Err(Error::NotAMember(p.to_string())),
            }
        }
        ids.sort_unstable();
        ids.dedup();
        let gens = table.small_generating_set(&ids);
        let closed = table.closure(&gens);
        if closed != ids {
            return Err(Error::Parse(
                "element list is not closed under composition".into(),
            ));
        }
        Ok(self.subgroup_from_ids(ids, gens))
    }

    pub fn trivial_subgroup(&self) -> Result<Subgroup> {
        self.table()?;
        Ok(self.subgroup_from_ids(vec![0], vec![]))
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Result<Subgroup> {
        let table = self.table()?;
        let ids: Vec<u32> = (0..table.len() as u32).collect();
        let gens: Vec<u32> = self
            .inner
            .generators
            .iter()
            .map(|g| table.id_of(g).expect("generator in own table"))
            .collect();
        Ok(self.subgroup_from_ids(ids, gens))
    }

    /// Exact conjugacy test; returns a witness `g` with `H^g = K` when the
    /// subgroups are conjugate. Pruned by order, element-order histogram and
    /// cycle-type multiset, then resolved by a full transversal scan.
    pub fn are_conjugate(&self, h: &Subgroup, k: &Subgroup) -> Result<Option<Permutation>> {
        self.check_own_subgroup(h)?;
        self.check_own_subgroup(k)?;
        let table = self.table()?;
        if h.elem_ids == k.elem_ids {
            return Ok(Some(Permutation::identity(self.degree())));
        }
        if h.order() != k.order() {
            return Ok(None);
        }
        let fingerprint = |s: &Subgroup| {
            let mut orders: Vec<u64> = s.elem_ids.iter().map(|&i| table.order_of(i)).collect();
            orders.sort_unstable();
            let mut types: Vec<Vec<u32>> = s
                .elem_ids
                .iter()
                .map(|&i| table.perm(i).cycle_type())
                .collect();
            types.sort_unstable();
            (orders, types)
        };
        if fingerprint(h) != fingerprint(k) {
            return Ok(None);
        }
        let kbits = Bits::from_sorted(table.len(), &k.elem_ids);
        for g in 0..table.len() as u32 {
            if h.gen_ids.iter().all(|&x| kbits.get(table.conj(x, g))) {
                return Ok(Some(table.perm(g).clone()));
            }
        }
        Ok(None)
    }

    /// `N_G(H)`, by an element-wise scan.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_own_subgroup(h)?;
        let table = self.table()?;
        let hbits = Bits::from_sorted(table.len(), &h.elem_ids);
        let ids: Vec<u32> = (0..table.len() as u32)
            .filter(|&g| h.gen_ids.iter().all(|&x| hbits.get(table.conj(x, g))))
            .collect();
        let gens = table.small_generating_set(&ids);
        Ok(self.subgroup_from_ids(ids, gens))
    }

    /// `C_G(S)`: elements commuting with every element of `S`.
    pub fn centralizer(&self, s: &Subgroup) -> Result<Subgroup> {
        self.check_own_subgroup(s)?;
        let table = self.table()?;
        let ids: Vec<u32> = (0..table.len() as u32)
            .filter(|&g| s.gen_ids.iter().all(|&x| table.mul(g, x) == table.mul(x, g)))
            .collect();
        let gens = table.small_generating_set(&ids);
        Ok(self.subgroup_from_ids(ids, gens))
    }

    fn check_own_subgroup(&self, s: &Subgroup) -> Result<()> {
        if !self.same_group(&s.ambient) {
            return Err(Error::NotAMember(
                "subgroup belongs to a different ambient group".into(),
            ));
        }
        Ok(())
    }

    /// Quotient `G/N` realized by the right-coset action, together with the
    /// canonical epimorphism. When `N` is trivial the group itself is
    /// returned with the identity map (an isomorphic copy, avoiding the
    /// degree-|G| regular action).
    pub fn quotient_by(&self, n: &Subgroup) -> Result<(PermutationGroup, Epimorphism)> {
        self.check_own_subgroup(n)?;
        if !n.is_normal()? {
            return Err(Error::NotNormal);
        }
        let table = self.table()?.clone();
        let key: Box<[u32]> = n.elem_ids.as_slice().into();
        {
            let cache = self.inner.quotients.lock().unwrap();
            if let Some((q, map)) = cache.get(&key) {
                return Ok((
                    q.clone(),
                    Epimorphism {
                        domain: self.clone(),
                        codomain: q.clone(),
                        map: map.clone(),
                        kernel: n.clone(),
                    },
                ));
            }
        }

        let (q, map) = if n.order() == 1 {
            let map: Vec<u32> = (0..table.len() as u32).collect();
            (self.clone(), Arc::new(map))
        } else {
            let index = self.order() / n.order();
            self.inner.caps.check_degree(index)?;
            let ncount = table.len();
            // enumerate right cosets N·x in ascending order of minimal element
            let mut coset_of = vec![u32::MAX; ncount];
            let mut reps: Vec<u32> = Vec::with_capacity(index as usize);
            for x in 0..ncount as u32 {
                if coset_of[x as usize] != u32::MAX {
                    continue;
                }
                let c = reps.len() as u32;
                reps.push(x);
                for &nn in n.elem_ids.iter() {
                    coset_of[table.mul(nn, x) as usize] = c;
                }
            }
            debug_assert_eq!(reps.len() as u64, index);
            let act = |x: u32| -> Permutation {
                let images: Vec<u32> = reps
                    .iter()
                    .map(|&r| coset_of[table.mul(r, x) as usize])
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            };
            let qgens: Vec<Permutation> = self
                .inner
                .generators
                .iter()
                .map(|g| act(table.id_of(g).expect("generator id")))
                .collect();
            let qname = format!("{}/N{}", self.display_name(), n.order());
            let q = PermutationGroup::from_generators(
                qgens,
                reps.len() as u32,
                Some(qname),
                &self.inner.caps,
            )?;
            if q.order() != index {
                return Err(Error::TheoremViolation(format!(
                    "coset action of quotient has order {} instead of index {}",
                    q.order(),
                    index
                )));
            }
            let qtable = q.table()?;
            let map: Vec<u32> = (0..ncount as u32)
                .map(|x| qtable.id_of(&act(x)).expect("image lies in quotient"))
                .collect();
            (q, Arc::new(map))
        };

        let mut cache = self.inner.quotients.lock().unwrap();
        let entry = cache.entry(key).or_insert_with(|| (q.clone(), map.clone()));
        let (q, map) = (entry.0.clone(), entry.1.clone());
        drop(cache);
        Ok((
            q.clone(),
            Epimorphism {
                domain: self.clone(),
                codomain: q,
                map,
                kernel: n.clone(),
            },
        ))
    }

    /// Derived subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> Result<Subgroup> {
        let full = self.full_subgroup()?;
        crate::structure::derived_subgroup_of(&full)
    }
}

/// Direct product `G1 × G2` on the disjoint union of the two domains,
/// with the canonical factor embeddings.
pub struct DirectProduct {
    pub group: PermutationGroup,
    left_degree: u32,
    right_degree: u32,
    left_gens: Vec<Permutation>,
    right_gens: Vec<Permutation>,
}

impl DirectProduct {
    pub fn embed_left(&self, p: &Permutation) -> Permutation {
        let mut images: Vec<u32> = p.images().to_vec();
        images.extend(self.left_degree..self.left_degree + self.right_degree);
        Permutation::from_images(images).expect("embedding is a permutation")
    }

    pub fn embed_right(&self, p: &Permutation) -> Permutation {
        let mut images: Vec<u32> = (0..self.left_degree).collect();
        images.extend(p.images().iter().map(|&x| x + self.left_degree));
        Permutation::from_images(images).expect("embedding is a permutation")
    }

    /// `G1 × 1` as a subgroup of the product (requires materialization).
    pub fn left_factor(&self) -> Result<Subgroup> {
        self.group.subgroup_generated(&self.left_gens)
    }

    /// `1 × G2` as a subgroup of the product.
    pub fn right_factor(&self) -> Result<Subgroup> {
        self.group.subgroup_generated(&self.right_gens)
    }
}

/// Builds `G1 × G2`; the combined degree must stay under the degree cap.
pub fn direct_product(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
    caps: &Caps,
) -> Result<DirectProduct> {
    let d1 = g1.degree();
    let d2 = g2.degree();
    caps.check_degree(d1 as u64 + d2 as u64)?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut left_gens = Vec::new();
    let mut right_gens = Vec::new();
    for g in g1.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(d1..d1 + d2);
        let p = Permutation::from_images(images)?;
        gens.push(p.clone());
        left_gens.push(p);
    }
    for g in g2.generators() {
        let mut images: Vec<u32> = (0..d1).collect();
        images.extend(g.images().iter().map(|&x| x + d1));
        let p = Permutation::from_images(images)?;
        gens.push(p.clone());
        right_gens.push(p);
    }
    let name = format!("{}×{}", g1.display_name(), g2.display_name());
    let group = PermutationGroup::from_generators(gens, d1 + d2, Some(name), caps)?;
    debug_assert_eq!(group.order(), g1.order() * g2.order());
    Ok(DirectProduct {
        group,
        left_degree: d1,
        right_degree: d2,
        left_gens,
        right_gens,
    })
}

/// The group `Aut_H(S)` of `H`-induced automorphisms of `S`, realized
/// faithfully as permutations of `S`'s sorted element list. Its order is
/// `|N_H(S)| / |C_{N_H(S)}(S)|`.
pub fn induced_automorphism_group(h: &Subgroup, s: &Subgroup) -> Result<PermutationGroup> {
    if !h.ambient.same_group(&s.ambient) {
        return Err(Error::NotAMember(
            "subgroups live in different ambient groups".into(),
        ));
    }
    let g = &h.ambient;
    let table = g.table()?;
    let sbits = Bits::from_sorted(table.len(), &s.elem_ids);
    // N_H(S)
    let nh_ids: Vec<u32> = h
        .elem_ids
        .iter()
        .copied()
        .filter(|&x| s.gen_ids.iter().all(|&t| sbits.get(table.conj(t, x))))
        .collect();
    // C_{N_H(S)}(S)
    let c_count = nh_ids
        .iter()
        .filter(|&&x| {
            s.gen_ids
                .iter()
                .all(|&t| table.mul(x, t) == table.mul(t, x))
        })
        .count() as u64;
    let m = s.elem_ids.len() as u32;
    let induced = |x: u32| -> Permutation {
        let images: Vec<u32> = s
            .elem_ids
            .iter()
            .map(|&t| {
                let image = table.conj(t, x);
                s.elem_ids.binary_search(&image).expect("S is normalized") as u32
            })
            .collect();
        Permutation::from_images(images).expect("conjugation permutes S")
    };
    let nh_gens = table.small_generating_set(&nh_ids);
    let gens: Vec<Permutation> = nh_gens.iter().map(|&x| induced(x)).collect();
    let name = format!("Aut_H(S@{})", s.order());
    let aut = PermutationGroup::from_generators(gens, m, Some(name), g.caps())?;
    let expected = nh_ids.len() as u64 / c_count;
    if aut.order() != expected {
        return Err(Error::TheoremViolation(format!(
            "induced automorphism group has order {}, expected |N_H(S)|/|C| = {}",
            aut.order(),
            expected
        )));
    }
    Ok(aut)
}

/// A subgroup of a fixed ambient group, in canonical form.
#[derive(Clone)]
pub struct Subgroup {
    pub(crate) ambient: PermutationGroup,
    pub(crate) elem_ids: Arc<Vec<u32>>,
    pub(crate) gen_ids: Arc<Vec<u32>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_group(&other.ambient) && self.elem_ids == other.elem_ids
    }
}
impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order={}, gens={})",
            self.order(),
            self.generators()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl Subgroup {
    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    pub fn order(&self) -> u64 {
        self.elem_ids.len() as u64
    }

    pub fn index(&self) -> u64 {
        self.ambient.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.elem_ids.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let table = self.ambient.table().expect("ambient materialized");
        self.elem_ids.iter().map(|&i| table.perm(i).clone()).collect()
    }

    pub fn generators(&self) -> Vec<Permutation> {
        let table = self.ambient.table().expect("ambient materialized");
        if self.gen_ids.is_empty() {
            return vec![Permutation::identity(self.ambient.degree())];
        }
        self.gen_ids.iter().map(|&i| table.perm(i).clone()).collect()
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        let table = match self.ambient.table() {
            Ok(t) => t,
            Err(_) => return false,
        };
        match table.id_of(p) {
            Some(i) => self.elem_ids.binary_search(&i).is_ok(),
            None => false,
        }
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        self.ambient.same_group(&other.ambient)
            && other
                .elem_ids
                .iter()
                .all(|i| self.elem_ids.binary_search(i).is_ok())
    }

    /// `H^g` for `g` in the ambient group.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Subgroup> {
        let table = self.ambient.table()?;
        let gid = table
            .id_of(g)
            .ok_or_else(|| Error::NotAMember(g.to_string()))?;
        let elems: Vec<u32> = self.elem_ids.iter().map(|&x| table.conj(x, gid)).collect();
        let gens: Vec<u32> = self.gen_ids.iter().map(|&x| table.conj(x, gid)).collect();
        Ok(self.ambient.subgroup_from_ids(elems, gens))
    }

    pub fn is_normal(&self) -> Result<bool> {
        let table = self.ambient.table()?;
        let bits = Bits::from_sorted(table.len(), &self.elem_ids);
        for g in self.ambient.generators() {
            let gid = table.id_of(g).expect("generator id");
            for &x in self.gen_ids.iter() {
                if !bits.get(table.conj(x, gid)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Join `⟨self ∪ other⟩`.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.ambient.same_group(&other.ambient) {
            return Err(Error::NotAMember(
                "subgroups live in different ambient groups".into(),
            ));
        }
        let table = self.ambient.table()?;
        let mut seed: Vec<u32> = self.gen_ids.iter().chain(other.gen_ids.iter()).copied().collect();
        seed.sort_unstable();
        seed.dedup();
        let elems = table.closure(&seed);
        let gens = table.small_generating_set(&elems);
        Ok(self.ambient.subgroup_from_ids(elems, gens))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.ambient.same_group(&other.ambient) {
            return Err(Error::NotAMember(
                "subgroups live in different ambient groups".into(),
            ));
        }
        let table = self.ambient.table()?;
        let a = Bits::from_sorted(table.len(), &self.elem_ids);
        let b = Bits::from_sorted(table.len(), &other.elem_ids);
        let ids = a.intersection_ids(&b);
        let gens = table.small_generating_set(&ids);
        Ok(self.ambient.subgroup_from_ids(ids, gens))
    }

    /// Canonical comparison: by order, then lexicographically on the sorted
    /// element-id lists (equivalently, on sorted image arrays).
    pub fn canonical_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        self.elem_ids
            .len()
            .cmp(&other.elem_ids.len())
            .then_with(|| self.elem_ids.cmp(&other.elem_ids))
    }

    /// Realizes the subgroup as a standalone permutation group on the same
    /// domain (generated by the same permutations).
    pub fn as_group(&self, name: Option<String>) -> Result<PermutationGroup> {
        PermutationGroup::from_generators(
            self.generators(),
            self.ambient.degree(),
            name,
            self.ambient.caps(),
        )
    }

    pub(crate) fn ids(&self) -> &[u32] {
        &self.elem_ids
    }
}

/// A surjective homomorphism represented by its total element map.
#[derive(Clone)]
pub struct Epimorphism {
    domain: PermutationGroup,
    codomain: PermutationGroup,
    map: Arc<Vec<u32>>,
    kernel: Subgroup,
}

impl Epimorphism {
    pub fn domain(&self) -> &PermutationGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &PermutationGroup {
        &self.codomain
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn apply(&self, p: &Permutation) -> Result<Permutation> {
        let t = self.domain.table()?;
        let id = t
            .id_of(p)
            .ok_or_else(|| Error::NotAMember(p.to_string()))?;
        let qt = self.codomain.table()?;
        Ok(qt.perm(self.map[id as usize]).clone())
    }

    pub(crate) fn map_ids(&self) -> &[u32] {
        &self.map
    }

    /// Image of a subgroup of the domain, as a subgroup of the codomain.
    pub fn image_subgroup(&self, s: &Subgroup) -> Result<Subgroup> {
        if !s.ambient.same_group(&self.domain) {
            return Err(Error::NotAMember("subgroup not in the domain".into()));
        }
        let mut ids: Vec<u32> = s.elem_ids.iter().map(|&x| self.map[x as usize]).collect();
        ids.sort_unstable();
        ids.dedup();
        let qt = self.codomain.table()?;
        let gens = qt.small_generating_set(&ids);
        Ok(self.codomain.subgroup_from_ids(ids, gens))
    }

    /// Full preimage of a subgroup of the codomain.
    pub fn preimage_subgroup(&self, s: &Subgroup) -> Result<Subgroup> {
        if !s.ambient.same_group(&self.codomain) {
            return Err(Error::NotAMember("subgroup not in the codomain".into()));
        }
        let dt = self.domain.table()?;
        let ids: Vec<u32> = (0..dt.len() as u32)
            .filter(|&x| s.elem_ids.binary_search(&self.map[x as usize]).is_ok())
            .collect();
        let gens = dt.small_generating_set(&ids);
        Ok(self.domain.subgroup_from_ids(ids, gens))
    }

    /// Checks `map(xy) = map(x)map(y)`: on all pairs for small domains, on
    /// 10⁴ deterministically sampled pairs otherwise.
    pub fn verify_multiplicative(&self) -> Result<bool> {
        let dt = self.domain.table()?;
        let qt = self.codomain.table()?;
        let n = dt.len();
        let check = |x: u32, y: u32| -> bool {
            let lhs = self.map[dt.mul(x, y) as usize];
            let rhs = qt.mul(self.map[x as usize], self.map[y as usize]);
            lhs == rhs
        };
        if n <= 5_000 {
            for x in 0..n as u32 {
                for y in 0..n as u32 {
                    if !check(x, y) {
                        return Ok(false);
                    }
                }
            }
        } else {
            // xorshift sampling, deterministic across runs
            let mut state = 0x243F_6A88_85A3_08D3u64;
            for _ in 0..10_000 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let x = (state % n as u64) as u32;
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let y = (state % n as u64) as u32;
                if !check(x, y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
