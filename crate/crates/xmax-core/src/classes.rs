//! Decidable class descriptors for classes of finite groups: the complete
//! families (all groups, order-1 groups, π-groups, solvable π-groups,
//! π-separable, π-solvable) and the non-complete families (abelian,
//! nilpotent), with membership tests, prime support, separability and
//! closure-property auditing.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{PermutationGroup, Subgroup};
use crate::lattice::composition_factors;
use crate::structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassFamily {
    All,
    TrivialOnly,
    Pi,
    SolvablePi,
    PiSeparable,
    PiSolvable,
    Abelian,
    Nilpotent,
}

impl ClassFamily {
    pub fn needs_primes(self) -> bool {
        matches!(
            self,
            ClassFamily::Pi | ClassFamily::SolvablePi | ClassFamily::PiSeparable | ClassFamily::PiSolvable
        )
    }

    pub fn is_complete(self) -> bool {
        !matches!(self, ClassFamily::Abelian | ClassFamily::Nilpotent)
    }
}

/// A decidable class of finite groups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupClassDescriptor {
    family: ClassFamily,
    primes: BTreeSet<u64>,
}

impl GroupClassDescriptor {
    pub fn new(family: ClassFamily, primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let primes: BTreeSet<u64> = primes.into_iter().collect();
        if family.needs_primes() && primes.is_empty() {
            return Err(Error::Parse(format!(
                "class family {family:?} requires a nonempty prime set"
            )));
        }
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
        }
        let primes = if family.needs_primes() { primes } else { BTreeSet::new() };
        Ok(GroupClassDescriptor { family, primes })
    }

    pub fn all() -> Self {
        GroupClassDescriptor {
            family: ClassFamily::All,
            primes: BTreeSet::new(),
        }
    }

    pub fn trivial_only() -> Self {
        GroupClassDescriptor {
            family: ClassFamily::TrivialOnly,
            primes: BTreeSet::new(),
        }
    }

    pub fn abelian() -> Self {
        GroupClassDescriptor {
            family: ClassFamily::Abelian,
            primes: BTreeSet::new(),
        }
    }

    pub fn nilpotent() -> Self {
        GroupClassDescriptor {
            family: ClassFamily::Nilpotent,
            primes: BTreeSet::new(),
        }
    }

    pub fn pi(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(ClassFamily::Pi, primes)
    }

    pub fn solvable_pi(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(ClassFamily::SolvablePi, primes)
    }

    pub fn pi_separable(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(ClassFamily::PiSeparable, primes)
    }

    pub fn pi_solvable(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(ClassFamily::PiSolvable, primes)
    }

    pub fn family(&self) -> ClassFamily {
        self.family
    }

    pub fn primes(&self) -> &BTreeSet<u64> {
        &self.primes
    }

    /// True for the six complete families (hard-coded truth table, audited
    /// empirically by [`closure_audit`]).
    pub fn is_complete(&self) -> bool {
        self.family.is_complete()
    }

    /// Is `n` a number supported on the *parameter* prime set π? The
    /// parameter is what the membership definitions quantify over (π-group,
    /// π′-factor, …); it differs from the class support π(X) for the
    /// separable families.
    pub(crate) fn param_pi_number(&self, n: u64) -> bool {
        prime_factors(n).iter().all(|p| self.primes.contains(p))
    }

    /// Does some parameter prime divide `n`? (`n` is a π′-number iff not.)
    pub(crate) fn param_pi_divides(&self, n: u64) -> bool {
        self.primes.iter().any(|&p| n.is_multiple_of(p))
    }

    /// π(X): primes dividing the order of some member, reported up to
    /// `universe_bound` for the families supporting every prime. The
    /// π-separable and π-solvable families contain all π′-groups, so their
    /// support is all primes, not the parameter set.
    pub fn char_primes(&self, universe_bound: u64) -> BTreeSet<u64> {
        match self.family {
            ClassFamily::Pi | ClassFamily::SolvablePi => self.primes.clone(),
            ClassFamily::TrivialOnly => BTreeSet::new(),
            ClassFamily::PiSeparable
            | ClassFamily::PiSolvable
            | ClassFamily::All
            | ClassFamily::Abelian
            | ClassFamily::Nilpotent => (2..=universe_bound).filter(|&n| is_prime(n)).collect(),
        }
    }

    /// Does some prime of π(X) divide `n`? For families supporting all
    /// primes this is just `n > 1`.
    pub fn char_prime_divides(&self, n: u64) -> bool {
        match self.family {
            ClassFamily::Pi | ClassFamily::SolvablePi => self.param_pi_divides(n),
            ClassFamily::TrivialOnly => false,
            ClassFamily::PiSeparable
            | ClassFamily::PiSolvable
            | ClassFamily::All
            | ClassFamily::Abelian
            | ClassFamily::Nilpotent => n > 1,
        }
    }

    /// Is `n` a π(X)-number (all prime divisors in π(X))?
    pub fn is_char_number(&self, n: u64) -> bool {
        match self.family {
            ClassFamily::Pi | ClassFamily::SolvablePi => self.param_pi_number(n),
            ClassFamily::TrivialOnly => n == 1,
            ClassFamily::PiSeparable
            | ClassFamily::PiSolvable
            | ClassFamily::All
            | ClassFamily::Abelian
            | ClassFamily::Nilpotent => true,
        }
    }

    /// Membership of a subgroup, evaluated on the ambient element table.
    pub fn contains_subgroup(&self, h: &Subgroup) -> Result<bool> {
        let table = h.ambient().table()?;
        let gens = h.ids_of_generators();
        let order = h.order();
        Ok(match self.family {
            ClassFamily::All => true,
            ClassFamily::TrivialOnly => order == 1,
            ClassFamily::Pi => self.param_pi_number(order),
            ClassFamily::SolvablePi => {
                self.param_pi_number(order) && structure::is_solvable_ids(table, h.ids(), &gens)
            }
            ClassFamily::PiSeparable => {
                if structure::is_solvable_ids(table, h.ids(), &gens) {
                    true
                } else {
                    let g = h.as_group(None)?;
                    self.factors_separable(&composition_factors(&g)?.iter().map(|d| d.order).collect::<Vec<_>>())
                }
            }
            ClassFamily::PiSolvable => {
                if structure::is_solvable_ids(table, h.ids(), &gens) {
                    true
                } else {
                    let g = h.as_group(None)?;
                    self.factors_pi_solvable(&composition_factors(&g)?.iter().map(|d| d.order).collect::<Vec<_>>())
                }
            }
            ClassFamily::Abelian => structure::is_abelian_ids(table, &gens),
            ClassFamily::Nilpotent => structure::is_nilpotent_ids(table, h.ids(), &gens),
        })
    }

    /// Membership of a whole group.
    pub fn contains_group(&self, g: &PermutationGroup) -> Result<bool> {
        self.contains_subgroup(&g.full_subgroup()?)
    }

    /// π-separability criterion on composition factor orders: every factor
    /// is a π-group or a π′-group (π the parameter set). Solvable groups
    /// pass for every π since their factors are cyclic of prime order.
    pub(crate) fn factors_separable(&self, factor_orders: &[u64]) -> bool {
        factor_orders
            .iter()
            .all(|&f| self.param_pi_number(f) || !self.param_pi_divides(f))
    }

    /// π-solvability on factor orders: every factor is a solvable π-group
    /// (for a simple factor: cyclic of prime order in π) or a π′-group.
    pub(crate) fn factors_pi_solvable(&self, factor_orders: &[u64]) -> bool {
        factor_orders
            .iter()
            .all(|&f| (is_prime(f) && self.param_pi_number(f)) || !self.param_pi_divides(f))
    }

    /// Canonical class-spec string, e.g. `pi{2,3}` or `abelian`.
    pub fn spec_string(&self) -> String {
        let family = match self.family {
            ClassFamily::All => "all",
            ClassFamily::TrivialOnly => "trivial",
            ClassFamily::Pi => "pi",
            ClassFamily::SolvablePi => "solvable-pi",
            ClassFamily::PiSeparable => "pi-separable",
            ClassFamily::PiSolvable => "pi-solvable",
            ClassFamily::Abelian => "abelian",
            ClassFamily::Nilpotent => "nilpotent",
        };
        if self.family.needs_primes() {
            let ps: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
            format!("{family}{{{}}}", ps.join(","))
        } else {
            family.to_string()
        }
    }

    /// Parses `pi{2,3}`, `solvable-pi{2,3,5}`, `abelian`, … (the inverse of
    /// [`spec_string`]). Also accepts `family:2,3`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family_str, primes_str) = if let Some(open) = s.find('{') {
            let close = s
                .rfind('}')
                .ok_or_else(|| Error::Parse(format!("unclosed brace in class spec: {s}")))?;
            (&s[..open], Some(&s[open + 1..close]))
        } else if let Some(colon) = s.find(':') {
            (&s[..colon], Some(&s[colon + 1..]))
        } else {
            (s, None)
        };
        let family = match family_str.trim() {
            "all" => ClassFamily::All,
            "trivial" | "trivial-only" => ClassFamily::TrivialOnly,
            "pi" => ClassFamily::Pi,
            "solvable-pi" => ClassFamily::SolvablePi,
            "pi-separable" => ClassFamily::PiSeparable,
            "pi-solvable" => ClassFamily::PiSolvable,
            "abelian" => ClassFamily::Abelian,
            "nilpotent" => ClassFamily::Nilpotent,
            other => return Err(Error::Parse(format!("unknown class family: {other}"))),
        };
        let primes: Vec<u64> = match primes_str {
            None => Vec::new(),
            Some(ps) => ps
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad prime '{t}' in class spec")))
                })
                .collect::<Result<_>>()?,
        };
        GroupClassDescriptor::new(family, primes)
    }
}

impl fmt::Display for GroupClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// Is `g` X-separable: every composition factor is an X-group or an
/// X′-group (no common prime with π(X))? Requires a complete class.
pub fn is_x_separable(g: &PermutationGroup, class: &GroupClassDescriptor) -> Result<bool> {
    if !class.is_complete() {
        return Err(Error::ClassNotComplete(class.spec_string()));
    }
    let orders: Vec<u64> = composition_factors(g)?.iter().map(|d| d.order).collect();
    Ok(orders.iter().all(|&f| separable_factor_ok(class, f)))
}

/// One composition factor passes the X-separability test: it is an X-group
/// or an X′-group.
pub(crate) fn separable_factor_ok(class: &GroupClassDescriptor, factor_order: u64) -> bool {
    factor_in_class(class, factor_order) || !class.char_prime_divides(factor_order)
}

/// Membership of a *simple* group of the given order in a complete class,
/// decided arithmetically from the order.
fn factor_in_class(class: &GroupClassDescriptor, simple_order: u64) -> bool {
    match class.family() {
        ClassFamily::All => true,
        ClassFamily::TrivialOnly => false, // composition factors are nontrivial
        ClassFamily::Pi => class.param_pi_number(simple_order),
        ClassFamily::SolvablePi => is_prime(simple_order) && class.param_pi_number(simple_order),
        // for a simple group, π-separable ⇔ π-group or π′-group
        ClassFamily::PiSeparable => {
            class.param_pi_number(simple_order) || !class.param_pi_divides(simple_order)
        }
        ClassFamily::PiSolvable => {
            (is_prime(simple_order) && class.param_pi_number(simple_order))
                || !class.param_pi_divides(simple_order)
        }
        ClassFamily::Abelian | ClassFamily::Nilpotent => unreachable!("complete classes only"),
    }
}

/// Result of an empirical closure audit over a corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClosureAudit {
    pub subgroup_closed: bool,
    pub quotient_closed: bool,
    pub extension_closed: bool,
    pub counterexamples: Vec<String>,
}

/// Empirically checks the three closure properties of `class` over every
/// subgroup, quotient and normal-subgroup/quotient pair found inside the
/// corpus groups. Witnesses of failure are reported, never repaired.
/// Membership is evaluated through the lattice caches, one representative
/// per conjugacy class.
pub fn closure_audit(
    class: &GroupClassDescriptor,
    corpus: &[PermutationGroup],
) -> Result<ClosureAudit> {
    let mut audit = ClosureAudit {
        subgroup_closed: true,
        quotient_closed: true,
        extension_closed: true,
        counterexamples: Vec::new(),
    };
    for g in corpus {
        let lat = g.lattice()?;
        let data = g.lattice_data()?;
        let flags = crate::reduction::member_flags(&data, g, class)?;
        let g_name = g.display_name();
        let g_member = flags[data.whole as usize];
        if g_member {
            for (rep, _) in lat.conjugacy_classes() {
                let idx = lat.find(&rep).expect("representative in lattice");
                if !flags[idx as usize] {
                    audit.subgroup_closed = false;
                    audit.counterexamples.push(format!(
                        "subgroup: {} ∈ {} but subgroup of order {} is not",
                        g_name,
                        class.spec_string(),
                        rep.order()
                    ));
                }
            }
        }
        for i in 0..lat.subgroup_count() as u32 {
            if !lat.is_normal_index(i) {
                continue;
            }
            let n = lat.subgroup(i);
            let (q, _) = g.quotient_by(&n)?;
            let q_data = q.lattice_data()?;
            let q_flags = crate::reduction::member_flags(&q_data, &q, class)?;
            let q_member = q_flags[q_data.whole as usize];
            if g_member && !q_member {
                audit.quotient_closed = false;
                audit.counterexamples.push(format!(
                    "quotient: {} ∈ {} but quotient by order-{} normal subgroup is not",
                    g_name,
                    class.spec_string(),
                    n.order()
                ));
            }
            let n_member = flags[i as usize];
            if n_member && q_member && !g_member {
                audit.extension_closed = false;
                audit.counterexamples.push(format!(
                    "extension: order-{} normal subgroup and its quotient are in {} but {} is not",
                    n.order(),
                    class.spec_string(),
                    g_name
                ));
            }
        }
    }
    Ok(audit)
}

// --- small arithmetic helpers ------------------------------------------

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization `n = ∏ pᵉ` as `(p, e)` pairs, ascending in `p`.
pub fn factorization(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Largest divisor of `n` composed of primes in `primes`.
pub fn pi_part(n: u64, primes: &BTreeSet<u64>) -> u64 {
    let mut part = 1;
    let mut m = n;
    for &p in primes {
        while m.is_multiple_of(p) {
            m /= p;
            part *= p;
        }
    }
    part
}
