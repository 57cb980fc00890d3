//! Verification suites: each suite runs one verified statement over a
//! configured corpus of named groups and reports every violation with full
//! context. Suites never repair a failure; a nonempty violation list means
//! the suite fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::caps::Caps;
use crate::catalog;
use crate::classes::GroupClassDescriptor;
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::report::{SuiteJson, ViolationJson};

pub const SUITE_NAMES: &[&str] = &[
    "theorem1",
    "corollary2",
    "corollary3",
    "corollary4",
    "proposition1-iso",
    "corollary6",
    "lemma1-lift",
    "lemma2-hall",
    "frattini",
    "class-numbers",
    "closure-audit",
    "counterexample-noncomplete",
];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// 1: full-lattice corpus (order ≤ 400); 2: order ≤ 2000;
    /// 3: the order-336 showcase quotients with the solvable class.
    pub tier: u8,
    pub classes: Vec<GroupClassDescriptor>,
    pub max_order: Option<u64>,
    pub output: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            tier: 1,
            classes: default_class_set(),
            max_order: None,
            output: None,
        }
    }
}

impl SuiteConfig {
    /// Parses a key-value config file: `tier = 1`, `classes = pi{2,3}
    /// solvable-pi{2,3}`, `max_order = 360`, `output = path.json`.
    pub fn parse(text: &str) -> Result<SuiteConfig> {
        let mut cfg = SuiteConfig::default();
        let mut classes_set = false;
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key = value, got: {line}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "tier" => {
                    cfg.tier = value
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad tier: {value}")))?
                }
                "classes" => {
                    cfg.classes = value
                        .split_whitespace()
                        .map(GroupClassDescriptor::parse_spec)
                        .collect::<Result<_>>()?;
                    classes_set = true;
                }
                "max_order" => {
                    cfg.max_order = Some(
                        value
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad max_order: {value}")))?,
                    )
                }
                "output" => cfg.output = Some(value.to_string()),
                _ => return Err(Error::Parse(format!("unknown config key: {key}"))),
            }
        }
        if cfg.tier == 3 && !classes_set {
            cfg.classes = vec![GroupClassDescriptor::solvable_pi([2, 3, 5, 7])?];
        }
        Ok(cfg)
    }
}

/// The default class list: the four complete π-families over every
/// nonempty π ⊆ {2,3,5,7}.
pub fn default_class_set() -> Vec<GroupClassDescriptor> {
    let primes = [2u64, 3, 5, 7];
    let mut out = Vec::new();
    for family in 0..4 {
        for mask in 1u32..16 {
            let pi: Vec<u64> = primes
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let class = match family {
                0 => GroupClassDescriptor::pi(pi.iter().copied()),
                1 => GroupClassDescriptor::solvable_pi(pi.iter().copied()),
                2 => GroupClassDescriptor::pi_separable(pi.iter().copied()),
                _ => GroupClassDescriptor::pi_solvable(pi.iter().copied()),
            }
            .expect("nonempty prime sets");
            out.push(class);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub context: String,
    pub detail: String,
}

#[derive(Debug)]
pub struct SuiteResult {
    pub suite: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> SuiteJson {
        SuiteJson {
            suite: self.suite.clone(),
            instances: self.instances,
            violations: self
                .violations
                .iter()
                .map(|v| ViolationJson {
                    context: v.context.clone(),
                    detail: v.detail.clone(),
                })
                .collect(),
            millis: self.elapsed.as_millis(),
            notes: self.notes.clone(),
        }
    }
}

/// The corpus a suite runs over; handles persist for the whole run so
/// lattices, quotients and schemes are computed once and shared.
pub struct Corpus {
    pub groups: Vec<PermutationGroup>,
}

pub fn build_corpus(cfg: &SuiteConfig, caps: &Caps) -> Result<Corpus> {
    let names: Vec<String> = match cfg.tier {
        3 => vec!["Z(2)×PSL(2,7)".into(), "PGL(2,7)".into()],
        _ => catalog::default_corpus_names()
            .into_iter()
            .map(|s| s.to_string())
            .collect(),
    };
    let bound = cfg.max_order.unwrap_or(match cfg.tier {
        1 => 400,
        2 => 2_000,
        _ => u64::MAX,
    });
    let mut groups = Vec::new();
    for name in names {
        let g = catalog::build_group(&name, caps)?;
        if g.order() <= bound {
            groups.push(g);
        }
    }
    Ok(Corpus { groups })
}

pub fn run_suite(name: &str, cfg: &SuiteConfig, caps: &Caps) -> Result<SuiteResult> {
    let corpus = build_corpus(cfg, caps)?;
    run_suite_on(name, &corpus, cfg, caps)
}

pub fn run_suite_on(
    name: &str,
    corpus: &Corpus,
    cfg: &SuiteConfig,
    caps: &Caps,
) -> Result<SuiteResult> {
    let start = Instant::now();
    let mut ctx = SuiteCtx {
        instances: 0,
        violations: Vec::new(),
        notes: Vec::new(),
    };
    match name {
        "theorem1" => suite_theorem1(corpus, cfg, &mut ctx)?,
        "corollary2" => suite_corollary2(corpus, cfg, &mut ctx)?,
        "corollary3" => suite_corollary3(corpus, cfg, &mut ctx)?,
        "corollary4" => suite_corollary4(corpus, cfg, &mut ctx)?,
        "proposition1-iso" => suite_proposition1(corpus, cfg, &mut ctx)?,
        "corollary6" => suite_corollary6(corpus, cfg, &mut ctx)?,
        "lemma1-lift" => suite_lemma1(corpus, cfg, &mut ctx)?,
        "lemma2-hall" => suite_lemma2(corpus, cfg, &mut ctx)?,
        "frattini" => suite_frattini(corpus, cfg, caps, &mut ctx)?,
        "class-numbers" => suite_class_numbers(caps, &mut ctx)?,
        "closure-audit" => suite_closure_audit(corpus, cfg, &mut ctx)?,
        "counterexample-noncomplete" => suite_counterexample(caps, &mut ctx)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(SuiteResult {
        suite: name.to_string(),
        instances: ctx.instances,
        violations: ctx.violations,
        notes: ctx.notes,
        elapsed: start.elapsed(),
    })
}

struct SuiteCtx {
    instances: usize,
    violations: Vec<Violation>,
    notes: Vec<String>,
}

impl SuiteCtx {
    fn violation(&mut self, context: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            context: context.into(),
            detail: detail.into(),
        });
    }

    /// Cap-exceeded errors are per-instance notes; theorem violations are
    /// recorded; anything else propagates.
    fn absorb<T>(&mut self, r: Result<T>, context: &str) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::CapExceeded { kind, needed, cap }) => {
                self.notes
                    .push(format!("{context}: skipped, {kind} cap ({needed} > {cap})"));
                Ok(None)
            }
            Err(Error::TheoremViolation(msg)) => {
                self.violation(context, msg);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

fn complete_classes(cfg: &SuiteConfig) -> Vec<GroupClassDescriptor> {
    cfg.classes.iter().filter(|c| c.is_complete()).cloned().collect()
}

// ---------------------------------------------------------------------

fn suite_theorem1(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        for n in lat.normal_subgroups() {
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                let report =
                    match ctx.absorb(crate::reduction::reduction_check(g, &n, &class), &context)? {
                        Some(r) => r,
                        None => continue,
                    };
                ctx.instances += 1;
                if report.k_quotient > report.k_g {
                    ctx.violation(&context, "monotonicity k_X(G/N) ≤ k_X(G) fails");
                }
                if !report.theorem_consistent {
                    ctx.violation(
                        &context,
                        format!(
                            "equality ⇔ k_X(N)=1 fails: k_G={}, k_Q={}, k_N={}",
                            report.k_g, report.k_quotient, report.k_n
                        ),
                    );
                }
                if report.equality && report.scheme_bijection_ok != Some(true) {
                    ctx.violation(
                        &context,
                        format!("scheme bijection fails: {:?}", report.witnesses),
                    );
                }
                for missing in
                    crate::reduction::image_containment_check(g, &n, &class)?
                {
                    ctx.violation(&context, missing);
                }
            }
        }
    }
    Ok(())
}

fn suite_corollary2(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        for n in lat.normal_subgroups() {
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                let report =
                    match ctx.absorb(crate::reduction::reduction_check(g, &n, &class), &context)? {
                        Some(r) => r,
                        None => continue,
                    };
                if report.k_n > 1 {
                    ctx.instances += 1;
                    if report.k_g <= report.k_quotient {
                        ctx.violation(
                            &context,
                            format!(
                                "strictness fails: k_X(N)={} > 1 but k_G={} ≤ k_Q={}",
                                report.k_n, report.k_g, report.k_quotient
                            ),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_corollary3(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        for class in complete_classes(cfg) {
            let context = format!("{} over {}", g.display_name(), class.spec_string());
            // radical properties (i)-(iii) and the two-definition agreement
            // are verified inside d_x_radical
            if ctx
                .absorb(crate::reduction::d_x_radical(g, &class), &context)?
                .is_some()
            {
                ctx.instances += 1;
            }
        }
    }
    Ok(())
}

fn suite_corollary4(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        for n in lat.normal_subgroups() {
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                let report = match ctx.absorb(
                    crate::reduction::overgroup_criterion_check(g, &n, &class),
                    &context,
                )? {
                    Some(r) => r,
                    None => continue,
                };
                ctx.instances += 1;
                if !report.equivalence_holds() {
                    ctx.violation(
                        &context,
                        format!(
                            "criterion fails: (i)={}, (ii)={}, violators: {:?}",
                            report.equality_on_g,
                            report.all_overgroups_equal,
                            report.violators
                        ),
                    );
                }
            }
        }
    }
    Ok(())
}

fn suite_proposition1(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        let normals = lat.normal_subgroups();
        for n in &normals {
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                // the three-way consistency check lives inside
                if ctx
                    .absorb(crate::reduction::is_isoschematism(g, n, &class), &context)?
                    .is_some()
                {
                    ctx.instances += 1;
                }
            }
        }
        // opportunistic search for non-isomorphic kernels of isoschematisms
        // onto the same image; such kernels must share composition factors
        for class in complete_classes(cfg) {
            for i in 0..normals.len() {
                for j in i + 1..normals.len() {
                    let (n1, n2) = (&normals[i], &normals[j]);
                    if n1.order() != n2.order() || n1.order() == 1 {
                        continue;
                    }
                    let e1 = crate::reduction::is_isoschematism(g, n1, &class)?;
                    let e2 = crate::reduction::is_isoschematism(g, n2, &class)?;
                    if !(e1 && e2) {
                        continue;
                    }
                    let (q1, _) = g.quotient_by(n1)?;
                    let (q2, _) = g.quotient_by(n2)?;
                    if crate::iso::are_isomorphic(&q1, &q2)?.is_none() {
                        continue;
                    }
                    let g1 = n1.as_group(None)?;
                    let g2 = n2.as_group(None)?;
                    let f1 = crate::lattice::composition_factors(&g1)?;
                    let f2 = crate::lattice::composition_factors(&g2)?;
                    if f1 != f2 {
                        ctx.violation(
                            format!("{} over {}", g.display_name(), class.spec_string()),
                            format!(
                                "isoschematism kernels of order {} differ in composition factors",
                                n1.order()
                            ),
                        );
                    } else if crate::iso::are_isomorphic(&g1, &g2)?.is_none() {
                        ctx.notes.push(format!(
                            "{}: non-isomorphic kernels of order {} with isomorphic images over {}",
                            g.display_name(),
                            n1.order(),
                            class.spec_string()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_corollary6(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for class in complete_classes(cfg) {
        // full reductions of the whole corpus
        let mut reductions: Vec<(String, PermutationGroup)> = Vec::new();
        for g in &corpus.groups {
            let context = format!("{} over {}", g.display_name(), class.spec_string());
            if let Some((q, _)) =
                ctx.absorb(crate::reduction::full_reduction(g, &class), &context)?
            {
                reductions.push((g.display_name(), q));
            }
        }
        let m = reductions.len();
        // pairwise isomorphism matrix of the reductions
        let mut iso = vec![vec![false; m]; m];
        for i in 0..m {
            for j in 0..m {
                iso[i][j] = if i == j {
                    true
                } else if j < i {
                    iso[j][i]
                } else {
                    crate::iso::are_isomorphic(&reductions[i].1, &reductions[j].1)?.is_some()
                };
            }
        }
        ctx.instances += m;
        // reflexive by construction; check symmetry of the computed matrix
        // and transitivity (an equivalence relation on the corpus)
        for i in 0..m {
            if !iso[i][i] {
                ctx.violation(
                    format!("{} over {}", reductions[i].0, class.spec_string()),
                    "reflexivity fails",
                );
            }
            for j in 0..m {
                if iso[i][j] != iso[j][i] {
                    ctx.violation(
                        format!(
                            "{} vs {} over {}",
                            reductions[i].0,
                            reductions[j].0,
                            class.spec_string()
                        ),
                        "symmetry of ≡ fails",
                    );
                }
                for k in 0..m {
                    if iso[i][j] && iso[j][k] && !iso[i][k] {
                        ctx.violation(
                            format!(
                                "{} / {} / {} over {}",
                                reductions[i].0,
                                reductions[j].0,
                                reductions[k].0,
                                class.spec_string()
                            ),
                            "transitivity of ≡ fails",
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_lemma1(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        for n in lat.normal_subgroups() {
            if n.is_trivial() {
                // the identity epimorphism lifts every subgroup to itself
                continue;
            }
            let (q, epi) = g.quotient_by(&n)?;
            let q_lat = q.lattice()?;
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                // every X-subgroup class of the image must lift
                for (rep, _) in q_lat.conjugacy_classes() {
                    if !class.contains_subgroup(&rep)? {
                        continue;
                    }
                    ctx.instances += 1;
                    match crate::reduction::lift_x_subgroup(&epi, &rep, &class) {
                        Ok(h) => {
                            let img = epi.image_subgroup(&h)?;
                            if img != rep {
                                ctx.violation(&context, "lift image mismatch");
                            }
                        }
                        Err(Error::TheoremViolation(msg)) => ctx.violation(&context, msg),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_lemma2(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    for g in &corpus.groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        for n in lat.normal_subgroups() {
            for class in complete_classes(cfg) {
                let context = format!(
                    "{} ⊵ |N|={} over {}",
                    g.display_name(),
                    n.order(),
                    class.spec_string()
                );
                let report = match ctx.absorb(
                    crate::reduction::hall_inheritance_check(g, &n, &class),
                    &context,
                )? {
                    Some(r) => r,
                    None => continue,
                };
                ctx.instances += 1;
                for v in report.violations {
                    ctx.violation(&context, v);
                }
            }
        }
    }
    Ok(())
}

fn suite_frattini(
    corpus: &Corpus,
    cfg: &SuiteConfig,
    caps: &Caps,
    ctx: &mut SuiteCtx,
) -> Result<()> {
    // the corpus plus the central-factor showcase instance
    let mut groups = corpus.groups.clone();
    groups.push(catalog::build_group("Sym(5)×Z(5)", caps)?);
    for g in &groups {
        let lat = match ctx.absorb(g.lattice(), &g.display_name())? {
            Some(l) => l,
            None => continue,
        };
        let normals = lat.normal_subgroups();
        let simple_products: Vec<_> = normals
            .iter()
            .filter(|n| {
                let idx = lat.find(n).expect("normal subgroup in lattice");
                crate::reduction::is_product_of_nonabelian_simples(&lat.data, idx)
            })
            .collect();
        if simple_products.is_empty() {
            continue;
        }
        for n in &simple_products {
            for a in &normals {
                if !a.contains_subgroup(n) {
                    continue;
                }
                for class in complete_classes(cfg) {
                    let context = format!(
                        "{} ⊵ A(|A|={}) ⊇ N(|N|={}) over {}",
                        g.display_name(),
                        a.order(),
                        n.order(),
                        class.spec_string()
                    );
                    match crate::reduction::frattini_witness(g, a, n, &class) {
                        Ok(_) => ctx.instances += 1,
                        Err(Error::Hypothesis(_)) => {} // A ≠ KN for this class: not an instance
                        Err(Error::TheoremViolation(msg)) => {
                            ctx.instances += 1;
                            ctx.violation(&context, msg);
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_class_numbers(caps: &Caps, ctx: &mut SuiteCtx) -> Result<()> {
    for name in ["Alt(5)", "PSL(2,7)", "Alt(6)", "PSL(2,8)", "PSL(2,11)"] {
        let s = catalog::build_group(name, caps)?;
        let survey = match ctx.absorb(crate::reduction::simple_class_number_survey(&s), name)? {
            Some(s) => s,
            None => continue,
        };
        for row in &survey.rows {
            ctx.instances += 1;
            if row.hall_exists {
                ctx.notes.push(format!(
                    "{name}: π={:?} h_π={} h_solvable={}",
                    row.pi, row.h_pi, row.h_solvable
                ));
            }
        }
    }
    Ok(())
}

fn suite_closure_audit(corpus: &Corpus, cfg: &SuiteConfig, ctx: &mut SuiteCtx) -> Result<()> {
    let mut classes = cfg.classes.clone();
    classes.push(GroupClassDescriptor::abelian());
    classes.push(GroupClassDescriptor::nilpotent());
    for class in &classes {
        let context = format!("closure audit of {}", class.spec_string());
        let audit = match ctx.absorb(
            crate::classes::closure_audit(class, &corpus.groups),
            &context,
        )? {
            Some(a) => a,
            None => continue,
        };
        ctx.instances += 1;
        if class.is_complete() {
            if !(audit.subgroup_closed && audit.quotient_closed && audit.extension_closed) {
                ctx.violation(
                    &context,
                    format!(
                        "complete class fails a closure: {:?}",
                        audit.counterexamples
                    ),
                );
            }
        } else {
            // abelian and nilpotent are subgroup- and quotient-closed but
            // not extension-closed; the corpus must witness the failure
            if !audit.subgroup_closed || !audit.quotient_closed {
                ctx.violation(&context, "unexpected subgroup/quotient closure failure");
            }
            if audit.extension_closed {
                ctx.violation(
                    &context,
                    "extension-closure counterexample not found in the corpus",
                );
            } else {
                ctx.notes.push(format!(
                    "{}: extension counterexample: {}",
                    class.spec_string(),
                    audit
                        .counterexamples
                        .first()
                        .cloned()
                        .unwrap_or_default()
                ));
            }
        }
    }
    Ok(())
}

fn suite_counterexample(caps: &Caps, ctx: &mut SuiteCtx) -> Result<()> {
    let sym3 = catalog::build_group("Sym(3)", caps)?;
    let alt3 = catalog::build_group("Alt(3)", caps)?;
    let a3_in_s3 = sym3.subgroup_generated(&[crate::perm::Permutation::parse("(0 1 2)", 3)?])?;
    for class in [GroupClassDescriptor::abelian(), GroupClassDescriptor::nilpotent()] {
        let context = format!("Sym(3)/Alt(3) over {}", class.spec_string());
        ctx.instances += 1;
        let k_s3 = crate::reduction::k_x(&sym3, &class)?;
        let k_a3 = crate::reduction::k_x(&alt3, &class)?;
        let report = crate::reduction::reduction_check(&sym3, &a3_in_s3, &class)?;
        if k_s3 != 2 {
            ctx.violation(&context, format!("k_X(Sym3) = {k_s3}, expected 2"));
        }
        if k_a3 != 1 {
            ctx.violation(&context, format!("k_X(Alt3) = {k_a3}, expected 1"));
        }
        if report.k_quotient != 1 {
            ctx.violation(
                &context,
                format!("k_X(Sym3/Alt3) = {}, expected 1", report.k_quotient),
            );
        }
        if report.k_n != 1 || report.equality || report.theorem_consistent {
            ctx.violation(
                &context,
                "the non-complete counterexample shape is wrong: expected k_N=1 with strict inequality",
            );
        }
    }
    Ok(())
}

/// Runs every suite on a shared corpus and returns the results keyed by
/// suite name.
pub fn run_all_suites(cfg: &SuiteConfig, caps: &Caps) -> Result<HashMap<String, SuiteResult>> {
    let corpus = build_corpus(cfg, caps)?;
    let mut out = HashMap::new();
    for name in SUITE_NAMES {
        let result = run_suite_on(name, &corpus, cfg, caps)?;
        out.insert(name.to_string(), result);
    }
    Ok(out)
}
