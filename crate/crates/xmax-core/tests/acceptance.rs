//! Acceptance suite. Each criterion runs as one test and prints a
//! `[PASS] criterion N` line (visible with `--nocapture`). The corpus of
//! catalog groups of order ≤ 360 is shared across criteria.
//!
//! Run with:
//!   cargo test -p xmax-core --test acceptance -- --nocapture

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use xmax_core::catalog::build_group;
use xmax_core::classes::GroupClassDescriptor;
use xmax_core::reduction;
use xmax_core::suites::{self, Corpus, SuiteConfig};
use xmax_core::{Caps, Permutation, PermutationGroup};

fn caps() -> Caps {
    Caps::default()
}

fn config() -> SuiteConfig {
    SuiteConfig {
        tier: 1,
        classes: suites::default_class_set(),
        max_order: Some(360),
        output: None,
    }
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| suites::build_corpus(&config(), &caps()).expect("corpus builds"))
}

fn run_shared_suite(name: &str) -> suites::SuiteResult {
    suites::run_suite_on(name, corpus(), &config(), &caps()).expect("suite runs")
}

/// Criterion 1: with X = abelian and X = nilpotent, k_X(Sym3) = 2,
/// k_X(Alt3) = 1, k_X(Sym3/Alt3) = 1, exactly; runtime < 1 s.
#[test]
fn criterion_1_counterexample_regression() {
    let started = Instant::now();
    let sym3 = build_group("Sym(3)", &caps()).unwrap();
    let alt3 = build_group("Alt(3)", &caps()).unwrap();
    let a3_inside = sym3
        .subgroup_generated(&[Permutation::parse("(0 1 2)", 3).unwrap()])
        .unwrap();
    for class in [GroupClassDescriptor::abelian(), GroupClassDescriptor::nilpotent()] {
        assert_eq!(reduction::k_x(&sym3, &class).unwrap(), 2, "{class}");
        assert_eq!(reduction::k_x(&alt3, &class).unwrap(), 1, "{class}");
        let (quotient, _) = sym3.quotient_by(&a3_inside).unwrap();
        assert_eq!(reduction::k_x(&quotient, &class).unwrap(), 1, "{class}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("[PASS] criterion 1: counterexample regression (k=2 vs 1 with k(N)=1), {elapsed:?}");
}

/// Criterion 2: with X = all solvable groups (solvable-π over all primes
/// ≤ 7), k_X(Z2 × PSL(2,7)) = 3 and k_X(PGL(2,7)) = 4, exactly, by
/// full-lattice computation on the order-336 groups; ≤ 10 min each.
#[test]
fn criterion_2_paper_example_quotients() {
    let solvable = GroupClassDescriptor::solvable_pi([2, 3, 5, 7]).unwrap();

    let t1 = Instant::now();
    let g1 = build_group("Z(2)×PSL(2,7)", &caps()).unwrap();
    assert_eq!(g1.order(), 336);
    let scheme1 = reduction::x_maximal_classes(&g1, &solvable).unwrap();
    assert_eq!(scheme1.k(), 3, "k of Z2 × PSL(2,7) over the solvable class");
    let e1 = t1.elapsed();
    assert!(e1 < Duration::from_secs(600), "took {e1:?}");

    let t2 = Instant::now();
    let g2 = build_group("PGL(2,7)", &caps()).unwrap();
    assert_eq!(g2.order(), 336);
    let scheme2 = reduction::x_maximal_classes(&g2, &solvable).unwrap();
    assert_eq!(scheme2.k(), 4, "k of PGL(2,7) over the solvable class");
    // the four classes: 7:6 (42), Sym4 (24), D16 (16), D12 (12)
    let orders: Vec<u64> = scheme2.class_reps.iter().map(|r| r.order()).collect();
    assert_eq!(orders, vec![42, 24, 16, 12]);
    let e2 = t2.elapsed();
    assert!(e2 < Duration::from_secs(600), "took {e2:?}");

    println!("[PASS] criterion 2: k(Z2×PSL(2,7)) = 3 ({e1:?}), k(PGL(2,7)) = 4 ({e2:?})");
}

/// Criterion 3: over all catalog groups of order ≤ 360, all normal
/// subgroups and all complete classes over π ⊆ {2,3,5,7}: zero violations
/// of the reduction statement and of the scheme bijection; ≤ 30 min.
#[test]
fn criterion_3_reduction_statement_exhaustive() {
    let started = Instant::now();
    let result = run_shared_suite("theorem1");
    assert!(result.instances > 5_000, "corpus too small: {}", result.instances);
    assert!(
        result.passed(),
        "violations: {:?}",
        result.violations.iter().map(|v| &v.context).collect::<Vec<_>>()
    );
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1_800), "took {elapsed:?}");
    println!(
        "[PASS] criterion 3: reduction statement over {} instances, zero violations, {elapsed:?}",
        result.instances
    );
}

/// Criterion 4: strict inequality, radical properties, overgroup
/// criterion, isoschematism equivalences and the ≡ axioms: zero violations
/// over the same corpus.
#[test]
fn criterion_4_corollaries_zero_violations() {
    let started = Instant::now();
    for suite in [
        "corollary2",
        "corollary3",
        "corollary4",
        "proposition1-iso",
        "corollary6",
    ] {
        let result = run_shared_suite(suite);
        assert!(
            result.passed(),
            "{suite} violations: {:?}",
            result.violations.iter().map(|v| &v.context).collect::<Vec<_>>()
        );
        assert!(result.instances > 0, "{suite} ran no instances");
    }
    println!(
        "[PASS] criterion 4: corollary2/3/4, proposition1-iso, corollary6 all clean, {:?}",
        started.elapsed()
    );
}

/// Criterion 5: the two radical definitions (join over k-preserving
/// normal subgroups; join over normal subgroups with one class) coincide
/// on every corpus group — verified inside d_x_radical for every
/// (group, class) pair.
#[test]
fn criterion_5_radical_agreement() {
    let started = Instant::now();
    let mut pairs = 0usize;
    for g in &corpus().groups {
        for class in &config().classes {
            reduction::d_x_radical(g, class).unwrap_or_else(|e| {
                panic!("radical agreement fails on {} over {class}: {e}", g.display_name())
            });
            pairs += 1;
        }
    }
    println!(
        "[PASS] criterion 5: radical definitions agree on {pairs} (group, class) pairs, {:?}",
        started.elapsed()
    );
}

/// Criterion 6: for the five simple groups, h_π lands in {1,2,3,4,9} with
/// the exact case split, and the concrete values match the recorded
/// regression anchors.
#[test]
fn criterion_6_class_number_survey() {
    let started = Instant::now();
    let result = run_shared_suite("class-numbers");
    assert!(result.passed(), "violations: {:?}", result.violations);

    // regression anchors: (group, π, h_π, h over solvable-π); the first
    // two rows are the documented values, the rest were recorded from the
    // first verified run
    let anchors: &[(&str, &[u64], usize, usize)] = &[
        ("Alt(5)", &[2, 3], 1, 1),
        ("PSL(2,7)", &[2, 3], 2, 2),
        ("Alt(5)", &[2], 1, 1),
        ("Alt(5)", &[2, 3, 5], 1, 0),
        ("PSL(2,7)", &[3, 7], 1, 1),
        ("PSL(2,7)", &[2, 3, 7], 1, 0),
        ("Alt(6)", &[2, 3, 5], 1, 0),
        ("PSL(2,8)", &[2, 7], 1, 1),
        ("PSL(2,8)", &[2, 3, 7], 1, 0),
        ("PSL(2,11)", &[2, 3], 2, 2),
        ("PSL(2,11)", &[5, 11], 1, 1),
        ("PSL(2,11)", &[2, 3, 5], 2, 0),
        ("PSL(2,11)", &[2, 3, 5, 11], 1, 0),
    ];
    // Hall π-subgroups that must NOT exist
    let absent: &[(&str, &[u64])] = &[
        ("Alt(5)", &[2, 5]),
        ("Alt(5)", &[3, 5]),
        ("PSL(2,7)", &[2, 7]),
        ("Alt(6)", &[2, 3]),
        ("Alt(6)", &[2, 5]),
        ("Alt(6)", &[3, 5]),
        ("PSL(2,8)", &[2, 3]),
        ("PSL(2,8)", &[3, 7]),
        ("PSL(2,11)", &[2, 5]),
        ("PSL(2,11)", &[3, 5]),
        ("PSL(2,11)", &[2, 11]),
        ("PSL(2,11)", &[3, 11]),
    ];
    let mut surveys: std::collections::HashMap<String, reduction::ClassNumberSurvey> =
        std::collections::HashMap::new();
    let mut survey_of = |name: &str| -> reduction::ClassNumberSurvey {
        surveys
            .entry(name.to_string())
            .or_insert_with(|| {
                let s = build_group(name, &caps()).unwrap();
                reduction::simple_class_number_survey(&s).unwrap()
            })
            .clone()
    };
    for (name, pi, h_pi, h_solvable) in anchors {
        let survey = survey_of(name);
        let row = survey
            .rows
            .iter()
            .find(|r| r.pi == *pi)
            .unwrap_or_else(|| panic!("{name}: missing π = {pi:?}"));
        assert!(row.hall_exists, "{name} π={pi:?} should have Hall subgroups");
        assert_eq!(row.h_pi, *h_pi, "{name} π={pi:?}");
        assert_eq!(row.h_solvable, *h_solvable, "{name} π={pi:?} (solvable)");
    }
    for (name, pi) in absent {
        let survey = survey_of(name);
        let row = survey.rows.iter().find(|r| r.pi == *pi).unwrap();
        assert!(!row.hall_exists, "{name} π={pi:?} should have no Hall subgroup");
    }
    println!(
        "[PASS] criterion 6: class-number survey matches the bounds and anchors, {:?}",
        started.elapsed()
    );
}

/// Criterion 7: the Frattini witness exists on every corpus instance
/// satisfying the hypotheses, including A = G cases and Sym(5)×Z(5).
#[test]
fn criterion_7_frattini_witnesses() {
    let started = Instant::now();
    let result = run_shared_suite("frattini");
    assert!(result.passed(), "violations: {:?}", result.violations);
    assert!(result.instances > 50, "too few instances: {}", result.instances);

    // the central-factor showcase, checked explicitly
    let g = build_group("Sym(5)×Z(5)", &caps()).unwrap();
    let a = xmax_core::catalog::resolve_factor_pattern(&g, "Sym(5)×Z(5)", "Sym(5)×1", &caps())
        .unwrap();
    let n = g
        .subgroup_generated(&[
            Permutation::parse("(0 1 2 3 4)", 10).unwrap(),
            Permutation::parse("(0 1 2)", 10).unwrap(),
        ])
        .unwrap();
    let class = GroupClassDescriptor::pi([2, 3]).unwrap();
    let l = reduction::frattini_witness(&g, &a, &n, &class).unwrap();
    assert_eq!(l.order(), 24);
    println!(
        "[PASS] criterion 7: Frattini witness on {} instances (incl. Sym(5)×Z(5)), {:?}",
        result.instances,
        started.elapsed()
    );
}

// --- criterion 8: independent lattice oracle ---------------------------

/// Brute-force subgroup count: closures of every subset of the element
/// pool up to the rank bound ⌊log₂|G|⌋ (each extra generator at least
/// doubles a subgroup, so every subgroup of a group of order n has a
/// generating set of at most ⌊log₂ n⌋ of its elements). Independent of the
/// lattice engine: plain permutation composition and hash sets only.
fn oracle_subgroup_count(g: &PermutationGroup) -> usize {
    let elems: Vec<Permutation> = g.elements().unwrap().to_vec();
    let n = elems.len();
    let max_gens = (n as f64).log2().floor() as usize;
    let mut subgroups: HashSet<Vec<Permutation>> = HashSet::new();

    let closure = |seed: &[&Permutation]| -> Vec<Permutation> {
        let mut set: HashSet<Permutation> = HashSet::new();
        let mut list: Vec<Permutation> = vec![Permutation::identity(g.degree())];
        set.insert(list[0].clone());
        for &s in seed {
            if set.insert(s.clone()) {
                list.push(s.clone());
            }
        }
        let mut i = 0;
        while i < list.len() {
            let cur = list[i].clone();
            i += 1;
            for &s in seed {
                let next = cur.compose(s);
                if set.insert(next.clone()) {
                    list.push(next);
                }
            }
        }
        list.sort();
        list
    };

    // enumerate subsets of size 0..=max_gens
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        elems: &[Permutation],
        start: usize,
        left: usize,
        stack: &mut Vec<usize>,
        subgroups: &mut HashSet<Vec<Permutation>>,
        closure: &dyn Fn(&[&Permutation]) -> Vec<Permutation>,
    ) {
        let seed: Vec<&Permutation> = stack.iter().map(|&i| &elems[i]).collect();
        subgroups.insert(closure(&seed));
        if left == 0 {
            return;
        }
        for i in start..elems.len() {
            stack.push(i);
            rec(elems, i + 1, left - 1, stack, subgroups, closure);
            stack.pop();
        }
    }
    rec(&elems, 0, max_gens, &mut stack, &mut subgroups, &closure);
    subgroups.len()
}

/// Criterion 8: the lattice engine agrees with the independent
/// subset-closure oracle on every corpus group of order ≤ 48; the Sym(4)
/// and Sym(3) counts are frozen regression values.
#[test]
fn criterion_8_lattice_oracle_agreement() {
    let started = Instant::now();
    let mut checked = 0;
    for g in &corpus().groups {
        if g.order() > 48 {
            continue;
        }
        let lat = g.lattice().unwrap();
        let expected = oracle_subgroup_count(g);
        assert_eq!(
            lat.subgroup_count(),
            expected,
            "{}: lattice disagrees with the subset-closure oracle",
            g.display_name()
        );
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} groups of order ≤ 48 in the corpus");

    let sym4 = build_group("Sym(4)", &caps()).unwrap();
    assert_eq!(sym4.lattice().unwrap().subgroup_count(), 30);
    let sym3 = build_group("Sym(3)", &caps()).unwrap();
    assert_eq!(sym3.lattice().unwrap().subgroup_count(), 6);
    println!(
        "[PASS] criterion 8: oracle agreement on {checked} groups (Sym4 = 30, Sym3 = 6), {:?}",
        started.elapsed()
    );
}
