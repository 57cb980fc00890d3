//! Command-line front end: load groups from catalog names or spec files,
//! run single computations or verification suites, and emit human-readable
//! tables or machine-readable JSON.
//!
//! Exit codes: 0 success, 1 theorem-violation detected, 2 usage error,
//! 3 cap exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use xmax_core::catalog;
use xmax_core::classes::ClassFamily;
use xmax_core::error::Error;
use xmax_core::report::{
    FlagsJson, FullReductionJson, GroupReportJson, PairJson, SchemeEntryJson,
};
use xmax_core::specfile;
use xmax_core::{Caps, GroupClassDescriptor, PermutationGroup, Subgroup};

#[derive(Parser)]
#[command(
    name = "xmax",
    about = "Finite-group engine: conjugacy classes of X-maximal subgroups and class-number reductions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Print timing information to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Clone)]
struct CapArgs {
    #[arg(long, global = true)]
    order_cap: Option<u128>,
    #[arg(long, global = true)]
    element_cap: Option<u64>,
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    #[arg(long, global = true)]
    lattice_cap: Option<u64>,
    #[arg(long, global = true)]
    iso_cap: Option<u64>,
}

#[derive(Args, Clone)]
struct ClassArgs {
    /// Class family: pi | solvable-pi | pi-separable | pi-solvable |
    /// abelian | nilpotent | all | trivial; `pi{2,3}` syntax also works.
    #[arg(long)]
    class: String,

    /// Primes for the π-families, e.g. `2,3`.
    #[arg(long)]
    primes: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print k_X and the scheme (one representative per class).
    Kx {
        /// Catalog name (e.g. "Sym(3)", "PSL(2,7)", "Sym(3)×Alt(5)") or a
        /// group spec file path.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Print h_X and the X-Hall classes.
    Hallx {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Print the E/C/M/D flags.
    Flags {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Print the radical (largest normal subgroup preserving k_X).
    Radical {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Print the full reduction (quotient by the radical).
    Reduce {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Verify the reduction statement for a pair (G, N).
    CheckPair {
        #[arg(long)]
        group: String,
        /// Normal subgroup: a spec file path, or a factor pattern such as
        /// "1×Alt(5)" resolved against the group's product structure.
        #[arg(long)]
        normal: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Are two groups isoschematic over X (isomorphic full reductions)?
    Equiv {
        group1: String,
        group2: String,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Run a verification suite.
    Suite {
        /// One of: theorem1, corollary2, corollary3, corollary4,
        /// proposition1-iso, corollary6, lemma1-lift, lemma2-hall,
        /// frattini, class-numbers, closure-audit,
        /// counterexample-noncomplete.
        name: String,
        /// Key-value config file (tier, classes, max_order, output).
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// List the built-in catalog names.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(violation_detected) => {
            if violation_detected {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let kind = match &e {
                Error::TheoremViolation(_) => "theorem-violation",
                Error::CapExceeded { .. } => "cap-exceeded",
                _ => "usage",
            };
            eprintln!("error: kind={kind} detail={e}");
            match e {
                Error::TheoremViolation(_) => ExitCode::from(1),
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn caps_from(cli: &Cli) -> Result<Caps, Error> {
    let mut caps = Caps::default();
    // environment overrides, then flags
    if let Ok(spec) = std::env::var("XMAX_CAPS") {
        for part in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad XMAX_CAPS entry: {part}")))?;
            let v: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad XMAX_CAPS value: {part}")))?;
            match key.trim() {
                "order" => caps.order_cap = v as u128,
                "elements" => caps.element_cap = v,
                "degree" => caps.degree_cap = v as u32,
                "lattice" => caps.lattice_cap = v,
                "iso" => caps.iso_cap = v,
                other => return Err(Error::Parse(format!("unknown XMAX_CAPS key: {other}"))),
            }
        }
    }
    if let Some(v) = cli.caps.order_cap {
        caps.order_cap = v;
    }
    if let Some(v) = cli.caps.element_cap {
        caps.element_cap = v;
    }
    if let Some(v) = cli.caps.degree_cap {
        caps.degree_cap = v;
    }
    if let Some(v) = cli.caps.lattice_cap {
        caps.lattice_cap = v;
    }
    if let Some(v) = cli.caps.iso_cap {
        caps.iso_cap = v;
    }
    Ok(caps)
}

fn parse_class(args: &ClassArgs) -> Result<GroupClassDescriptor, Error> {
    if args.class.contains('{') {
        return GroupClassDescriptor::parse_spec(&args.class);
    }
    let family = match args.class.as_str() {
        "pi" => ClassFamily::Pi,
        "solvable-pi" => ClassFamily::SolvablePi,
        "pi-separable" => ClassFamily::PiSeparable,
        "pi-solvable" => ClassFamily::PiSolvable,
        "abelian" => ClassFamily::Abelian,
        "nilpotent" => ClassFamily::Nilpotent,
        "all" => ClassFamily::All,
        "trivial" | "trivial-only" => ClassFamily::TrivialOnly,
        other => return Err(Error::Parse(format!("unknown class family: {other}"))),
    };
    let primes: Vec<u64> = match &args.primes {
        None => Vec::new(),
        Some(ps) => ps
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad prime: {t}")))
            })
            .collect::<Result<_, _>>()?,
    };
    GroupClassDescriptor::new(family, primes)
}

fn load_group(source: &str, caps: &Caps) -> Result<PermutationGroup, Error> {
    if Path::new(source).exists() {
        let text = std::fs::read_to_string(source)?;
        let name = Path::new(source)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned());
        specfile::parse_group_spec(&text, name, caps)
    } else {
        catalog::build_group(source, caps)
    }
}

fn load_normal(
    g: &PermutationGroup,
    group_source: &str,
    normal_source: &str,
    caps: &Caps,
) -> Result<Subgroup, Error> {
    let sub = if Path::new(normal_source).exists() {
        let text = std::fs::read_to_string(normal_source)?;
        let spec = specfile::parse_group_spec(&text, None, caps)?;
        g.subgroup_generated(spec.generators())?
    } else {
        catalog::resolve_factor_pattern(g, group_source, normal_source, caps)?
    };
    if !sub.is_normal()? {
        return Err(Error::NotNormal);
    }
    Ok(sub)
}

/// Best-effort identification of a small group against catalog names.
fn identify(g: &PermutationGroup, caps: &Caps) -> Option<String> {
    let mut candidates: Vec<String> = catalog::default_corpus_names()
        .into_iter()
        .map(|s| s.to_string())
        .collect();
    candidates.extend(["PGL(2,7)".to_string(), "PSL(2,8)".to_string(), "PSL(2,11)".to_string()]);
    for name in candidates {
        if let Ok(candidate) = catalog::build_group(&name, caps) {
            if candidate.order() == g.order() {
                if let Ok(Some(_)) = xmax_core::iso::are_isomorphic(g, &candidate) {
                    return Some(name);
                }
            }
        }
    }
    None
}

fn emit(cli: &Cli, human: String, json: serde_json::Value) -> Result<(), Error> {
    let text = if cli.json {
        serde_json::to_string_pretty(&json).expect("serializable") + "\n"
    } else {
        human
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn scheme_entries(reps: &[Subgroup], sizes: &[u64]) -> Vec<SchemeEntryJson> {
    reps.iter()
        .zip(sizes)
        .map(|(r, &n)| SchemeEntryJson {
            order: r.order(),
            class_size: n,
            generators: r.generators().iter().map(|p| p.to_string()).collect(),
        })
        .collect()
}

fn scheme_table(reps: &[Subgroup], sizes: &[u64]) -> String {
    let mut out = String::new();
    for (r, &n) in reps.iter().zip(sizes) {
        let gens: Vec<String> = r.generators().iter().map(|p| p.to_string()).collect();
        out.push_str(&format!(
            "  order {:>6}  class size {:>6}  gens {}\n",
            r.order(),
            n,
            gens.join(" ")
        ));
    }
    out
}

/// Returns `Ok(true)` when a theorem violation was detected (exit 1).
fn run(cli: &Cli) -> Result<bool, Error> {
    let caps = caps_from(cli)?;
    let started = Instant::now();
    let result = dispatch(cli, &caps);
    if cli.verbose {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    result
}

fn dispatch(cli: &Cli, caps: &Caps) -> Result<bool, Error> {
    match &cli.command {
        Command::Kx { group, class } => {
            let g = load_group(group, caps)?;
            let x = parse_class(class)?;
            let scheme = xmax_core::reduction::x_maximal_classes(&g, &x)?;
            let human = format!(
                "group: {}  order {}\nclass: {}\nk = {}\nscheme:\n{}",
                g.display_name(),
                g.order(),
                x.spec_string(),
                scheme.k(),
                scheme_table(&scheme.class_reps, &scheme.class_sizes)
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                k: Some(scheme.k()),
                scheme: scheme_entries(&scheme.class_reps, &scheme.class_sizes),
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            Ok(false)
        }
        Command::Hallx { group, class } => {
            let g = load_group(group, caps)?;
            let x = parse_class(class)?;
            let hall = xmax_core::reduction::hall_x_classes(&g, &x)?;
            let human = format!(
                "group: {}  order {}\nclass: {}\nh = {}\nhall classes:\n{}",
                g.display_name(),
                g.order(),
                x.spec_string(),
                hall.h(),
                scheme_table(&hall.class_reps, &hall.class_sizes)
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                h: Some(hall.h()),
                scheme: scheme_entries(&hall.class_reps, &hall.class_sizes),
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            Ok(false)
        }
        Command::Flags { group, class } => {
            let g = load_group(group, caps)?;
            let x = parse_class(class)?;
            let flags = xmax_core::reduction::class_flags(&g, &x)?;
            let human = format!(
                "group: {}  order {}\nclass: {}\nE={} C={} M={} D={}\n",
                g.display_name(),
                g.order(),
                x.spec_string(),
                flags.e_x,
                flags.c_x,
                flags.m_x,
                flags.d_x
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                flags: Some(FlagsJson::from(flags)),
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            Ok(false)
        }
        Command::Radical { group, class } => {
            let g = load_group(group, caps)?;
            let x = parse_class(class)?;
            let r = xmax_core::reduction::d_x_radical(&g, &x)?;
            let gens: Vec<String> = r.generators().iter().map(|p| p.to_string()).collect();
            let human = format!(
                "group: {}  order {}\nclass: {}\nradical order {}  gens {}\n",
                g.display_name(),
                g.order(),
                x.spec_string(),
                r.order(),
                gens.join(" ")
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                radical_order: Some(r.order()),
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            Ok(false)
        }
        Command::Reduce { group, class } => {
            let g = load_group(group, caps)?;
            let x = parse_class(class)?;
            let r = xmax_core::reduction::d_x_radical(&g, &x)?;
            let (q, _) = xmax_core::reduction::full_reduction(&g, &x)?;
            let iso_name = identify(&q, caps);
            let human = format!(
                "group: {}  order {}\nclass: {}\nradical order {}\nfull reduction: order {}{}\n",
                g.display_name(),
                g.order(),
                x.spec_string(),
                r.order(),
                q.order(),
                iso_name
                    .as_ref()
                    .map(|n| format!("  ≅ {n}"))
                    .unwrap_or_default()
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                radical_order: Some(r.order()),
                full_reduction: Some(FullReductionJson {
                    order: q.order(),
                    iso_name,
                }),
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            Ok(false)
        }
        Command::CheckPair {
            group,
            normal,
            class,
        } => {
            let g = load_group(group, caps)?;
            let n = load_normal(&g, group, normal, caps)?;
            let x = parse_class(class)?;
            let r = xmax_core::reduction::reduction_check(&g, &n, &x)?;
            let human = format!(
                "group: {}  order {}\nnormal: order {}\nclass: {}\nk(G) = {}  k(G/N) = {}  k(N) = {}\nequality: {}  consistent: {}  bijection: {}\n",
                g.display_name(),
                g.order(),
                n.order(),
                x.spec_string(),
                r.k_g,
                r.k_quotient,
                r.k_n,
                r.equality,
                r.theorem_consistent,
                r.scheme_bijection_ok
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "n/a".into())
            );
            let report = GroupReportJson {
                group: g.display_name(),
                class_spec: x.spec_string(),
                k: Some(r.k_g),
                pairs: vec![PairJson::from(&r)],
                ..Default::default()
            };
            emit(cli, human, serde_json::to_value(report).expect("serializable"))?;
            // an inconsistent pair under a complete class is a detected violation
            Ok(r.class_complete && !r.theorem_consistent)
        }
        Command::Equiv {
            group1,
            group2,
            class,
        } => {
            let g1 = load_group(group1, caps)?;
            let g2 = load_group(group2, caps)?;
            let x = parse_class(class)?;
            let equivalent = xmax_core::reduction::isoschematic_equivalent(&g1, &g2, &x)?;
            let human = format!(
                "{} ≡ {} over {}: {}\n",
                g1.display_name(),
                g2.display_name(),
                x.spec_string(),
                equivalent
            );
            let json = serde_json::json!({
                "group": g1.display_name(),
                "other": g2.display_name(),
                "class_spec": x.spec_string(),
                "equivalent": equivalent,
            });
            emit(cli, human, json)?;
            Ok(false)
        }
        Command::Suite { name, config } => {
            let cfg = match config {
                Some(path) => xmax_core::suites::SuiteConfig::parse(&std::fs::read_to_string(
                    path,
                )?)?,
                None => xmax_core::suites::SuiteConfig::default(),
            };
            let result = xmax_core::suites::run_suite(name, &cfg, caps)?;
            let mut human = format!(
                "suite {}: {} instances, {} violations, {} ms\n",
                result.suite,
                result.instances,
                result.violations.len(),
                result.elapsed.as_millis()
            );
            for v in &result.violations {
                human.push_str(&format!("  VIOLATION [{}] {}\n", v.context, v.detail));
            }
            for note in &result.notes {
                human.push_str(&format!("  note: {note}\n"));
            }
            human.push_str(if result.passed() { "PASS\n" } else { "FAIL\n" });
            let json = serde_json::to_value(result.to_json()).expect("serializable");
            // honor the config's output path unless the CLI overrides it
            if cli.output.is_none() {
                if let Some(path) = &cfg.output {
                    let text = if cli.json {
                        serde_json::to_string_pretty(&json).expect("serializable") + "\n"
                    } else {
                        human.clone()
                    };
                    std::fs::write(path, text)?;
                }
            }
            emit(cli, human, json)?;
            Ok(!result.passed())
        }
        Command::Catalog => {
            let mut human = String::from("catalog names (parameterized families):\n");
            human.push_str("  Z(n), D(n) [n even ≥ 4], Q(n) [n = 2^k ≥ 8], Sym(n), Alt(n) [n ≤ 12],\n");
            human.push_str("  PSL(2,q), PGL(2,q) [q prime power ≤ 13], products with ×\n\ndefault corpus:\n");
            let mut entries = Vec::new();
            for name in catalog::default_corpus_names() {
                let g = catalog::build_group(name, caps)?;
                human.push_str(&format!("  {:<16} order {:>6}  degree {:>4}\n", name, g.order(), g.degree()));
                entries.push(serde_json::json!({
                    "name": name, "order": g.order(), "degree": g.degree(),
                }));
            }
            emit(cli, human, serde_json::json!({ "catalog": entries }))?;
            Ok(false)
        }
    }
}
