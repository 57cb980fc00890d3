//! CLI contract tests: subcommand output shapes, the JSON schema, exit
//! codes, and the spec-file round trip.

use std::process::Command;

use serde_json::Value;

fn xmax(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_xmax"))
        .args(args)
        .env_remove("XMAX_CAPS")
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
        output.status.code().unwrap_or(-1),
    )
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("bad JSON ({e}): {s}"))
}

#[test]
fn kx_sym3_abelian_prints_two() {
    let (out, _, code) = xmax(&["kx", "--group", "Sym(3)", "--class", "abelian"]);
    assert_eq!(code, 0);
    assert!(out.contains("k = 2"), "{out}");

    let (out, _, code) = xmax(&["kx", "--group", "Sym(3)", "--class", "abelian", "--json"]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["k"], 2);
    assert_eq!(v["class_spec"], "abelian");
}

#[test]
fn kx_trivial_group_over_pi2() {
    let (out, _, code) = xmax(&["kx", "--group", "Z(1)", "--class", "pi", "--primes", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["k"], 1);
}

#[test]
fn check_pair_product_example() {
    let (out, _, code) = xmax(&[
        "check-pair",
        "--group",
        "Sym(3)×Alt(5)",
        "--normal",
        "1×Alt(5)",
        "--class",
        "pi",
        "--primes",
        "2,3",
        "--json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v = parse(&out);
    let pair = &v["pairs"][0];
    assert_eq!(pair["equality"], false);
    assert_eq!(pair["k_normal"], 2);
    assert_eq!(pair["consistent"], true);
    assert_eq!(pair["normal_order"], 60);
}

#[test]
fn flags_alt5_json_schema() {
    let (out, _, code) = xmax(&[
        "flags", "--group", "Alt(5)", "--class", "pi", "--primes", "2,3", "--json",
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["flags"]["E"], true);
    assert_eq!(v["flags"]["C"], true);
    assert_eq!(v["flags"]["M"], false);
    assert_eq!(v["flags"]["D"], false);
}

#[test]
fn reduce_product_identifies_alt5() {
    let (out, _, code) = xmax(&[
        "reduce", "--group", "Sym(3)×Alt(5)", "--class", "pi", "--primes", "2,3", "--json",
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["radical_order"], 6);
    assert_eq!(v["full_reduction"]["order"], 60);
    assert_eq!(v["full_reduction"]["iso_name"], "Alt(5)");
}

#[test]
fn equiv_positional_arguments() {
    let (out, _, code) = xmax(&[
        "equiv", "Sym(3)×Alt(5)", "Alt(5)", "--class", "pi", "--primes", "2,3", "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["equivalent"], true);

    let (out, _, code) = xmax(&["equiv", "Sym(3)", "Z(1)", "--class", "pi", "--primes", "2,3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["equivalent"], true, "both fully reduce to 1");
}

#[test]
fn usage_errors_exit_two() {
    let (_, err, code) = xmax(&["kx", "--group", "Sym(3)", "--class", "borel"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: kind=usage"), "{err}");

    let (_, err, code) = xmax(&["kx", "--group", "Nope(9)", "--class", "abelian"]);
    assert_eq!(code, 2);
    assert!(err.contains("kind=usage"), "{err}");

    let (_, _, code) = xmax(&["suite", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn cap_exceeded_exits_three() {
    let (_, err, code) = xmax(&[
        "kx", "--group", "Sym(4)", "--class", "abelian", "--lattice-cap", "2",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("kind=cap-exceeded"), "{err}");
}

#[test]
fn env_var_overrides_caps() {
    let output = Command::new(env!("CARGO_BIN_EXE_xmax"))
        .args(["kx", "--group", "Sym(4)", "--class", "abelian"])
        .env("XMAX_CAPS", "lattice=2")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn group_spec_file_roundtrip() {
    let dir = std::env::temp_dir().join(format!("xmax-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d12.grp");
    std::fs::write(&path, "degree: 6\n(0 1 2 3 4 5)\n(1 5)(2 4)\n").unwrap();

    let (out, _, code) = xmax(&[
        "kx",
        "--group",
        path.to_str().unwrap(),
        "--class",
        "pi",
        "--primes",
        "2",
        "--json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v = parse(&out);
    assert_eq!(v["k"], 1, "D12 has one class of Sylow 2-subgroups");

    // reloaded file is isoschematically the same group as the catalog D(12)
    let (out, _, code) = xmax(&[
        "equiv",
        path.to_str().unwrap(),
        "D(12)",
        "--class",
        "pi",
        "--primes",
        "2,3",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["equivalent"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn normal_subgroup_from_file() {
    let dir = std::env::temp_dir().join(format!("xmax-norm-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.grp");
    std::fs::write(&path, "degree: 3\n(0 1 2)\n").unwrap();
    let (out, _, code) = xmax(&[
        "check-pair",
        "--group",
        "Sym(3)",
        "--normal",
        path.to_str().unwrap(),
        "--class",
        "abelian",
        "--json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v = parse(&out);
    assert_eq!(v["pairs"][0]["k_normal"], 1);
    assert_eq!(v["pairs"][0]["equality"], false);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn non_normal_pattern_rejected() {
    // Sym(3) as a slot inside Sym(3)×Alt(5) is not normal on its own axis?
    // it is normal; use a genuinely non-normal file instead
    let dir = std::env::temp_dir().join(format!("xmax-nn-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.grp");
    std::fs::write(&path, "degree: 3\n(0 1)\n").unwrap();
    let (_, err, code) = xmax(&[
        "check-pair",
        "--group",
        "Sym(3)",
        "--normal",
        path.to_str().unwrap(),
        "--class",
        "abelian",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("not normal"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn suite_counterexample_passes() {
    let (out, _, code) = xmax(&["suite", "counterexample-noncomplete", "--json"]);
    assert_eq!(code, 0, "{out}");
    let v = parse(&out);
    assert_eq!(v["suite"], "counterexample-noncomplete");
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["instances"], 2);
}

#[test]
fn suite_with_config_file_and_output() {
    let dir = std::env::temp_dir().join(format!("xmax-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("suite.cfg");
    let out_path = dir.join("result.json");
    std::fs::write(
        &cfg,
        format!(
            "tier = 1\nclasses = pi{{2}} pi{{2,3}}\nmax_order = 24\noutput = {}\n",
            out_path.display()
        ),
    )
    .unwrap();
    let (_, _, code) = xmax(&["suite", "theorem1", "--config", cfg.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&out_path).unwrap();
    let v = parse(&written);
    assert_eq!(v["suite"], "theorem1");
    assert!(v["violations"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn catalog_lists_names() {
    let (out, _, code) = xmax(&["catalog"]);
    assert_eq!(code, 0);
    assert!(out.contains("PSL(2,7)"));
    assert!(out.contains("Sym(3)×Alt(5)"));

    let (out, _, code) = xmax(&["catalog", "--json"]);
    assert_eq!(code, 0);
    let v = parse(&out);
    let entries = v["catalog"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["name"] == "PSL(2,7)" && e["order"] == 168));
}

#[test]
fn hallx_reports_h() {
    let (out, _, code) = xmax(&[
        "hallx", "--group", "Alt(5)", "--class", "pi", "--primes", "2,3", "--json",
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["h"], 1);
    assert_eq!(v["scheme"][0]["order"], 12);
}

#[test]
fn radical_of_product() {
    let (out, _, code) = xmax(&[
        "radical", "--group", "Sym(3)×Alt(5)", "--class", "pi", "--primes", "2,3", "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["radical_order"], 6);
}
