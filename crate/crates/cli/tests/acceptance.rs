//! The acceptance gate: one check line per criterion, all of which must
//! pass, plus end-to-end smoke tests of the binary.

use std::process::Command;
use std::time::{Duration, Instant};

use graphon_cli::suites::{self, SuiteReport};

fn assert_criterion(id: u32, label: &str, report: &SuiteReport) {
    let pass = report.passed();
    println!(
        "criterion {id} ({label}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    if !pass {
        eprintln!("{}", report.render());
    }
    assert!(pass, "criterion {id} ({label}) failed");
}

#[test]
fn criterion_1_uniformity() {
    let start = Instant::now();
    let report = suites::uniformity(100_000, 7).unwrap();
    let elapsed = start.elapsed();
    assert_criterion(1, "conditioned 3-point uniformity", &report);
    assert!(
        elapsed < Duration::from_secs(30),
        "uniformity took {elapsed:?}, budget 30s"
    );
}

#[test]
fn criterion_2_conditional_entropy_dominates_image_pairs() {
    let report = suites::lemma_conditional(10_000, 12, 11).unwrap();
    assert_criterion(2, "conditional entropy >= C(|Im|,2)", &report);
}

#[test]
fn criterion_3_entropy_chain_at_4096() {
    let start = Instant::now();
    let report = suites::thm1_chain(1000, 13).unwrap();
    let elapsed = start.elapsed();
    assert_criterion(3, "entropy chain at n = 4096", &report);
    assert!(
        elapsed < Duration::from_secs(120),
        "chain took {elapsed:?}, budget 120s"
    );
}

#[test]
fn criterion_4_per_pair_entropy_limit() {
    let report = suites::eq1_limit(17).unwrap();
    assert_criterion(4, "per-pair entropy convergence", &report);
}

#[test]
fn criterion_5_distribution_lemmas() {
    let report = suites::lemma_approx(200, 19).unwrap();
    assert_criterion(5, "entropy continuity and distance bound", &report);
}

#[test]
fn criterion_6_linear_entropy_counterexample() {
    let report = suites::janson(9).unwrap();
    assert_criterion(6, "diagonal-block linear entropy", &report);
}

#[test]
fn criterion_7_mixture_excludes_b2() {
    let report = suites::remark2(10_000, 6, 23).unwrap();
    assert_criterion(7, "K_{2,2}-free mixture excludes B(2)", &report);
}

#[test]
fn criterion_8_support_bound() {
    let report = suites::support_bound(20, 29).unwrap();
    assert_criterion(8, "random-free support bound", &report);
}

#[test]
fn criterion_9_unlabeled_sandwich() {
    let report = suites::unlabeled_sandwich(50, 31).unwrap();
    assert_criterion(9, "unlabeled entropy sandwich", &report);
}

// --- binary smoke tests ---

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphon"))
}

#[test]
fn cli_build_and_sample_round_trip() {
    let dir = std::env::temp_dir().join("graphon-cli-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let spec_path = dir.join("step.json");

    let out = bin()
        .args([
            "build", "step", "--measures", "0.5,0.5", "--values", "0,1;1,0", "--out",
        ])
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let run = |seed: &str| {
        let o = bin()
            .args(["--seed", seed, "sample", "--graphon"])
            .arg(&spec_path)
            .args(["--n", "6", "--count", "5"])
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        String::from_utf8(o.stdout).unwrap()
    };
    let a = run("42");
    assert_eq!(a, run("42"), "same seed must give byte-identical output");
    assert_ne!(a, run("43"));
    assert_eq!(a.lines().count(), 5);
}

#[test]
fn cli_sample_requires_seed() {
    let dir = std::env::temp_dir().join("graphon-cli-seedless");
    std::fs::create_dir_all(&dir).unwrap();
    let spec_path = dir.join("diag.json");
    let out = bin()
        .args(["build", "diagonal-block", "--depth", "4", "--out"])
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(out.status.success());

    let o = bin()
        .args(["sample", "--graphon"])
        .arg(&spec_path)
        .args(["--n", "4"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2), "missing seed must be a usage error");
}

#[test]
fn cli_unknown_suite_is_usage_error() {
    let o = bin()
        .args(["verify", "--suite", "mystery", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cli_entropy_csv_shape() {
    let dir = std::env::temp_dir().join("graphon-cli-entropy");
    std::fs::create_dir_all(&dir).unwrap();
    let spec_path = dir.join("half.json");
    let out = bin()
        .args([
            "build", "step", "--measures", "1.0", "--values", "0.5", "--out",
        ])
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(out.status.success());

    let o = bin()
        .args(["entropy", "--graphon"])
        .arg(&spec_path)
        .args(["--n", "2:4", "--method", "exact"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,method,value_bits,stderr,runtime_ms"));
    let values: Vec<f64> = lines
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values, vec![1.0, 3.0, 6.0]);
}

#[test]
fn cli_verify_exit_codes() {
    let o = bin()
        .args(["verify", "--suite", "support-bound", "--seed", "4"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    // randomized suite without a seed: usage error
    let o = bin()
        .args(["verify", "--suite", "support-bound"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cli_density_bigraph_mixture_is_zero() {
    let dir = std::env::temp_dir().join("graphon-cli-density");
    std::fs::create_dir_all(&dir).unwrap();
    let spec_path = dir.join("mixture.json");
    let out = bin()
        .args([
            "build",
            "ktt-mixture",
            "--t",
            "2",
            "--nmax",
            "4",
            "--out",
        ])
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // B(2) in the bigraph text format: left V1={1,2} U1={3,4}, right likewise
    let b2 = "4 4 8\n1 1\n1 2\n2 1\n2 2\n1 3\n2 4\n3 1\n4 2\n";
    let pattern = dir.join("b2.bigraph");
    std::fs::write(&pattern, b2).unwrap();
    let o = bin()
        .args(["density", "--mode", "bigraph", "--pattern"])
        .arg(&pattern)
        .arg("--target")
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"].as_f64().unwrap(), 0.0);
    assert_eq!(v["exact"].as_str().unwrap(), "0");
}
