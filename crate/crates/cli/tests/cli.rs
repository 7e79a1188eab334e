use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiveralg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn run_json(args: &[&str]) -> (Output, Value, String) {
    let dir = std::env::temp_dir().join(format!("quiveralg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let tag: String = args.join("_").chars().filter(|c| c.is_ascii_alphanumeric()).collect();
    let path = dir.join(format!("{}.json", &tag[tag.len().saturating_sub(60)..]));
    let mut full: Vec<&str> = args.to_vec();
    let p = path.display().to_string();
    full.extend(["--json", &p]);
    let o = run(&full);
    let text = std::fs::read_to_string(&path).expect("report written");
    (o, serde_json::from_str(&text).unwrap(), text)
}

fn schema_validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("docs/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn classify_diamond_ba_is_derived_discrete_with_counts_1_0() {
    let o = run(&["classify", &fixture("diamond_ba.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("DerivedDiscrete(GentleOneCycleClock)"), "{s}");
    assert!(s.contains("clock counts (1, 0)"), "{s}");
}

#[test]
fn classify_diamond_ba_dc_is_a_negative() {
    let o = run(&["classify", &fixture("diamond_ba_dc.quiver")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("clock counts (1, 1)"));
}

#[test]
fn classify_single_vertex() {
    let o = run(&["classify", &fixture("empty.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("DerivedDiscrete(HereditaryDynkin(A1))"));
}

#[test]
fn quotient_is_separable() {
    let o = run(&["witness", "separable", "--quotient", &fixture("diamond_ba.quiver"), "--add", "d*c"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("re-verified: true"));
}

#[test]
fn missing_separability_idempotent_exits_2() {
    let o = run(&[
        "witness",
        "separable",
        "--skew",
        &fixture("diamond_ba_f2.quiver"),
        "--action",
        &fixture("z2_trivial.json"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_1_and_name_the_variant() {
    let o = run(&["complex", "resolve", &fixture("diamond_ba.quiver"), "--simple", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UnknownVertex"));

    let (o, v, _) = run_json(&["complex", "sample", &fixture("diamond_ba.quiver"), "--cdim", "0:1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(v["verdicts"]["error"]["name"], "InfiniteFieldUnsupported");
}

#[test]
fn usage_errors_are_rejected() {
    let o = run(&["witness", "split"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_rejects_non_admissible() {
    let o = run(&["validate", &fixture("diamond.quiver"), "--cap", "1"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cases: Vec<Vec<String>> = vec![
        vec!["classify".into(), fixture("diamond_ba.quiver")],
        vec![
            "experiment".into(),
            "prop53".into(),
            "--skew".into(),
            fixture("diamond_ba.quiver"),
            "--action".into(),
            fixture("z2_trivial.json"),
            "--seed".into(),
            "7".into(),
        ],
        vec![
            "complex".into(),
            "sample".into(),
            fixture("diamond_ba_f2.quiver"),
            "--cdim".into(),
            "-1:1,0:1".into(),
        ],
    ];
    for case in cases {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let (_, _, first) = run_json(&args);
        let (_, _, second) = run_json(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn every_command_emits_a_schema_valid_report() {
    let validator = schema_validator();
    let ba = fixture("diamond_ba.quiver");
    let diamond = fixture("diamond.quiver");
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate", &ba],
        vec!["classify", &ba],
        vec!["extend", "quotient", &diamond, "--add", "b*a"],
        vec!["witness", "split", "--base-change", &ba, "--field", "Q[x]/(x^2-2)"],
        vec!["witness", "projective", "--quotient", &diamond, "--add", "b*a"],
        vec!["experiment", "theorem41", "--quotient", &diamond, "--add", "b*a"],
        vec!["complex", "bound", &ba, "--cohomology", "0:1", "--from", "-2"],
        vec!["complex", "resolve", &ba, "--simple", "1", "--depth", "3"],
        vec!["complex", "sample", &ba, "--cdim", "0:1"],
    ];
    for args in cases {
        let (_, v, _) = run_json(&args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn minimize_cancels_the_contractible_summand() {
    let (o, v, _) = run_json(&[
        "complex",
        "minimize",
        &fixture("diamond_ba.quiver"),
        "--complex",
        &fixture("complex_contractible.json"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(v["verdicts"]["minimizedComponentDims"], serde_json::json!({"-1": 1}));
    assert_eq!(v["verdicts"]["minimizedMinimal"], true);
    assert_eq!(v["verdicts"]["inputCohomologyDims"], v["verdicts"]["minimizedCohomologyDims"]);
}

#[test]
fn sample_carries_the_finite_field_caveat() {
    let (o, v, _) = run_json(&["complex", "sample", &fixture("diamond_ba_f3.quiver"), "--cdim", "-1:1,0:1"]);
    assert_eq!(o.status.code(), Some(0));
    let caveats = v["caveats"].as_array().unwrap();
    assert!(caveats.iter().any(|c| c.as_str().unwrap().contains("infinite field")));
}

#[test]
fn resolve_stays_within_the_bound() {
    let (_, v, _) = run_json(&["complex", "resolve", &fixture("diamond_ba.quiver"), "--simple", "1", "--depth", "5"]);
    assert_eq!(v["verdicts"]["withinBound"], true);
    assert_eq!(v["verdicts"]["complete"], true);
}
