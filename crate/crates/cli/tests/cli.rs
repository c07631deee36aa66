use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    hecke_with_threads(args, None)
}

fn hecke_with_threads(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hecke"));
    cmd.args(args).current_dir(env!("CARGO_MANIFEST_DIR"));
    match threads {
        Some(t) => cmd.env("HECKE_THREADS", t),
        None => cmd.env_remove("HECKE_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn schema_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.json"))
}

/// Run with `--json`, validate against the named schema, return the document.
fn json_output(schema: &str, args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = hecke(&full);
    let doc: Value = serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
    let schema_doc: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(schema)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema_doc).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates {schema}.json: {errors:?}\n{doc:#}");
    (doc, code(&out))
}

#[test]
fn quadratic_normal_form() {
    let out = hecke(&["nf", "T1 T1", "--n", "2", "--field", "Qq"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(q-1)*T[1] + q\n");
}

#[test]
fn product_of_elements() {
    let out = hecke(&["mul", "X1", "T1", "--n", "2", "--field", "Q", "--q", "2"]);
    assert_eq!(code(&out), 0);
    // X_1 T_1 = T_1 X_2 - (q-1) X_2
    assert_eq!(stdout(&out), "T[1]*X^[0,1,0] - X^[0,1,0]\n");
}

#[test]
fn iso_exit_codes() {
    let out = hecke(&["iso", "--n", "2", "--q", "2", "--p", "1/2", "--field", "Q"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("verdict: Isomorphic (inverse)\n"));
    let out = hecke(&["iso", "--n", "2", "--q", "2", "--p", "3", "--field", "Q"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("verdict: NotIsomorphic\n"));
    let out = hecke(&["iso", "--n", "4", "--q", "3", "--p", "9", "--field", "Fp:11"]);
    assert_eq!(code(&out), 2);
    let out = hecke(&["iso", "--n", "2", "--q", "-2", "--p", "-1/2", "--field", "Q"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn symcheck_passes() {
    let out = hecke(&["symcheck", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 5);
    assert!(stdout(&out).lines().all(|l| l.ends_with("holds")));
}

#[test]
fn relcheck_outcomes() {
    let out = hecke(&["relcheck", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("21/21 relations hold\n"));

    let out = hecke(&["relcheck", "--n", "2", "--p", "1/q", "--images", "images/inverse_n2.txt"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let out = hecke(&["relcheck", "--n", "2", "--convention", "printed"]);
    assert_eq!(code(&out), 1);
    let failing: Vec<String> = stdout(&out).lines().filter(|l| l.starts_with("FAIL")).map(String::from).collect();
    assert_eq!(failing.len(), 2, "{failing:?}");
    assert!(failing[0].starts_with("FAIL  cross(1)"));

    let out = hecke(&["relcheck", "--n", "2", "--note-typo"]);
    let text = stdout(&out);
    assert_eq!(text.matches("note:").count(), 1);
    assert!(text.starts_with("note: cross relation taken as T_i X_i T_i = q X_(i+1)"));
}

#[test]
fn onedim_text() {
    let out = hecke(&["onedim", "--n", "2", "--q", "2", "--field", "Q", "--branch", "sign"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("a = (2, 1, 1/2)  character = (7/2, 7/2)\n"), "{}", stdout(&out));
}

#[test]
fn center_verify() {
    let out = hecke(&["center", "--n", "2", "--verify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 10);
}

#[test]
fn usage_errors() {
    for args in [
        vec!["bogus"],
        vec!["nf", "T1", "--field", "Q"],
        vec!["nf", "T1", "--field", "Fp:9", "--q", "2"],
        vec!["nf", "T3", "--n", "2"],
        vec!["nf", "T1", "--n", "0"],
        vec!["mul", "T1 +", "X1"],
        vec!["iso", "--n", "1", "--q", "2", "--p", "3", "--field", "Q"],
        vec!["iso", "--n", "2", "--q", "0", "--p", "3", "--field", "Q"],
        vec!["relcheck", "--images", "no/such/file.txt"],
    ] {
        let out = hecke(&args);
        assert_eq!(code(&out), 64, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(code(&hecke_with_threads(&["symcheck"], Some("zero"))), 64);
    assert_eq!(code(&hecke(&["--help"])), 0);
    assert_eq!(code(&hecke(&["iso", "--help"])), 0);
}

#[test]
fn json_outputs_match_schemas() {
    let (doc, _) = json_output("nf", &["nf", "T1 T1", "--n", "2"]);
    assert_eq!(doc["normal_form"]["text"], "(q-1)*T[1] + q");
    json_output("mul", &["mul", "T1*X1", "X2^-1 + 3", "--n", "3", "--field", "Fp:7", "--q", "3"]);

    let (doc, c) = json_output("relcheck", &["relcheck", "--n", "2", "--convention", "printed", "--note-typo"]);
    assert_eq!((doc["all_hold"].as_bool(), c), (Some(false), 1));
    assert_eq!(doc["notes"].as_array().unwrap().len(), 1);

    let (doc, _) = json_output("center", &["center", "--n", "3", "--verify"]);
    assert_eq!(doc.as_array().unwrap().len(), 3 * 7);
    json_output("center", &["center", "--n", "3"]);

    let (doc, _) = json_output("symcheck", &["symcheck", "--n", "4"]);
    assert_eq!(doc["all_hold"], true);

    let (doc, _) = json_output("onedim", &["onedim", "--n", "2", "--q", "2", "--field", "Q"]);
    assert_eq!(doc["modules"][0]["a"], serde_json::json!(["2", "1", "1/2"]));
    assert_eq!(doc["modules"][0]["character"], serde_json::json!(["7/2", "7/2"]));
    let (doc, _) = json_output("onedim", &["onedim", "--n", "3", "--branch", "index"]);
    assert_eq!(doc["parametric"], true);
    json_output("onedim", &["onedim", "--n", "2", "--q", "4", "--field", "Fp:7"]);

    let (doc, c) = json_output("iso", &["iso", "--n", "3", "--q", "2", "--p", "1/2", "--field", "Q"]);
    assert_eq!((doc["verdict"].as_str(), doc["direction"].as_str(), c), (Some("Isomorphic"), Some("inverse"), 0));
    assert_eq!(doc["witness"]["x"].as_array().unwrap().len(), 4);
    let (doc, c) = json_output("iso", &["iso", "--n", "2", "--q", "2", "--p", "3", "--field", "Q"]);
    assert_eq!((doc["verdict"].as_str(), c), (Some("NotIsomorphic"), 1));
    assert_eq!(doc["certificate"]["tried_shifts"].as_array().unwrap().len(), 6);
    assert_eq!(doc["certificate"]["q_progression"], serde_json::json!(["1", "2", "4"]));
    let (doc, c) = json_output("iso", &["iso", "--n", "4", "--q", "3", "--p", "9", "--field", "Fp:11"]);
    assert_eq!((doc["verdict"].as_str(), c), (Some("Inconclusive"), 2));
    json_output("iso", &["iso", "--n", "2", "--q", "q", "--p", "1/q"]);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    for args in [
        vec!["center", "--n", "3", "--verify", "--json"],
        vec!["relcheck", "--n", "3", "--convention", "printed"],
        vec!["iso", "--n", "3", "--q", "2", "--p", "5", "--field", "Q", "--json"],
    ] {
        let one = hecke_with_threads(&args, Some("1"));
        let many = hecke_with_threads(&args, Some("4"));
        let again = hecke_with_threads(&args, Some("4"));
        assert_eq!(one.stdout, many.stdout, "{args:?}");
        assert_eq!(many.stdout, again.stdout, "{args:?}");
    }
}
