use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use critobs::cli::{self, EXIT_DATA, EXIT_NOT_OBSERVABLE, EXIT_NO_INPUT, EXIT_OBSERVABLE, EXIT_UNKNOWN, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("critobs").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn models() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/models")
}

fn model(name: &str) -> String {
    models().join(name).display().to_string()
}

fn without_wall_time(mut report: Value) -> Value {
    report["statistics"].as_object_mut().unwrap().remove("wall_time_ms");
    report
}

fn check_args<'a>(kind: &'a str, dir: &'a str, extra: &[&'a str]) -> Vec<String> {
    let mut v: Vec<String> = vec!["check".into(), kind.into()];
    v.extend(["--model".into(), format!("{dir}/model.json"), "--critical".into(), format!("{dir}/critical.json")]);
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

/// gen → check → replay for one generator and seed. Returns the manifest.
fn round_trip(gen: &[&str], seed: u64, kind: &str, extra: &[&str]) -> Value {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().display().to_string();
    let seed = seed.to_string();
    let mut args = gen.to_vec();
    args.extend(["--seed", &seed, "--out", &dir]);
    let (code, _, err) = run(&args);
    assert_eq!(code, EXIT_OBSERVABLE, "{err}");
    let manifest: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("manifest.json")).unwrap()).unwrap();

    let mut check = check_args(kind, &dir, extra);
    check.push("--json".into());
    let check: Vec<&str> = check.iter().map(String::as_str).collect();
    let (code, out, err) = run(&check);
    let report: Value = serde_json::from_str(&out).unwrap_or_else(|_| panic!("{err}"));
    let expected = manifest["expected"].as_str().unwrap();
    let observed = report["outcome"].as_str().unwrap();
    if manifest["note"].is_string() {
        assert_eq!(observed, "unknown", "{manifest}");
        assert_eq!(code, EXIT_UNKNOWN);
    } else {
        assert_eq!(observed, expected, "{manifest}");
    }

    if observed == "not_critically_observable" {
        assert_eq!(code, EXIT_NOT_OBSERVABLE);
        let report_path = tmp.path().join("report.json");
        fs::write(&report_path, &out).unwrap();
        let mut replay = check_args("", &dir, &[]);
        replay.drain(..2);
        replay.insert(0, "replay".into());
        replay.extend(["--witness".into(), report_path.display().to_string()]);
        let replay: Vec<&str> = replay.iter().map(String::as_str).collect();
        let (code, out, _) = run(&replay);
        assert_eq!((code, out.as_str()), (EXIT_OBSERVABLE, "witness valid\n"));
    }
    manifest
}

#[test]
fn generated_instances_round_trip() {
    let cases: [(&[&str], &str, &[&str]); 6] = [
        (&["gen", "dag", "--size", "6"], "nfa", &[]),
        (&["gen", "dfa-intersection", "--size", "3"], "network", &[]),
        (&["gen", "dfa-intersection", "--size", "3", "--variant", "unobservable"], "network", &[]),
        (&["gen", "unary-intersection", "--size", "3"], "network", &["--unary"]),
        (&["gen", "petri-reach", "--size", "3"], "petri", &["--max-markings", "20000"]),
        (&["gen", "marking-inclusion", "--size", "2"], "petri", &[]),
    ];
    for (gen, kind, extra) in cases {
        let mut answers = Vec::new();
        for seed in 0..8 {
            answers.push(round_trip(gen, seed, kind, extra)["answer"].as_bool().unwrap());
        }
        // the seeds should not all give the same answer
        assert!(answers.contains(&true) && answers.contains(&false), "{gen:?}: {answers:?}");
    }
}

#[test]
fn unary_intersection_also_checks_by_twin_search() {
    for seed in 0..4 {
        round_trip(&["gen", "unary-intersection", "--size", "3"], seed, "network", &[]);
    }
}

#[test]
fn generation_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = dir.path().display().to_string();
        assert_eq!(run(&["gen", "marking-inclusion", "--seed", "7", "--out", &out]).0, 0);
    }
    for name in ["model.json", "critical.json", "a.json", "b.json", "manifest.json"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
}

#[test]
fn reports_are_deterministic_up_to_wall_time() {
    let (m, c) = (model("loop_branch.json"), model("loop_branch_critical.json"));
    let args = ["check", "nfa", "--model", &m, "--critical", &c, "--json"];
    let first: Value = serde_json::from_str(&run(&args).1).unwrap();
    let second: Value = serde_json::from_str(&run(&args).1).unwrap();
    assert_eq!(without_wall_time(first.clone()), without_wall_time(second));
    assert_eq!(first["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(first["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn text_report_shows_the_witness() {
    let (m, c) = (model("loop_branch.json"), model("loop_branch_critical.json"));
    let (code, out, _) = run(&["check", "nfa", "--model", &m, "--critical", &c]);
    assert_eq!(code, EXIT_NOT_OBSERVABLE);
    assert!(out.starts_with("not critically observable\nobservation: a\n"), "{out}");
    assert!(out.contains("end1 (critical): 0"), "{out}");
    assert!(out.contains("procedure: twin-bfs"), "{out}");
}

#[test]
fn every_network_procedure_agrees_on_the_handshake() {
    let (m, c) = (model("handshake.json"), model("handshake_critical.json"));
    for extra in [&[][..], &["--oracle"], &["--memory-bounded"]] {
        let mut args = vec!["check", "network", "--model", &m, "--critical", &c];
        args.extend(extra);
        let (code, out, err) = run(&args);
        assert_eq!(code, EXIT_NOT_OBSERVABLE, "{extra:?}: {err}");
        assert!(out.contains("observation: c\n"), "{out}");
    }
}

#[test]
fn empty_critical_set_is_observable() {
    let (m, c) = (model("loop_branch.json"), model("empty_critical.json"));
    assert_eq!(run(&["check", "nfa", "--model", &m, "--critical", &c, "--oracle"]).0, EXIT_OBSERVABLE);
}

#[test]
fn petri_report_carries_exploration_details() {
    let (m, c) = (model("generator_net.json"), model("generator_critical.json"));
    let (code, out, _) = run(&["check", "petri", "--model", &m, "--critical", &c, "--json"]);
    assert_eq!(code, EXIT_NOT_OBSERVABLE);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["details"]["procedure"], "twin-net-bfs");
    assert_eq!(report["details"]["exhaustive"], false);
}

#[test]
fn petri_limits_give_unknown() {
    let tmp = tempfile::tempdir().unwrap();
    let c = tmp.path().join("far.json");
    fs::write(&c, r#"{"mode": "finite", "markings": [[1, 5]]}"#).unwrap();
    let m = model("generator_net.json");
    let args = ["check", "petri", "--model", &m, "--critical", c.to_str().unwrap()];
    let mut limited = args.to_vec();
    limited.extend(["--max-markings", "4", "--json"]);
    let (code, out, _) = run(&limited);
    assert_eq!(code, EXIT_UNKNOWN);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["details"]["limit_hit"], "markings");
    assert_eq!(run(&args).0, EXIT_NOT_OBSERVABLE);
}

#[test]
fn observer_of_a_network_is_printed() {
    let (code, out, _) = run(&["observer", "--model", &model("handshake.json"), "--json"]);
    assert_eq!(code, EXIT_OBSERVABLE);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["estimates"].as_array().unwrap().len(), 3);
    assert_eq!(v["automaton"]["transitions"].as_array().unwrap().len(), 2);
}

#[test]
fn tampered_witness_is_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let (m, c) = (model("loop_branch.json"), model("loop_branch_critical.json"));
    let out = run(&["check", "nfa", "--model", &m, "--critical", &c, "--json"]).1;
    let mut report: Value = serde_json::from_str(&out).unwrap();
    report["witness"]["observation"] = serde_json::json!(["a", "a"]);
    let path = tmp.path().join("w.json");
    fs::write(&path, report.to_string()).unwrap();
    let (code, out, _) = run(&["replay", "--model", &m, "--critical", &c, "--witness", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_NOT_OBSERVABLE);
    assert!(out.starts_with("witness invalid: run1 observes"), "{out}");
}

#[test]
fn exit_codes_for_bad_input() {
    let tmp = tempfile::tempdir().unwrap();
    let c = model("loop_branch_critical.json");

    let (code, _, err) = run(&["check", "nfa", "--model", "/nonexistent/model.json", "--critical", &c]);
    assert_eq!(code, EXIT_NO_INPUT, "{err}");

    let (code, _, _) = run(&["check", "nfa", "--model", &c]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);

    let broken = tmp.path().join("broken.json");
    fs::write(&broken, "{\n  \"states\": [\"0\",\n").unwrap();
    let (code, _, err) = run(&["check", "nfa", "--model", broken.to_str().unwrap(), "--critical", &c]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("broken.json") && err.contains("line"), "{err}");

    let bad_step = tmp.path().join("bad_step.json");
    fs::write(
        &bad_step,
        r#"{"states": ["0"], "events": [{"name": "a", "observable": true}], "transitions": [["0", "a", "0"], ["0", "b", "0"]], "initial": ["0"]}"#,
    )
    .unwrap();
    let (code, _, err) = run(&["check", "nfa", "--model", bad_step.to_str().unwrap(), "--critical", &c]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("transitions[1]"), "{err}");

    let bad_critical = tmp.path().join("bad_critical.json");
    fs::write(&bad_critical, r#"{"states": ["9"]}"#).unwrap();
    let (code, _, err) = run(&["check", "nfa", "--model", &model("loop_branch.json"), "--critical", bad_critical.to_str().unwrap()]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains('9'), "{err}");
}

#[test]
fn binary_reports_through_its_exit_status() {
    let status = Command::new(env!("CARGO_BIN_EXE_critobs"))
        .args(["check", "nfa", "--model", &model("two_initial.json"), "--critical", &model("two_initial_critical.json")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_NOT_OBSERVABLE));
    assert!(String::from_utf8_lossy(&status.stdout).starts_with("not critically observable"));
}
