use std::process::Command as Process;

use nullcone_cli::report::JsonCandidateList;
use nullcone_cli::{run, Command, JsonReport, RunConfig, EXIT_INVALID, EXIT_OK, EXIT_RESOURCE};

fn run_capture(config: &RunConfig) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(config, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stratify_json(spec: &str) -> (JsonReport, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut c = RunConfig::new(Command::Stratify, spec);
    c.json = Some(path.clone());
    let (code, _, err) = run_capture(&c);
    assert_eq!(code, EXIT_OK, "{err}");
    let text = std::fs::read_to_string(path).unwrap();
    (serde_json::from_str(&text).unwrap(), text)
}

#[test]
fn g2_text_report() {
    let (code, out, _) = run_capture(&RunConfig::new(Command::Stratify, "g2-adjoint"));
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("6 candidates, 4 strata"), "{out}");
}

#[test]
fn ternary_quartics_json() {
    let (report, text) = stratify_json("sl3-forms:4");
    assert_eq!(report.nullcone.dim, 11);
    assert_eq!(report.candidates.len(), 12);
    assert_eq!(report.strata.len(), 11);
    // round trip and byte-identical reruns
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    assert_eq!(stratify_json("sl3-forms:4").1, text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["l", "M", "stratifying", "tree"] {
        assert!(v["candidates"][0].get(key).is_some(), "{key}");
    }
    for key in ["l", "dim", "open_in_V", "support_V_l", "support_V_l_plus", "levi_roots", "parabolic_roots", "generic_rep"] {
        assert!(v["strata"][0].get(key).is_some(), "{key}");
    }
    assert!(v["nullcone"]["equals_V"].is_boolean());
    assert!(v["strata"][0]["l"][0].is_string());
}

#[test]
fn non_positive_definite_gram_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"rank": 2, "gram": [[1, 2], [2, 1]], "roots": [], "weights": [{"v": ["1", "0"], "mult": 1}]}"#,
    )
    .unwrap();
    let (code, _, err) = run_capture(&RunConfig::new(Command::Stratify, path.to_str().unwrap()));
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("gram not positive definite at minor 2"), "{err}");
}

#[test]
fn problem_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.json");
    std::fs::write(
        &path,
        r#"{"rank": 1, "gram": [["1/2"]], "roots": [["2"], ["-2"]],
            "weights": [{"v": ["1"], "mult": 1}, {"v": ["-1"], "mult": 1}], "weyl": {"mode": "from_roots"}}"#,
    )
    .unwrap();
    let (code, out, err) = run_capture(&RunConfig::new(Command::Stratify, path.to_str().unwrap()));
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("1 candidates, 1 strata"), "{out}");
}

#[test]
fn orbit_cap_is_a_resource_error() {
    let mut c = RunConfig::new(Command::Stratify, "g2-adjoint");
    c.orbit_cap = Some(3);
    let (code, _, err) = run_capture(&c);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(err.contains("orbit cap"), "{err}");
}

#[test]
fn unknown_input_names_itself() {
    let (code, _, err) = run_capture(&RunConfig::new(Command::Stratify, "no-such-thing:3"));
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("no-such-thing:3"), "{err}");
}

#[test]
fn svg_for_ternary_quartics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let mut c = RunConfig::new(Command::Stratify, "sl3-forms:4");
    c.svg = Some(path.clone());
    assert_eq!(run_capture(&c).0, EXIT_OK);
    let svg = std::fs::read_to_string(path).unwrap();
    assert_eq!(svg.matches(r#"<circle class="weight""#).count(), 15);
    assert_eq!(svg.matches(r#"<circle class="root""#).count(), 6);
    assert_eq!(svg.matches(r#"<line class="stratifying""#).count(), 11);
    assert_eq!(svg.matches(r#"<line class="excluded""#).count(), 1);
}

#[test]
fn svg_number_line_and_torus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let mut c = RunConfig::new(Command::Stratify, "sl2-forms:2,3,3,4,5");
    c.svg = Some(path.clone());
    assert_eq!(run_capture(&c).0, EXIT_OK);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"<circle class="weight""#).count(), 11);
    // multiplicity labels at −5..5
    let labels: Vec<&str> = svg
        .lines()
        .filter(|l| l.contains(r#"class="mult""#))
        .map(|l| l.rsplit('>').nth(1).unwrap().trim_end_matches("</text"))
        .collect();
    assert_eq!(labels, ["1", "1", "3", "2", "3", "2", "3", "2", "3", "1", "1"]);

    let mut c = RunConfig::new(Command::Stratify, "torus:1,1");
    c.svg = Some(path.clone());
    assert_eq!(run_capture(&c).0, EXIT_OK);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"<circle class="weight""#).count(), 1);
    assert_eq!(svg.matches("<line class=\"stratifying\"").count(), 1);
}

#[test]
fn svg_rejects_rank_three() {
    let mut c = RunConfig::new(Command::Stratify, "adjoint:A3");
    c.svg = Some("unused.svg".into());
    let (code, _, err) = run_capture(&c);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("rank 1 or 2"), "{err}");
}

#[test]
fn candidates_and_dedup() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let mut c = RunConfig::new(Command::Candidates, "g2-adjoint");
    c.json = Some(path.clone());
    assert_eq!(run_capture(&c).0, EXIT_OK);
    let reps: JsonCandidateList = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    c.no_dedup = true;
    assert_eq!(run_capture(&c).0, EXIT_OK);
    let all: JsonCandidateList = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reps.candidates.len(), 6);
    assert!(all.candidates.len() > 6);
}

#[test]
fn tree_and_verify_commands() {
    let (code, out, _) = run_capture(&RunConfig::new(Command::Tree, "gl2-ex3:2,1"));
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[-]") && out.contains("not stratifying"), "{out}");
    let (code, out, _) = run_capture(&RunConfig::new(Command::Verify, "sl3-forms:3"));
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("engine and oracle agree"), "{out}");
}

#[test]
fn binary_grammar() {
    let bin = env!("CARGO_BIN_EXE_nullcone");
    let out = Process::new(bin).args(["stratify", "gl2-ex3:2,1", "--fast"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("3 candidates, 2 strata"));
    let out = Process::new(bin).arg("catalog-list").output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("sl2-forms"));
    let out = Process::new(bin).args(["stratify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
}
